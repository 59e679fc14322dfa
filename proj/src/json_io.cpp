#include "caliber/json_io.hpp"

#include <json.hpp>

namespace caliber {

namespace {

using nlohmann::json;

Rat coeff_from_json(const json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw FormParseError(where + ": " + e.what());
        }
    }
    if (j.is_number_integer())
        return Rat(static_cast<long>(j.get<std::int64_t>()));
    throw FormParseError(where + ": coefficient must be an integer or a rational string");
}

json coeff_to_json(const Rat& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p())
        return json(r.get_num().get_si());
    return json(format_rational(r));
}

}  // namespace

KForm form_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FormParseError("top level must be an object");
    if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<int>() != kDim)
        throw FormParseError("field \"n\" must be the integer 8");
    if (!doc.contains("k") || !doc["k"].is_number_integer())
        throw FormParseError("field \"k\" must be an integer degree");
    int k = doc["k"].get<int>();
    if (k < 0 || k > kDim) throw FormParseError("degree \"k\" out of range 0..8");
    KForm form = kform(k);
    if (!doc.contains("terms")) return form;
    const json& terms = doc["terms"];
    if (!terms.is_array()) throw FormParseError("field \"terms\" must be an array");
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string where = "terms[" + std::to_string(t) + "]";
        const json& term = terms[t];
        if (!term.is_object() || !term.contains("index") || !term.contains("coeff"))
            throw FormParseError(where + ": expected {\"index\": [...], \"coeff\": ...}");
        const json& jidx = term["index"];
        if (!jidx.is_array() || static_cast<int>(jidx.size()) != k)
            throw FormParseError(where + ".index: expected " + std::to_string(k) +
                                 " entries");
        MultiIndex idx;
        for (std::size_t p = 0; p < jidx.size(); ++p) {
            const std::string at = where + ".index[" + std::to_string(p) + "]";
            if (!jidx[p].is_number_integer())
                throw FormParseError(at + ": index entries must be integers");
            int v = jidx[p].get<int>();
            if (v < 1 || v > kDim)
                throw FormParseError(at + ": index " + std::to_string(v) +
                                     " outside 1..8");
            if (!idx.empty() && v == idx.back())
                throw FormParseError(at + ": duplicate index " + std::to_string(v));
            if (!idx.empty() && v < idx.back())
                throw FormParseError(at + ": indices must be strictly increasing (" +
                                     std::to_string(v) + " after " +
                                     std::to_string(idx.back()) + ")");
            idx.push_back(v);
        }
        Rat c = coeff_from_json(term["coeff"], where + ".coeff");
        if (form.coeffs.count(idx))
            throw FormParseError(where + ".index: multi-index repeats an earlier term");
        if (c != 0) form.coeffs.emplace(std::move(idx), std::move(c));
    }
    return form;
}

std::string form_to_json_text(const KForm& form, int indent) {
    json terms = json::array();
    for (const auto& [idx, c] : form.coeffs) {
        json term;
        term["index"] = idx;
        term["coeff"] = coeff_to_json(c);
        terms.push_back(std::move(term));
    }
    json doc;
    doc["n"] = kDim;
    doc["k"] = form.degree;
    doc["terms"] = std::move(terms);
    return doc.dump(indent);
}

std::string span_to_json_text(const Span7& c) {
    json arr = json::array();
    for (const Rat& x : c) arr.push_back(format_rational(x));
    return arr.dump();
}

Span7 span_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array() || doc.size() != 7)
        throw FormParseError("span coefficients must be an array of 7 rationals");
    Span7 out;
    for (std::size_t i = 0; i < 7; ++i)
        out[i] = coeff_from_json(doc[i], "[" + std::to_string(i) + "]");
    return out;
}

}  // namespace caliber
