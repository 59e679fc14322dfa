#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "caliber/catalog.hpp"
#include "caliber/json_io.hpp"
#include "caliber/liealg.hpp"
#include "caliber/optimize.hpp"
#include "caliber/triality.hpp"
#include "caliber/verify.hpp"

namespace py = pybind11;

namespace {

using namespace caliber;

Span7 span_from_list(const std::vector<std::string>& c) {
    if (c.size() != 7) throw std::invalid_argument("expected 7 rational strings");
    Span7 out;
    for (std::size_t i = 0; i < 7; ++i) out[i] = parse_rational(c[i]);
    return out;
}

std::vector<std::string> span_to_list(const Span7& c) {
    std::vector<std::string> out;
    out.reserve(7);
    for (const auto& x : c) out.push_back(format_rational(x));
    return out;
}

SolverConfig make_config(int restarts, std::uint64_t seed) {
    SolverConfig cfg;
    if (restarts > 0) cfg.restarts = restarts;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_caliber, m) {
    m.doc() = "exact and numeric comass machinery for 4-forms on R^8";

    m.def("cayley", [] { return span_to_list(cayley()); },
          "span coefficients of the Cayley form");

    m.def(
        "comass_exact",
        [](const std::vector<std::string>& c) {
            return format_rational(comass_exact(span_from_list(c)));
        },
        py::arg("span_coeffs"),
        "exact comass of a combination of the 7 generators, as a rational string");

    m.def(
        "wirtinger_ratio",
        [](const std::vector<std::string>& c) {
            return format_rational(wirtinger_ratio(span_from_list(c)));
        },
        py::arg("span_coeffs"), "squared norm over squared comass, exact");

    m.def(
        "psi_inv",
        [](const std::vector<std::string>& c) {
            std::vector<std::string> out;
            for (const auto& d : psi_inv(span_from_list(c))) {
                out.push_back(format_rational(d));
            }
            return out;
        },
        py::arg("span_coeffs"),
        "triality transfer: diagonal of the traceless symmetric matrix");

    m.def(
        "decompose_convex",
        [](const std::vector<std::string>& c) -> py::object {
            auto weights = decompose_convex(span_from_list(c));
            if (!weights) return py::none();
            std::vector<std::string> out;
            for (const auto& w : *weights) out.push_back(format_rational(w));
            return py::cast(out);
        },
        py::arg("span_coeffs"),
        "convex vertex weights when the form lies in the hull, else None");

    m.def(
        "from_span_json",
        [](const std::vector<std::string>& c) {
            return form_to_json_text(from_span(span_from_list(c)), 2);
        },
        py::arg("span_coeffs"), "full form JSON of a span combination");

    m.def(
        "stabilizer_dim",
        [](const std::string& form_json) {
            return stabilizer_dim(form_from_json_text(form_json));
        },
        py::arg("form_json"), "dimension of the annihilator in so(8), exact");

    m.def(
        "comass_numeric",
        [](const std::string& form_json, int restarts, std::uint64_t seed) {
            ComassResult r =
                comass_numeric(form_from_json_text(form_json), make_config(restarts, seed));
            py::dict out;
            out["value"] = r.value;
            out["converged"] = r.converged;
            out["best_restart"] = r.best_restart;
            return out;
        },
        py::arg("form_json"), py::arg("restarts") = 0, py::arg("seed") = kDefaultSeed,
        "Riemannian-ascent comass estimate");

    m.def(
        "normal_form",
        [](const std::string& form_json, int restarts, std::uint64_t seed) {
            NormalFormResult r =
                normal_form(form_from_json_text(form_json), make_config(restarts, seed));
            py::dict out;
            out["success"] = r.success;
            out["residual"] = r.residual;
            out["restarts_used"] = r.restarts_used;
            out["coeffs"] = span_to_list(r.coeffs);
            return out;
        },
        py::arg("form_json"), py::arg("restarts") = 0, py::arg("seed") = kDefaultSeed,
        "rotate a self-dual form into the generator span");

    m.def(
        "random_form_json",
        [](std::uint64_t seed, const std::string& cls) {
            FormClass fc = FormClass::span;
            if (cls == "self_dual") fc = FormClass::self_dual;
            if (cls == "general") fc = FormClass::general;
            return form_to_json_text(random_form(seed, fc), 2);
        },
        py::arg("seed"), py::arg("cls") = "span", "seeded random form JSON");

    m.def("catalog_json", [] { return catalog_json_text(); },
          "the 9 orbit types and the comass-2 combinations, as JSON");
}
