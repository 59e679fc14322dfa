#include "caliber/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "caliber/catalog.hpp"
#include "caliber/json_io.hpp"
#include "caliber/liealg.hpp"
#include "caliber/triality.hpp"
#include "caliber/verify.hpp"

namespace caliber {

namespace {

using nlohmann::json;

KForm load_form(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormParseError("cannot open input file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return form_from_json_text(buffer.str());
}

std::string format_double(double v) {
    std::ostringstream out;
    out.precision(12);
    out << v;
    return out.str();
}

json span_json(const Span7& c) {
    json a = json::array();
    for (const auto& x : c) a.push_back(format_rational(x));
    return a;
}

int run_comass(const std::string& path, const std::string& method,
               const SolverConfig& cfg, bool as_json) {
    KForm form = load_form(path);
    SpanSplit split = form.degree == 4 ? to_span(form) : SpanSplit{};

    auto print_exact = [&](const Rat& value) {
        if (as_json) {
            std::cout << json{{"value", format_rational(value)},
                              {"method", "exact"},
                              {"exact", true}}
                             .dump()
                      << "\n";
        } else {
            std::cout << format_rational(value) << "\n";
        }
        return 0;
    };
    auto print_float = [&](double value, double tol, const std::string& how) {
        if (as_json) {
            std::cout << json{{"value", value}, {"tol", tol}, {"method", how}, {"exact", false}}
                             .dump()
                      << "\n";
        } else {
            std::cout << format_double(value) << "\n";
        }
        return 0;
    };

    if (method == "exact") {
        if (form.degree != 4 || !split.residual.is_zero()) {
            std::cerr << "comass: input is not a combination of the 7 generators; "
                         "the exact method does not apply (try --method auto)\n";
            return 1;
        }
        return print_exact(comass_exact(split.coeffs));
    }
    if (method == "numeric") {
        ComassResult result = comass_numeric(form, cfg);
        if (!result.converged) {
            std::cerr << "comass: no restart converged within the iteration budget\n";
            return 1;
        }
        return print_float(result.value, 1e-6, "numeric");
    }

    // auto: exact when the form already lies in the span; otherwise rotate a
    // self-dual form into it and go exact; fall back to the numeric solver.
    if (form.degree == 4 && split.residual.is_zero()) {
        return print_exact(comass_exact(split.coeffs));
    }
    if (form.degree == 4 && !form.is_zero()) {
        KForm anti = sub(form, hodge(form));
        double scale = std::sqrt(rat_to_double(norm_sq(form)));
        if (std::sqrt(rat_to_double(norm_sq(anti))) <= 1e-10 * scale) {
            NormalFormResult nf = normal_form(form, cfg);
            if (nf.success) {
                return print_float(rat_to_double(comass_exact(nf.coeffs)), 1e-6,
                                   "normal-form+exact");
            }
        }
    }
    ComassResult result = comass_numeric(form, cfg);
    if (!result.converged) {
        std::cerr << "comass: no restart converged within the iteration budget\n";
        return 1;
    }
    return print_float(result.value, 1e-6, "numeric");
}

int run_verify(const SolverConfig& cfg, bool as_json) {
    VerifyReport report = verify_all(cfg);
    if (as_json) {
        std::cout << report_to_json(report);
    } else {
        std::cout << report_to_text(report);
    }
    return report.failed == 0 ? 0 : 1;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += "\"";
    return out;
}

std::string join_span(const Span7& c, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < 7; ++i) {
        if (i > 0) out += sep;
        out += format_rational(c[i]);
    }
    return out;
}

int run_catalog(const std::string& format) {
    if (format == "json") {
        std::cout << catalog_json_text();
        return 0;
    }
    auto entries = catalog_entries();
    if (format == "csv") {
        std::cout << "type_label,label,name,expression,coeffs,comass,norm2,ratio,stab_dim\n";
        for (const auto& e : entries) {
            std::cout << csv_quote(e.type_label) << ",phi," << csv_quote(e.name) << ","
                      << csv_quote(e.expression) << "," << csv_quote(join_span(e.coeffs, ";"))
                      << "," << format_rational(e.comass) << "," << format_rational(e.norm2)
                      << "," << format_rational(e.ratio) << "," << e.stab_dim << "\n";
            for (const auto& v : e.variants) {
                std::cout << csv_quote(e.type_label) << "," << v.label << "(" << v.source
                          << ")," << csv_quote(e.name) << "," << csv_quote(v.expression)
                          << "," << csv_quote(join_span(v.coeffs, ";")) << ","
                          << format_rational(v.comass) << "," << format_rational(v.norm2)
                          << "," << format_rational(v.ratio) << "," << v.stab_dim << "\n";
            }
        }
        return 0;
    }

    std::cout << "| type | name | combination | coeffs | comass | norm2 | ratio | stab |\n";
    std::cout << "|------|------|-------------|--------|--------|-------|-------|------|\n";
    for (const auto& e : entries) {
        std::cout << "| " << e.type_label << " | " << e.name << " | " << e.expression
                  << " | (" << join_span(e.coeffs, ", ") << ") | "
                  << format_rational(e.comass) << " | " << format_rational(e.norm2)
                  << " | " << format_rational(e.ratio) << " | " << e.stab_dim << " |\n";
        for (const auto& v : e.variants) {
            std::cout << "| " << e.type_label << " " << v.label << " (" << v.source
                      << ") | | " << v.expression << " | (" << join_span(v.coeffs, ", ")
                      << ") | " << format_rational(v.comass) << " | "
                      << format_rational(v.norm2) << " | " << format_rational(v.ratio)
                      << " | " << v.stab_dim << " |\n";
        }
    }
    std::cout << "\ncomass-2 combinations:\n";
    for (const auto& ce : counterexamples()) {
        std::cout << "- " << ce.label << " = " << ce.expression << ": coeffs ("
                  << join_span(ce.coeffs, ", ") << "), comass "
                  << format_rational(ce.comass) << ", ratio " << format_rational(ce.ratio)
                  << "; half form is orbit type " << ce.orbit_type << "\n";
    }
    return 0;
}

int run_decompose(const std::string& path, bool as_json) {
    KForm form = load_form(path);
    if (form.degree != 4) {
        std::cerr << "decompose: expected a 4-form\n";
        return 1;
    }
    SpanSplit split = to_span(form);
    if (!split.residual.is_zero()) {
        std::cerr << "decompose: input has a component outside the 7-generator span\n";
        return 1;
    }
    auto weights = decompose_convex(split.coeffs);
    if (!weights) {
        if (as_json) {
            std::cout << json{{"in_hull", false}}.dump() << "\n";
        } else {
            std::cout << "not in the convex hull of the 8 vertex forms\n";
        }
        return 1;
    }
    const auto& verts = vertices();
    if (as_json) {
        json items = json::array();
        for (std::size_t j = 0; j < 8; ++j) {
            items.push_back(json{{"vertex", verts[j].label},
                                 {"weight", format_rational((*weights)[j])}});
        }
        std::cout << json{{"in_hull", true}, {"weights", items}}.dump() << "\n";
    } else {
        for (std::size_t j = 0; j < 8; ++j) {
            std::cout << verts[j].label << " " << format_rational((*weights)[j]) << "\n";
        }
    }
    return 0;
}

int run_stabilizer(const std::string& path, bool as_json) {
    KForm form = load_form(path);
    StabilizerResult result = stabilizer(form);
    const auto& order = plane_index_order();
    if (as_json) {
        json planes = json::array();
        for (const auto& [p, q] : order) {
            planes.push_back(json::array({p, q}));
        }
        json kernel = json::array();
        for (const auto& element : result.kernel) {
            json row = json::array();
            for (const auto& c : element) row.push_back(format_rational(c));
            kernel.push_back(row);
        }
        std::cout << json{{"dim", result.dim}, {"plane_order", planes}, {"kernel", kernel}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "dim " << result.dim << "\n";
        for (const auto& element : result.kernel) {
            bool first = true;
            for (std::size_t k = 0; k < element.size(); ++k) {
                if (element[k] == 0) continue;
                if (!first) std::cout << " + ";
                std::cout << format_rational(element[k]) << "*K[" << order[k].first << ","
                          << order[k].second << "]";
                first = false;
            }
            if (first) std::cout << "0";
            std::cout << "\n";
        }
    }
    return 0;
}

int run_normal_form(const std::string& path, const SolverConfig& cfg, bool as_json) {
    KForm form = load_form(path);
    NormalFormResult nf = normal_form(form, cfg);
    if (as_json) {
        json rotation = json::array();
        for (int i = 0; i < 8; ++i) {
            json row = json::array();
            for (int j = 0; j < 8; ++j) row.push_back(nf.rotation(i, j));
            rotation.push_back(row);
        }
        std::cout << json{{"success", nf.success},
                          {"residual", nf.residual},
                          {"tol", 1e-8},
                          {"restarts_used", nf.restarts_used},
                          {"coeffs", span_json(nf.coeffs)},
                          {"rotation", rotation}}
                         .dump()
                  << "\n";
    } else {
        std::cout << (nf.success ? "success" : "failure") << " residual "
                  << format_double(nf.residual) << " after " << nf.restarts_used
                  << " restart(s)\n";
        if (nf.success) {
            std::cout << "span coeffs: " << join_span(nf.coeffs, " ") << "\n";
        }
    }
    return nf.success ? 0 : 1;
}

int run_random(const std::string& cls, std::uint64_t seed) {
    FormClass fc = FormClass::span;
    if (cls == "self_dual") fc = FormClass::self_dual;
    if (cls == "general") fc = FormClass::general;
    std::cout << form_to_json_text(random_form(seed, fc), 2) << "\n";
    return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"comass, triality-transfer, and calibration toolkit for 4-forms on R^8"};
    app.require_subcommand(1);

    std::string input_path;
    std::string method = "auto";
    std::string format = "md";
    std::string form_class = "span";
    SolverConfig cfg;
    bool as_json = false;

    auto add_solver_flags = [&](CLI::App* cmd) {
        cmd->add_option("--restarts", cfg.restarts, "random restarts for the solver");
        cmd->add_option("--seed", cfg.seed, "master RNG seed");
    };

    CLI::App* comass = app.add_subcommand("comass", "comass of a 4-form");
    comass->add_option("--input", input_path, "form JSON file")->required();
    comass->add_option("--method", method, "exact, numeric, or auto")
        ->check(CLI::IsMember({"exact", "numeric", "auto"}));
    comass->add_flag("--json", as_json, "JSON output");
    add_solver_flags(comass);

    CLI::App* verify = app.add_subcommand("verify", "replay the acceptance suite");
    verify->add_flag("--json", as_json, "JSON output");
    add_solver_flags(verify);

    CLI::App* catalog = app.add_subcommand("catalog", "the 9 calibration orbit types");
    catalog->add_option("--format", format, "md, json, or csv")
        ->check(CLI::IsMember({"md", "json", "csv"}));

    CLI::App* decompose =
        app.add_subcommand("decompose", "convex vertex decomposition of a span form");
    decompose->add_option("--input", input_path, "form JSON file")->required();
    decompose->add_flag("--json", as_json, "JSON output");

    CLI::App* stab = app.add_subcommand("stabilizer", "stabilizer dimension and kernel");
    stab->add_option("--input", input_path, "form JSON file")->required();
    stab->add_flag("--json", as_json, "JSON output");

    CLI::App* nform =
        app.add_subcommand("normal-form", "rotate a self-dual form into the span");
    nform->add_option("--input", input_path, "form JSON file")->required();
    nform->add_flag("--json", as_json, "JSON output");
    add_solver_flags(nform);

    CLI::App* random = app.add_subcommand("random", "seeded random form JSON");
    random->add_option("--class", form_class, "span, self_dual, or general")
        ->check(CLI::IsMember({"span", "self_dual", "general"}));
    random->add_option("--seed", cfg.seed, "master RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (comass->parsed()) return run_comass(input_path, method, cfg, as_json);
        if (verify->parsed()) return run_verify(cfg, as_json);
        if (catalog->parsed()) return run_catalog(format);
        if (decompose->parsed()) return run_decompose(input_path, as_json);
        if (stab->parsed()) return run_stabilizer(input_path, as_json);
        if (nform->parsed()) return run_normal_form(input_path, cfg, as_json);
        if (random->parsed()) return run_random(form_class, cfg.seed);
    } catch (const FormParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace caliber
