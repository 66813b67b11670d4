// Command-line interface for closed-form Fisher-Rao distances, Fisher
// information matrices, geodesic paths, and the numeric verification
// suite. Numbers are printed with %.17g so output is byte-deterministic
// and round-trips through binary64.

#include "raodist/families_discrete.hpp"
#include "raodist/family.hpp"
#include "raodist/oracle.hpp"
#include "raodist/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cctype>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using raodist::Mat;
using raodist::Vec;

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string coord_list(const Vec& v, const char* sep) {
    std::string out;
    for (int i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += g17(v[i]);
    }
    return out;
}

// Human-facing views round to 12 significant digits so 0.3 prints as 0.3;
// machine formats (json/csv) keep the exact %.17g round-trip.
std::string coord_display(const Vec& v, const char* sep) {
    std::string out;
    for (int i = 0; i < v.size(); ++i) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.12g", v[i]);
        if (i) out += sep;
        out += buf;
    }
    return out;
}

std::string json_array(const Vec& v) { return "[" + coord_list(v, ", ") + "]"; }

Vec parse_coords(const std::string& text) {
    std::vector<double> vals;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        try {
            std::size_t pos = 0;
            vals.push_back(std::stod(item, &pos));
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos])))
                ++pos;
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw raodist::DomainError("could not parse coordinate '" + item + "'");
        }
    }
    if (vals.empty()) throw raodist::DomainError("empty coordinate list");
    Vec v(static_cast<int>(vals.size()));
    for (std::size_t i = 0; i < vals.size(); ++i) v[static_cast<int>(i)] = vals[i];
    return v;
}

void flatten_json(const nlohmann::json& node, std::vector<double>& out) {
    if (node.is_array()) {
        for (const auto& child : node) flatten_json(child, out);
    } else if (node.is_number()) {
        out.push_back(node.get<double>());
    } else {
        throw raodist::DomainError("JSON coordinates must be numbers or arrays");
    }
}

Vec parse_coords_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw raodist::DomainError(std::string("invalid JSON: ") + e.what());
    }
    std::vector<double> vals;
    flatten_json(j, vals);
    if (vals.empty()) throw raodist::DomainError("empty coordinate list");
    Vec v(static_cast<int>(vals.size()));
    for (std::size_t i = 0; i < vals.size(); ++i) v[static_cast<int>(i)] = vals[i];
    return v;
}

std::map<std::string, double> parse_hyper(const std::vector<std::string>& items) {
    std::map<std::string, double> hyper;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw raodist::DomainError("hyperparameter '" + item +
                                       "' must have the form name=value");
        try {
            hyper[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw raodist::DomainError("could not parse hyperparameter value in '" +
                                       item + "'");
        }
    }
    return hyper;
}

struct PointSpec {
    std::string plain;
    std::string json;

    Vec resolve(const char* which) const {
        if (!plain.empty() && !json.empty())
            throw raodist::DomainError(std::string("give --") + which + " or --" +
                                       which + "-json, not both");
        if (!plain.empty()) return parse_coords(plain);
        if (!json.empty()) return parse_coords_json(json);
        throw raodist::DomainError(std::string("missing --") + which);
    }
};

int run_dist(const std::string& family, const std::map<std::string, double>& hyper,
             const PointSpec& a_spec, const PointSpec& b_spec,
             const std::string& format) {
    auto fam = raodist::make_family(family, hyper);
    const auto a = raodist::validate_params(fam, a_spec.resolve("a"));
    const auto b = raodist::validate_params(fam, b_spec.resolve("b"));
    const double d = raodist::distance(a, b);
    if (format == "json") {
        std::cout << "{\"family\": \"" << fam->id() << "\", \"a\": "
                  << json_array(a.coords) << ", \"b\": " << json_array(b.coords)
                  << ", \"distance\": " << g17(d) << "}\n";
    } else if (format == "csv") {
        std::cout << "distance\n" << g17(d) << "\n";
    } else {
        std::cout << g17(d) << "\n";
    }
    return 0;
}

int run_fisher(const std::string& family, const std::map<std::string, double>& hyper,
               const PointSpec& at_spec, const std::string& format) {
    auto fam = raodist::make_family(family, hyper);
    const auto at = raodist::validate_params(fam, at_spec.resolve("at"));
    const Mat g = raodist::fisher(at);
    if (format == "json") {
        std::cout << "{\"family\": \"" << fam->id() << "\", \"at\": "
                  << json_array(at.coords) << ", \"fisher\": [";
        for (int i = 0; i < g.rows(); ++i) {
            std::cout << (i ? ", [" : "[");
            for (int j = 0; j < g.cols(); ++j)
                std::cout << (j ? ", " : "") << g17(g(i, j));
            std::cout << "]";
        }
        std::cout << "]}\n";
    } else {
        const char* sep = format == "csv" ? "," : " ";
        for (int i = 0; i < g.rows(); ++i) {
            for (int j = 0; j < g.cols(); ++j)
                std::cout << (j ? sep : "") << g17(g(i, j));
            std::cout << "\n";
        }
    }
    return 0;
}

int run_geodesic(const std::string& family, const std::map<std::string, double>& hyper,
                 const PointSpec& a_spec, const PointSpec& b_spec, int steps,
                 const std::string& format) {
    auto fam = raodist::make_family(family, hyper);
    const auto a = raodist::validate_params(fam, a_spec.resolve("a"));
    const auto b = raodist::validate_params(fam, b_spec.resolve("b"));
    const auto path = raodist::geodesic_path(a, b, steps);
    if (format == "json") {
        std::cout << "{\"family\": \"" << fam->id() << "\", \"steps\": " << steps
                  << ", \"path\": [";
        for (std::size_t i = 0; i < path.size(); ++i)
            std::cout << (i ? ", " : "") << json_array(path[i]);
        std::cout << "]}\n";
    } else if (format == "csv") {
        std::cout << "t";
        for (int j = 0; j < path.front().size(); ++j) std::cout << ",coord" << j + 1;
        std::cout << "\n";
        for (std::size_t i = 0; i < path.size(); ++i) {
            std::cout << g17(static_cast<double>(i) / steps) << ","
                      << coord_list(path[i], ",") << "\n";
        }
    } else {
        for (std::size_t i = 0; i < path.size(); ++i)
            std::cout << g17(static_cast<double>(i) / steps) << " "
                      << coord_list(path[i], " ") << "\n";
    }
    return 0;
}

int run_verify(const raodist::VerifyOptions& options, const std::string& format) {
    const auto report = raodist::run_verification(options);
    if (format == "json") {
        std::cout << raodist::verify_report_json(report);
    } else {
        for (const auto& fr : report.families) {
            std::printf("%-36s fisher %-12.3g", fr.family.c_str(),
                        fr.max_fisher_rel_err);
            if (fr.bvp_checked)
                std::printf(" bvp %-12.3g", fr.max_bvp_rel_err);
            else
                std::printf(" bvp %-12s", "-");
            if (fr.hessian_checked)
                std::printf(" hessian %-12.3g", fr.max_hessian_rel_err);
            else
                std::printf(" hessian %-12s", "-");
            std::printf(" %s\n", fr.pass ? "ok" : "FAIL");
        }
        std::printf("%s\n", report.pass ? "PASS" : "FAIL");
    }
    return report.pass ? 0 : 1;
}

struct TableRow {
    std::string family;
    std::map<std::string, double> hyper;
    std::vector<double> a;
    std::vector<double> b;
};

int run_table(const std::string& format) {
    const std::vector<TableRow> rows = {
        {"gaussian", {}, {2, 0.5}, {5, 1}},
        {"laplace", {}, {-1, 1}, {1, 1}},
        {"generalized_gaussian", {{"beta", 1.5}}, {0, 1}, {1, 2}},
        {"logistic", {}, {0, 1}, {1, 2}},
        {"cauchy", {}, {2, 0.5}, {5, 1}},
        {"student_t", {{"nu", 3}}, {0, 1}, {1, 2}},
        {"exponential", {}, {2}, {5}},
        {"rayleigh", {}, {1}, {2.5}},
        {"erlang", {{"k", 3}}, {2}, {5}},
        {"log_gaussian", {}, {2, 0.5}, {5, 1}},
        {"inverse_gaussian", {}, {2, 1}, {2, 4}},
        {"gumbel", {}, {0, 1}, {1, 1}},
        {"frechet", {}, {1, 1}, {2, 1}},
        {"weibull", {}, {1, 2}, {3, 2}},
        {"reversed_weibull", {}, {1, 2}, {3, 2}},
        {"pareto", {}, {1, 3}, {2, 3}},
        {"power_function", {}, {2, 3}, {1, 5}},
        {"binomial", {{"n", 4}}, {0.25}, {0.75}},
        {"poisson", {}, {1}, {4}},
        {"geometric", {}, {0.3}, {0.6}},
        {"negative_binomial", {{"r", 5}}, {0.3}, {0.6}},
        {"categorical", {{"n", 3}}, {0.7, 0.2, 0.1}, {0.1, 0.3, 0.6}},
        {"multinomial", {{"n", 3}, {"trials", 5}}, {0.7, 0.2, 0.1}, {0.1, 0.3, 0.6}},
        {"negative_multinomial", {{"n", 3}, {"x_n", 2}}, {0.7, 0.2, 0.1}, {0.1, 0.3, 0.6}},
        {"wishart", {{"m", 2}, {"n", 3}}, {1, 0, 1}, {2, 0, 0.5}},
        {"inverse_wishart", {{"m", 2}, {"n", 3}}, {1, 0, 1}, {2, 0, 0.5}},
    };
    const bool csv = format == "csv";
    const bool json = format == "json";
    if (csv) std::cout << "family,a,b,distance\n";
    if (json) std::cout << "[\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        auto fam = raodist::make_family(row.family, row.hyper);
        Vec av(static_cast<int>(row.a.size())), bv(static_cast<int>(row.b.size()));
        for (std::size_t i = 0; i < row.a.size(); ++i) av[static_cast<int>(i)] = row.a[i];
        for (std::size_t i = 0; i < row.b.size(); ++i) bv[static_cast<int>(i)] = row.b[i];
        const auto a = raodist::validate_params(fam, av);
        const auto b = raodist::validate_params(fam, bv);
        const double d = raodist::distance(a, b);
        if (json) {
            std::cout << "  {\"family\": \"" << fam->id() << "\", \"a\": "
                      << json_array(a.coords) << ", \"b\": " << json_array(b.coords)
                      << ", \"distance\": " << g17(d) << "}"
                      << (r + 1 < rows.size() ? ",\n" : "\n");
        } else if (csv) {
            std::cout << fam->id() << ",\"" << coord_list(a.coords, " ") << "\",\""
                      << coord_list(b.coords, " ") << "\"," << g17(d) << "\n";
        } else {
            std::printf("%-36s (%s) -> (%s)  d = %.10g\n", fam->id().c_str(),
                        coord_display(a.coords, ", ").c_str(),
                        coord_display(b.coords, ", ").c_str(), d);
        }
    }
    if (json) std::cout << "]\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form Fisher-Rao distances with a numeric verification suite"};
    app.require_subcommand(1);

    std::string family, format = "text";
    std::vector<std::string> hyper_items;
    PointSpec a_spec, b_spec, at_spec;
    int steps = 100;

    auto add_family_opts = [&](CLI::App* cmd) {
        cmd->add_option("--family", family, "family name, e.g. gaussian")->required();
        cmd->add_option("--hyper", hyper_items,
                        "hyperparameter name=value (repeatable)");
        cmd->add_option("--format", format, "text, json, or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    CLI::App* dist = app.add_subcommand("dist", "closed-form distance between two points");
    add_family_opts(dist);
    dist->add_option("--a", a_spec.plain, "first point, comma-separated coordinates");
    dist->add_option("--b", b_spec.plain, "second point, comma-separated coordinates");
    dist->add_option("--a-json", a_spec.json, "first point as a JSON array");
    dist->add_option("--b-json", b_spec.json, "second point as a JSON array");

    CLI::App* fisher = app.add_subcommand("fisher", "Fisher information matrix at a point");
    add_family_opts(fisher);
    fisher->add_option("--at", at_spec.plain, "evaluation point, comma-separated");
    fisher->add_option("--at-json", at_spec.json, "evaluation point as a JSON array");

    CLI::App* geodesic =
        app.add_subcommand("geodesic", "sample the geodesic path between two points");
    add_family_opts(geodesic);
    geodesic->add_option("--a", a_spec.plain, "first point, comma-separated coordinates");
    geodesic->add_option("--b", b_spec.plain, "second point, comma-separated coordinates");
    geodesic->add_option("--a-json", a_spec.json, "first point as a JSON array");
    geodesic->add_option("--b-json", b_spec.json, "second point as a JSON array");
    geodesic->add_option("--steps", steps, "number of segments (default 100)")
        ->check(CLI::PositiveNumber);

    raodist::VerifyOptions vopt;
    CLI::App* verify = app.add_subcommand(
        "verify", "check every closed form against the numeric oracle");
    verify->add_option("--seed", vopt.seed, "RNG seed for sampled points")
        ->envname("RAODIST_SEED");
    verify->add_option("--points", vopt.fisher_points,
                       "Fisher check points per family (default 10)");
    verify->add_option("--pairs", vopt.bvp_pairs,
                       "geodesic BVP pairs per family (default 20)");
    verify->add_option("--hessian-points", vopt.hessian_points,
                       "Hessian-form check points per family (default 2)");
    verify->add_option("--tol", vopt.fisher_rel_tol,
                       "Fisher relative tolerance (default 1e-4)");
    verify->add_option("--bvp-tol", vopt.bvp_rel_tol,
                       "BVP relative tolerance (default 3e-3)");
    verify->add_option("--hessian-tol", vopt.hessian_rel_tol,
                       "Hessian relative tolerance (default 1e-5)");
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* table = app.add_subcommand(
        "table", "closed-form distances at canonical points for every family");
    table->add_option("--format", format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const auto hyper = parse_hyper(hyper_items);
        if (dist->parsed()) return run_dist(family, hyper, a_spec, b_spec, format);
        if (fisher->parsed()) return run_fisher(family, hyper, at_spec, format);
        if (geodesic->parsed())
            return run_geodesic(family, hyper, a_spec, b_spec, steps, format);
        if (verify->parsed()) return run_verify(vopt, format);
        if (table->parsed()) return run_table(format);
    } catch (const raodist::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
