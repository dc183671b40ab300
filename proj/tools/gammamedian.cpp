#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <gammamedian.hpp>

using nlohmann::json;
namespace gm = gammamedian;

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit_coeffs(const std::string& kind, std::size_t order, const std::string& format) {
    // (label, value) rows; label is k for xi and phi, the power of x for m
    std::vector<std::pair<long, gm::Rational>> rows;
    json doc{{"kind", kind}, {"order", order}};
    if (kind == "xi") {
        const auto t = gm::xi_derivatives(order);
        for (std::size_t k = 0; k < t.size(); ++k) rows.emplace_back(static_cast<long>(k), t[k]);
        doc["coefficients"] = t.values();
    } else if (kind == "phi") {
        const auto e = gm::asymp_phi(order);
        for (std::size_t k = 1; k <= e.inverse_coeffs().size(); ++k) rows.emplace_back(static_cast<long>(k), e.inv(k));
        doc["coefficients"] = e.inverse_coeffs();
    } else {
        const auto e = gm::asymp_m(order);
        rows.emplace_back(1, e.linear_coeff());
        rows.emplace_back(0, e.const_coeff());
        for (std::size_t k = 1; k <= e.inverse_coeffs().size(); ++k) rows.emplace_back(-static_cast<long>(k), e.inv(k));
        doc["expansion"] = e;
    }
    if (format == "csv") {
        std::cout << (kind == "m" ? "power" : "k") << ",value\n";
        for (const auto& [k, v] : rows) std::cout << k << ',' << v.to_string() << '\n';
    } else {
        std::cout << doc.dump(2) << '\n';
    }
}

gm::AsymptoticExpansion expansion_for(const std::string& fn, std::size_t order) {
    if (fn == "phi") return gm::asymp_phi(order);
    if (fn == "m") return gm::asymp_m(order);
    return gm::differentiate_expansion(gm::asymp_m(order));
}

struct GridArg {
    double xmin = 0, xmax = 0;
    int points = 0;
};

GridArg parse_grid(const std::string& s) {
    GridArg g;
    const auto a = s.find(':');
    const auto b = s.find(':', a == std::string::npos ? a : a + 1);
    if (a == std::string::npos || b == std::string::npos) {
        throw std::invalid_argument("--grid expects XMIN:XMAX:N");
    }
    g.xmin = std::stod(s.substr(0, a));
    g.xmax = std::stod(s.substr(a + 1, b - a - 1));
    g.points = std::stoi(s.substr(b + 1));
    return g;
}

void write_median_grid(const GridArg& g, gm::Spacing spacing, const std::string& path) {
    gm::CheckSpec spec;
    spec.grid = {g.xmin, g.xmax, g.points, spacing};
    if (const auto why = spec.validate(); !why.empty()) {
        throw std::invalid_argument("grid: " + why);
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "x,m,m_prime,phi,x_phi\n";
    for (const double x : spec.grid.nodes()) {
        const auto r = gm::median(x);
        const double phi = std::log(x) - r.log_m;
        out << num(x) << ',' << num(r.m) << ',' << num(gm::median_prime(x)) << ',' << num(phi) << ','
            << num(x * phi) << '\n';
    }
}

json theta_json(const gm::ThetaResult& r) {
    return json{{"argument", r.argument},
                {"theta", r.theta},
                {"method", std::string(gm::to_string(r.method))},
                {"est_error", r.est_error}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gamma distribution median, its asymptotic expansions and Ramanujan's theta"};
    app.require_subcommand(1);

    auto* coeffs = app.add_subcommand("coeffs", "Exact coefficient tables as p/q strings");
    std::string coeff_kind;
    std::size_t coeff_order = 10;
    std::string coeff_format = "json";
    coeffs->add_option("kind", coeff_kind, "xi | phi | m")->required()->check(CLI::IsMember({"xi", "phi", "m"}));
    coeffs->add_option("--order", coeff_order, "Number of terms")->check(CLI::PositiveNumber);
    coeffs->add_option("--format", coeff_format)->check(CLI::IsMember({"json", "csv"}));

    auto* expand = app.add_subcommand("expand", "Asymptotic expansion at infinity");
    std::string expand_fn;
    std::size_t expand_order = 4;
    std::vector<double> expand_at;
    expand->add_option("function", expand_fn, "phi | m | mprime")
        ->required()
        ->check(CLI::IsMember({"phi", "m", "mprime"}));
    expand->add_option("--order", expand_order)->check(CLI::PositiveNumber);
    expand->add_option("--eval", expand_at, "Evaluate at these x");

    auto* med = app.add_subcommand("median", "Numerical median m(x)");
    double med_x = 0.0;
    double med_tol = gm::kMedianTolerance;
    bool med_deriv = false;
    std::string med_method = "fd";
    std::string med_grid, med_out, med_spacing = "log";
    auto* x_opt = med->add_option("--x", med_x, "Shape parameter");
    med->add_option("--tol", med_tol, "Residual tolerance on P(x, m) - 1/2");
    med->add_flag("--deriv", med_deriv, "Also report m'(x)");
    med->add_option("--method", med_method, "m' method")->check(CLI::IsMember({"fd", "diffeq"}));
    auto* grid_opt = med->add_option("--grid", med_grid, "XMIN:XMAX:N");
    med->add_option("--spacing", med_spacing)->check(CLI::IsMember({"log", "linear"}));
    med->add_option("--out", med_out, "CSV output for --grid")->needs(grid_opt);
    x_opt->excludes(grid_opt);

    auto* theta = app.add_subcommand("theta", "Ramanujan's theta");
    int theta_n = 0;
    double theta_x = 0.0;
    std::string theta_method = "integral";
    std::size_t theta_terms = 6;
    auto* n_opt = theta->add_option("--n", theta_n, "Integer argument (exact sum)");
    auto* tx_opt = theta->add_option("--x", theta_x, "Real argument");
    theta->add_option("--method", theta_method)->check(CLI::IsMember({"sum", "integral", "series"}));
    theta->add_option("--terms", theta_terms, "Terms of the asymptotic series");
    n_opt->excludes(tx_opt);

    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    std::string suite = "all", config_path, report_path, csv_dir;
    std::vector<std::string> overrides;
    verify->add_option("--suite", suite, "all or a comma separated subset of coeffs,bounds,identity,residuals,theta");
    verify->add_option("--config", config_path, "Flat key = value file")->check(CLI::ExistingFile);
    verify->add_option("--set", overrides, "key=value override, repeatable");
    verify->add_option("--out", report_path, "JSON report path (stdout if absent)");
    verify->add_option("--csv", csv_dir, "Directory for grid.csv and xi.csv");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*coeffs) {
            emit_coeffs(coeff_kind, coeff_order, coeff_format);
        } else if (*expand) {
            const auto e = expansion_for(expand_fn, expand_order);
            json doc = e;
            doc["function"] = expand_fn;
            if (!expand_at.empty()) {
                json vals = json::array();
                for (const double x : expand_at) vals.push_back({{"x", x}, {"value", gm::eval_expansion(e, x)}});
                doc["eval"] = vals;
            }
            std::cout << doc.dump(2) << '\n';
        } else if (*med) {
            if (!med_grid.empty()) {
                if (med_out.empty()) throw std::invalid_argument("--grid needs --out");
                write_median_grid(parse_grid(med_grid), med_spacing == "log" ? gm::Spacing::log : gm::Spacing::linear,
                                  med_out);
            } else {
                if (x_opt->count() == 0) throw std::invalid_argument("median needs --x or --grid");
                const auto r = gm::median(med_x, med_tol);
                json doc{{"x", r.x}, {"m", r.m}, {"log_m", r.log_m}, {"residual", r.residual}, {"iterations", r.iterations}};
                if (med_deriv) {
                    doc["m_prime"] = gm::median_prime(med_x, med_method == "fd" ? gm::MedianDerivativeMethod::finite_diff
                                                                                 : gm::MedianDerivativeMethod::diff_eq);
                }
                std::cout << doc.dump(2) << '\n';
            }
        } else if (*theta) {
            gm::ThetaResult r;
            if (n_opt->count() > 0) {
                r = gm::theta_integer(theta_n);
            } else if (tx_opt->count() > 0) {
                if (theta_method == "sum") {
                    const int n = static_cast<int>(theta_x);
                    if (n != theta_x) throw std::invalid_argument("method sum needs an integer x");
                    r = gm::theta_integer(n);
                } else if (theta_method == "integral") {
                    r = gm::theta_real(theta_x);
                } else {
                    r.argument = theta_x;
                    r.method = gm::ThetaMethod::series;
                    r.theta = gm::theta_series(theta_x, theta_terms);
                    // size of the first omitted term
                    const auto& t = gm::default_xi_table();
                    r.est_error = theta_terms < t.size()
                                      ? std::abs(0.5 * t[theta_terms].to_double() / std::pow(theta_x, theta_terms))
                                      : std::numeric_limits<double>::quiet_NaN();
                }
            } else {
                throw std::invalid_argument("theta needs --n or --x");
            }
            std::cout << theta_json(r).dump(2) << '\n';
        } else if (*verify) {
            auto cfg = config_path.empty() ? gm::VerifyConfig{} : gm::VerifyConfig::from_file(config_path);
            if (verify->count("--suite") > 0) cfg.suite = suite;
            for (const auto& kv : overrides) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos) throw std::invalid_argument("--set expects key=value");
                cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
            }
            const auto report = gm::run_all(cfg);
            const std::string text = report.to_json().dump(2) + "\n";
            if (report_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream(report_path) << text;
                for (const auto& c : report.checks) {
                    std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name << "  " << c.detail << '\n';
                }
            }
            if (!csv_dir.empty()) gm::write_csv_tables(cfg, csv_dir);
            return report.all_pass() ? 0 : 1;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
    return 0;
}
