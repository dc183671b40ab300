#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/version.hpp>
#include <json.hpp>

#include "asymptotics.hpp"
#include "golden.hpp"
#include "json_io.hpp"
#include "median.hpp"
#include "quadrature.hpp"
#include "ramanujan.hpp"
#include "reversion.hpp"
#include "xi.hpp"

namespace gammamedian {

inline constexpr const char* kVersion = "0.1.0";

enum class Spacing { linear, log };

struct Grid {
    double xmin = 0.05;
    double xmax = 100.0;
    int points = 400;
    Spacing spacing = Spacing::log;

    std::vector<double> nodes() const {
        std::vector<double> xs(static_cast<std::size_t>(points));
        for (int i = 0; i < points; ++i) {
            const double s = static_cast<double>(i) / (points - 1);
            xs[static_cast<std::size_t>(i)] = spacing == Spacing::log
                                                  ? std::exp(std::log(xmin) + s * (std::log(xmax) - std::log(xmin)))
                                                  : xmin + s * (xmax - xmin);
        }
        xs.front() = xmin;
        xs.back() = xmax;
        return xs;
    }
};

struct CheckSpec {
    std::string name = "bounds";
    Grid grid;
    double tolerance = kMedianTolerance;

    /// Empty when valid, otherwise the reason.
    std::string validate() const {
        if (!(grid.xmin < grid.xmax)) return "xmin must be below xmax";
        if (grid.points < 2) return "need at least 2 grid points";
        if (!(tolerance > 0.0)) return "tolerance must be positive";
        if (grid.spacing == Spacing::log && !(grid.xmin > 0.0)) return "log spacing needs xmin > 0";
        if (!(grid.xmin > 0.0)) return "grid must lie in x > 0";
        return {};
    }
};

/// One line of a report. `worst_violation` is signed: the check passes when
/// it is negative (strict inequalities, monotonicity) or non-positive
/// (tolerance checks, where it is error - tolerance).
struct CheckEntry {
    std::string name;
    bool pass = false;
    double worst_violation = std::numeric_limits<double>::quiet_NaN();
    double worst_x = std::numeric_limits<double>::quiet_NaN();
    double tolerance = std::numeric_limits<double>::quiet_NaN();
    std::string detail;
};

inline void to_json(nlohmann::json& j, const CheckEntry& c) {
    j = nlohmann::json{{"name", c.name},
                       {"pass", c.pass},
                       {"worst_violation", c.worst_violation},
                       {"worst_x", c.worst_x},
                       {"tolerance", c.tolerance},
                       {"detail", c.detail}};
}

struct VerificationReport {
    std::string suite;
    std::vector<CheckEntry> checks;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json observations = nlohmann::json::object();

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.pass; });
    }

    nlohmann::json to_json() const {
        return nlohmann::json{{"suite", suite},
                              {"pass", all_pass()},
                              {"checks", checks},
                              {"params", params},
                              {"observations", observations}};
    }
};

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline std::string fmt_list(const std::vector<double>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? ", " : "") + fmt(v[i]);
    }
    return s + "]";
}

/// Tracks the smallest slack of a strict inequality.
struct SlackTracker {
    std::string name;
    double min_slack = std::numeric_limits<double>::infinity();
    double at = std::numeric_limits<double>::quiet_NaN();
    int count = 0;

    void add(double slack, double x) {
        ++count;
        if (!(slack >= min_slack)) { // NaN lands here too
            min_slack = slack;
            at = x;
        }
    }

    CheckEntry entry(double tolerance) const {
        CheckEntry e;
        e.name = name;
        e.tolerance = tolerance;
        if (count == 0) {
            e.pass = true;
            e.detail = "vacuous on this grid";
            return e;
        }
        e.worst_violation = -min_slack;
        e.worst_x = at;
        e.pass = min_slack > 0.0;
        e.detail = "min slack " + fmt(min_slack) + " over " + std::to_string(count) + " points";
        return e;
    }
};

/// Tracks the largest error of a check against a fixed tolerance.
struct ErrorTracker {
    std::string name;
    double tolerance = 0.0;
    double max_error = -std::numeric_limits<double>::infinity();
    double at = std::numeric_limits<double>::quiet_NaN();

    void add(double error, double x) {
        if (!(error <= max_error)) {
            max_error = error;
            at = x;
        }
    }

    CheckEntry entry() const {
        CheckEntry e;
        e.name = name;
        e.tolerance = tolerance;
        e.worst_violation = max_error - tolerance;
        e.worst_x = at;
        e.pass = max_error <= tolerance;
        e.detail = "max error " + fmt(max_error);
        return e;
    }
};

inline CheckEntry failed_entry(const std::string& name, double x, const std::string& why) {
    CheckEntry e;
    e.name = name;
    e.worst_x = x;
    e.detail = why;
    return e;
}

/// log m(x) in long double, for finite differences.
inline long double log_median_ld(long double x) { return median<long double>(x, 1e-15L).log_m; }

/// phi'(x) by a Richardson-extrapolated central difference of phi.
inline double phi_prime_fd(double x) {
    const long double xl = x;
    const long double h = xl * 1e-5L;
    auto phi = [](long double t) { return std::log(t) - log_median_ld(t); };
    const long double d1 = (phi(xl + h) - phi(xl - h)) / (2 * h);
    const long double d2 = (phi(xl + h / 2) - phi(xl - h / 2)) / h;
    return static_cast<double>((4 * d2 - d1) / 3);
}

} // namespace detail

/// Strict inequalities on a grid: Chen-Rubin bounds, the sharpened upper
/// bound, 1/3 < x phi < log 2 with x phi decreasing, m increasing,
/// 0 < m' < 1 (both methods, x >= mprime_min) and 1 - x phi' < e^phi.
inline std::vector<CheckEntry> check_bounds(const CheckSpec& spec, double mprime_min = 0.2,
                                            nlohmann::json* observations = nullptr) {
    if (const auto why = spec.validate(); !why.empty()) {
        return {detail::failed_entry(spec.name, std::numeric_limits<double>::quiet_NaN(), "invalid spec: " + why)};
    }
    const auto xs = spec.grid.nodes();
    const double ln2 = std::numbers::ln2;
    detail::SlackTracker upper{"chen_rubin_upper"}, lower{"chen_rubin_lower"}, sharp{"sharpened_upper"},
        xphi_lo{"x_phi_lower"}, xphi_hi{"x_phi_upper"}, xphi_dec{"x_phi_decreasing"}, m_inc{"m_increasing"},
        mp_fd{"m_prime_bounds_finite_diff"}, mp_de{"m_prime_bounds_diff_eq"}, cr_phi{"phi_derivative_bound"};

    std::vector<double> ms, log_ms;
    double prev_xphi = std::numeric_limits<double>::quiet_NaN();
    double prev_log_m = std::numeric_limits<double>::quiet_NaN();
    for (const double x : xs) {
        try {
            const auto med = median(x, spec.tolerance);
            const double m = med.m;
            const double phi = std::log(x) - med.log_m;
            const double xphi = x * phi;
            upper.add(x - m, x);
            if (x - 1.0 / 3.0 > 0.0) {
                lower.add(m - (x - 1.0 / 3.0), x);
            }
            sharp.add(x - 1.0 / 3.0 + 1.0 / (18.0 * x) - m, x);
            xphi_lo.add(xphi - 1.0 / 3.0, x);
            xphi_hi.add(ln2 - xphi, x);
            if (!std::isnan(prev_xphi)) {
                xphi_dec.add(prev_xphi - xphi, x);
                m_inc.add(med.log_m - prev_log_m, x);
            }
            if (x >= mprime_min) {
                const double d1 = median_prime(x, MedianDerivativeMethod::finite_diff);
                const double d2 = median_prime(x, MedianDerivativeMethod::diff_eq);
                mp_fd.add(std::min(d1, 1.0 - d1), x);
                mp_de.add(std::min(d2, 1.0 - d2), x);
            }
            cr_phi.add(std::exp(phi) - (1.0 - x * detail::phi_prime_fd(x)), x);
            prev_xphi = xphi;
            prev_log_m = med.log_m;
            ms.push_back(m);
            log_ms.push_back(med.log_m);
        } catch (const std::exception& ex) {
            return {detail::failed_entry(spec.name, x, std::string("evaluation failed: ") + ex.what())};
        }
    }
    if (observations != nullptr && xs.size() >= 3) {
        // divided second differences of m; convexity is reported, not asserted
        double min_dd = std::numeric_limits<double>::infinity();
        double at = xs[1];
        for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
            const double left = (ms[i] - ms[i - 1]) / (xs[i] - xs[i - 1]);
            const double right = (ms[i + 1] - ms[i]) / (xs[i + 1] - xs[i]);
            const double dd = 2.0 * (right - left) / (xs[i + 1] - xs[i - 1]);
            if (dd < min_dd) {
                min_dd = dd;
                at = xs[i];
            }
        }
        (*observations)["m_second_difference_min"] = min_dd;
        (*observations)["m_second_difference_min_x"] = at;
    }
    const double tol = spec.tolerance;
    return {upper.entry(tol),   lower.entry(tol), sharp.entry(tol), xphi_lo.entry(tol), xphi_hi.entry(tol),
            xphi_dec.entry(tol), m_inc.entry(tol), mp_fd.entry(tol), mp_de.entry(tol),  cr_phi.entry(tol)};
}

/// |m(1) - log 2| <= tol.
inline CheckEntry check_median_at_one(double tol = 1e-12) {
    detail::ErrorTracker t{"median_at_one", tol};
    try {
        t.add(std::abs(median(1.0).m - std::numbers::ln2), 1.0);
    } catch (const std::exception& ex) {
        return detail::failed_entry(t.name, 1.0, ex.what());
    }
    return t.entry();
}

/// Behaviour near zero, m(x) ~ e^{-gamma} 2^{-1/x}: m(x)^x within band of
/// 1/2 at the last point, and |ratio - 1| strictly decreasing along xs.
inline std::vector<CheckEntry> check_small_x(const std::vector<double>& xs, double band = 0.05) {
    std::vector<CheckEntry> out;
    try {
        std::vector<double> gaps;
        for (const double x : xs) {
            const double log_m = median(x).log_m;
            const double log_ratio = log_m + kConstants.euler_gamma + kConstants.log2 / x;
            gaps.push_back(std::abs(std::expm1(log_ratio)));
        }
        detail::SlackTracker mono{"small_x_ratio_monotone"};
        for (std::size_t i = 1; i < xs.size(); ++i) {
            mono.add(gaps[i - 1] - gaps[i], xs[i]);
        }
        auto e = mono.entry(std::numeric_limits<double>::quiet_NaN());
        e.detail += "; |ratio - 1| = " + detail::fmt_list(gaps);
        const double x = xs.back();
        const double power = std::exp(x * median(x).log_m);
        detail::ErrorTracker pw{"small_x_power", band};
        pw.add(std::abs(power - 0.5), x);
        auto p = pw.entry();
        p.detail = "m(x)^x = " + detail::fmt(power);
        out.push_back(p);
        out.push_back(e);
    } catch (const std::exception& ex) {
        out.push_back(detail::failed_entry("small_x", std::numeric_limits<double>::quiet_NaN(), ex.what()));
    }
    return out;
}

/// 2 int_0^{phi} e^{-x(e^{-u}+u)} du (Gauss-Kronrod) against
/// int_1^T xi(t) e^{-xt} dt (tanh-sinh) plus the tail bound e^{-xT}/x.
inline double key_identity_lhs(double x) {
    const double phi = phi_num(x);
    return 2.0 * integrate([x](double u) { return std::exp(-x * (std::exp(-u) + u)); }, 0.0, phi, 1e-13).value;
}

inline double key_identity_rhs(double x, double tail_tol = 1e-14) {
    const double upper = std::max(2.0, 1.0 + std::log(1.0 / (x * tail_tol)) / x);
    auto f = [x](double t) { return xi_eval(t) * std::exp(-x * t); };
    const double split = 1.0 + kXiSwitchRadius;
    const auto a = integrate_tanh_sinh(f, 1.0, split, 1e-13);
    const auto b = integrate_tanh_sinh(f, split, upper, 1e-12, tail_tol);
    return a.value + b.value;
}

inline CheckEntry check_key_identity(const std::vector<double>& x_values, double tol) {
    detail::ErrorTracker t{"key_identity", tol};
    for (const double x : x_values) {
        try {
            if (!(x > 0.0)) {
                throw std::domain_error("key identity requires x > 0");
            }
            t.add(std::abs(key_identity_lhs(x) - key_identity_rhs(x)), x);
        } catch (const std::exception& ex) {
            return detail::failed_entry(t.name, x, ex.what());
        }
    }
    return t.entry();
}

using Real50 = boost::multiprecision::cpp_bin_float_50;

/// Expansion of m through the m_n / x^n term.
inline AsymptoticExpansion median_expansion(std::size_t n) { return asymp_m(n + 1); }

/// |m(x) - expansion_n(x)| x^n, with the median in 50-digit arithmetic
/// (the residual drops well below double resolution of m).
inline double expansion_residual(std::size_t n, double x) {
    const Real50 xr(x);
    const Real50 m = median<Real50>(xr, Real50("1e-45")).m;
    const Real50 r = abs(m - eval_expansion<Real50>(median_expansion(n), xr)) * pow(xr, static_cast<int>(n));
    return r.convert_to<double>();
}

inline std::vector<CheckEntry> check_expansion_residuals(const std::vector<std::size_t>& orders,
                                                         const std::vector<double>& x_values) {
    std::vector<CheckEntry> out;
    std::vector<Real50> medians;
    try {
        for (const double x : x_values) {
            medians.push_back(median<Real50>(Real50(x), Real50("1e-45")).m);
        }
    } catch (const std::exception& ex) {
        out.push_back(detail::failed_entry("expansion_residual", std::numeric_limits<double>::quiet_NaN(), ex.what()));
        return out;
    }
    for (const std::size_t n : orders) {
        const std::string name = "expansion_residual_" + std::to_string(n);
        if (n < 1 || n > 10) {
            out.push_back(detail::failed_entry(name, std::numeric_limits<double>::quiet_NaN(), "order must lie in [1, 10]"));
            continue;
        }
        const auto expansion = median_expansion(n);
        std::vector<double> r;
        for (std::size_t i = 0; i < x_values.size(); ++i) {
            const Real50 xr(x_values[i]);
            r.push_back((abs(medians[i] - eval_expansion<Real50>(expansion, xr)) * pow(xr, static_cast<int>(n)))
                            .convert_to<double>());
        }
        detail::SlackTracker dec{name};
        for (std::size_t i = 1; i < r.size(); ++i) {
            dec.add(r[i - 1] - r[i], x_values[i]);
        }
        auto e = dec.entry(std::numeric_limits<double>::quiet_NaN());
        e.detail = "r = " + detail::fmt_list(r);
        out.push_back(e);
    }
    return out;
}

/// m'(x) from both methods against the derivative of the m expansion
/// 1 - 8/(405x^2) - 368/(25515x^3).
inline CheckEntry check_mprime_expansion(const std::vector<double>& x_values, double tol) {
    detail::ErrorTracker t{"m_prime_expansion", tol};
    const auto deriv = differentiate_expansion(median_expansion(2));
    for (const double x : x_values) {
        try {
            const double ref = eval_expansion(deriv, x);
            t.add(std::abs(median_prime(x, MedianDerivativeMethod::finite_diff) - ref), x);
            t.add(std::abs(median_prime(x, MedianDerivativeMethod::diff_eq) - ref), x);
        } catch (const std::exception& ex) {
            return detail::failed_entry(t.name, x, ex.what());
        }
    }
    return t.entry();
}

namespace detail {

inline CheckEntry exact_table_entry(const std::string& name, const std::vector<Rational>& got,
                                    const std::vector<Rational>& want) {
    CheckEntry e;
    e.name = name;
    e.tolerance = 0.0;
    if (got.size() != want.size()) {
        e.detail = "length " + std::to_string(got.size()) + " vs " + std::to_string(want.size());
        return e;
    }
    int mismatches = 0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        if (got[i] != want[i]) {
            if (mismatches == 0) {
                e.worst_x = static_cast<double>(i);
                e.detail = "first mismatch at index " + std::to_string(i) + ": " + got[i].to_string() + " vs " +
                           want[i].to_string();
            }
            ++mismatches;
        }
    }
    e.worst_violation = mismatches;
    e.pass = mismatches == 0;
    if (e.pass) {
        e.detail = std::to_string(got.size()) + " exact matches";
    }
    return e;
}

inline CheckEntry exact_bool_entry(const std::string& name, bool ok, const std::string& what) {
    CheckEntry e;
    e.name = name;
    e.tolerance = 0.0;
    e.pass = ok;
    e.worst_violation = ok ? 0.0 : 1.0;
    e.detail = what;
    return e;
}

} // namespace detail

/// Exact tables against the reference values and the series-kernel properties.
inline std::vector<CheckEntry> check_coefficients(std::size_t kernel_order = 24) {
    std::vector<CheckEntry> out;
    {
        const auto xi = xi_derivatives(11);
        out.push_back(detail::exact_table_entry("golden_xi_derivatives", xi.values(), golden::xi_derivatives()));
    }
    {
        const auto phi = asymp_phi(10);
        auto e = detail::exact_table_entry("golden_phi_coefficients", phi.inverse_coeffs(), golden::phi_coefficients());
        if (!phi.is_pure_inverse()) {
            e.pass = false;
            e.detail += "; unexpected x or constant term";
        }
        out.push_back(e);
    }
    {
        const auto m = asymp_m(10);
        std::vector<Rational> got{m.linear_coeff(), m.const_coeff()};
        std::vector<Rational> want{Rational(1), golden::m_constant()};
        got.insert(got.end(), m.inverse_coeffs().begin(), m.inverse_coeffs().end());
        const auto tail = golden::m_coefficients();
        want.insert(want.end(), tail.begin(), tail.end());
        out.push_back(detail::exact_table_entry("golden_m_coefficients", got, want));
    }
    const auto b = h_polynomial(kernel_order);
    const auto a = inverse_coefficients(b, kernel_order);
    {
        const auto round = series_compose(as_series(a, kernel_order), as_series(b, kernel_order));
        bool ok = true;
        for (std::size_t k = 0; k <= kernel_order; ++k) {
            ok = ok && round[k] == QSqrt2(k == 1 ? 1 : 0);
        }
        out.push_back(detail::exact_bool_entry("reversion_round_trip", ok,
                                               "compose(inverse, h) = z mod z^" + std::to_string(kernel_order + 1)));
    }
    {
        const auto h = as_series(b, kernel_order + 1);
        const auto sq = series_mul(h, h);
        bool ok = sq[0].is_zero() && sq[1].is_zero();
        for (std::size_t k = 2; k <= kernel_order + 1; ++k) {
            const Rational want(k % 2 == 0 ? 1 : -1, factorial(static_cast<unsigned>(k)));
            ok = ok && sq[k] == QSqrt2(want);
        }
        out.push_back(detail::exact_bool_entry("h_square_identity", ok,
                                               "h^2 = e^{-z} + z - 1 mod z^" + std::to_string(kernel_order + 2)));
    }
    {
        bool ok = true;
        std::size_t bad = 0;
        for (std::size_t k = 1; k <= kernel_order; ++k) {
            const bool b_ok = b[k - 1].rat_part().is_zero();
            const bool a_ok = k % 2 == 0 ? a[k - 1].sqrt2_part().is_zero() : a[k - 1].rat_part().is_zero();
            if ((!b_ok || !a_ok) && ok) {
                bad = k;
            }
            ok = ok && b_ok && a_ok;
        }
        auto e = detail::exact_bool_entry("coefficient_parity", ok,
                                          ok ? "all b_k in sqrt2 Q, a_k alternate Q / sqrt2 Q"
                                             : "parity fails at index " + std::to_string(bad));
        out.push_back(e);
    }
    return out;
}

/// 1/3 < theta(n) < 1/2, theta(1) = e/2 - 1, sum vs integral, Choi identity.
inline std::vector<CheckEntry> check_theta(int n_max, const std::vector<int>& cross_n, double tol) {
    std::vector<CheckEntry> out;
    try {
        detail::SlackTracker bounds{"theta_bounds"};
        for (int n = 1; n <= n_max; ++n) {
            const double th = theta_integer(n).theta;
            bounds.add(std::min(th - 1.0 / 3.0, 0.5 - th), n);
        }
        out.push_back(bounds.entry(std::numeric_limits<double>::quiet_NaN()));

        detail::ErrorTracker one{"theta_at_one", 1e-12};
        one.add(std::abs(theta_integer(1).theta - (std::numbers::e / 2.0 - 1.0)), 1.0);
        out.push_back(one.entry());

        detail::ErrorTracker cross{"theta_cross_method", tol};
        detail::ErrorTracker choi{"choi_identity", tol};
        for (const int n : cross_n) {
            cross.add(std::abs(theta_integer(n).theta - theta_real(n).theta), n);
            choi.add(choi_identity_residual(n), n);
        }
        out.push_back(cross.entry());
        out.push_back(choi.entry());
    } catch (const std::exception& ex) {
        out.push_back(detail::failed_entry("theta", std::numeric_limits<double>::quiet_NaN(), ex.what()));
    }
    return out;
}

/// Flat key = value configuration. Lines starting with '#' are comments.
struct VerifyConfig {
    std::string suite = "all";
    CheckSpec bounds;
    double mprime_min = 0.2;
    std::vector<double> small_x{0.1, 0.08, 0.06, 0.05};
    std::vector<double> key_identity_x{0.5, 1.0, 2.0, 5.0};
    double key_identity_tol = 1e-8;
    std::vector<std::size_t> residual_orders{2, 3, 4};
    std::vector<double> residual_x{10.0, 20.0, 40.0, 80.0};
    std::vector<double> mprime_expansion_x{10.0, 20.0, 40.0};
    double mprime_expansion_tol = 5e-6;
    int theta_n_max = 100;
    std::vector<int> theta_cross_n{1, 2, 5, 10, 20};
    double theta_tol = 1e-7;
    std::size_t kernel_order = 24;
    double xi_csv_max = 20.0;
    int xi_csv_points = 200;

    void set(const std::string& key, const std::string& value);

    static VerifyConfig from_stream(std::istream& in);

    static VerifyConfig from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) {
            throw std::runtime_error("cannot open config file: " + path);
        }
        return from_stream(in);
    }

    nlohmann::json to_json() const {
        return nlohmann::json{{"suite", suite},
                              {"grid_min", bounds.grid.xmin},
                              {"grid_max", bounds.grid.xmax},
                              {"grid_points", bounds.grid.points},
                              {"grid_spacing", bounds.grid.spacing == Spacing::log ? "log" : "linear"},
                              {"tolerance", bounds.tolerance},
                              {"mprime_min", mprime_min},
                              {"small_x", small_x},
                              {"key_identity_x", key_identity_x},
                              {"key_identity_tol", key_identity_tol},
                              {"residual_orders", residual_orders},
                              {"residual_x", residual_x},
                              {"mprime_expansion_x", mprime_expansion_x},
                              {"mprime_expansion_tol", mprime_expansion_tol},
                              {"theta_n_max", theta_n_max},
                              {"theta_cross_n", theta_cross_n},
                              {"theta_tol", theta_tol},
                              {"kernel_order", kernel_order},
                              {"xi_csv_max", xi_csv_max},
                              {"xi_csv_points", xi_csv_points}};
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    double d = 0.0;
    try {
        d = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v.size() || v.empty()) {
        throw std::invalid_argument("config: " + key + " expects a number, got '" + v + "'");
    }
    return d;
}

inline long parse_long(const std::string& key, const std::string& v) {
    const double d = parse_double(key, v);
    if (d != std::floor(d)) {
        throw std::invalid_argument("config: " + key + " expects an integer, got '" + v + "'");
    }
    return static_cast<long>(d);
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& key, const std::string& v, Parse parse) {
    std::vector<T> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(static_cast<T>(parse(key, trim(item))));
    }
    if (out.empty()) {
        throw std::invalid_argument("config: " + key + " expects a comma separated list");
    }
    return out;
}

} // namespace detail

inline void VerifyConfig::set(const std::string& key, const std::string& raw) {
    const std::string v = detail::trim(raw);
    using detail::parse_double;
    using detail::parse_long;
    if (key == "suite") suite = v;
    else if (key == "grid_min") bounds.grid.xmin = parse_double(key, v);
    else if (key == "grid_max") bounds.grid.xmax = parse_double(key, v);
    else if (key == "grid_points") bounds.grid.points = static_cast<int>(parse_long(key, v));
    else if (key == "grid_spacing") {
        if (v == "log") bounds.grid.spacing = Spacing::log;
        else if (v == "linear") bounds.grid.spacing = Spacing::linear;
        else throw std::invalid_argument("config: grid_spacing must be log or linear");
    }
    else if (key == "tolerance") bounds.tolerance = parse_double(key, v);
    else if (key == "mprime_min") mprime_min = parse_double(key, v);
    else if (key == "small_x") small_x = detail::parse_list<double>(key, v, parse_double);
    else if (key == "key_identity_x") key_identity_x = detail::parse_list<double>(key, v, parse_double);
    else if (key == "key_identity_tol") key_identity_tol = parse_double(key, v);
    else if (key == "residual_orders") residual_orders = detail::parse_list<std::size_t>(key, v, parse_long);
    else if (key == "residual_x") residual_x = detail::parse_list<double>(key, v, parse_double);
    else if (key == "mprime_expansion_x") mprime_expansion_x = detail::parse_list<double>(key, v, parse_double);
    else if (key == "mprime_expansion_tol") mprime_expansion_tol = parse_double(key, v);
    else if (key == "theta_n_max") theta_n_max = static_cast<int>(parse_long(key, v));
    else if (key == "theta_cross_n") theta_cross_n = detail::parse_list<int>(key, v, parse_long);
    else if (key == "theta_tol") theta_tol = parse_double(key, v);
    else if (key == "kernel_order") kernel_order = static_cast<std::size_t>(parse_long(key, v));
    else if (key == "xi_csv_max") xi_csv_max = parse_double(key, v);
    else if (key == "xi_csv_points") xi_csv_points = static_cast<int>(parse_long(key, v));
    else throw std::invalid_argument("config: unknown key '" + key + "'");
}

inline VerifyConfig VerifyConfig::from_stream(std::istream& in) {
    VerifyConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = detail::trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        }
        cfg.set(detail::trim(t.substr(0, eq)), t.substr(eq + 1));
    }
    return cfg;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"coeffs", "bounds", "identity", "residuals", "theta"};
    return names;
}

/// Runs the selected suites in fixed order. `suite` is "all" or a comma
/// separated subset of suite_names().
inline VerificationReport run_all(const VerifyConfig& cfg) {
    VerificationReport report;
    report.suite = cfg.suite;
    report.params = cfg.to_json();
    report.params["version"] = kVersion;
    report.params["boost_version"] = BOOST_LIB_VERSION;

    std::vector<std::string> selected;
    if (cfg.suite == "all") {
        selected = suite_names();
    } else {
        std::stringstream ss(cfg.suite);
        std::string s;
        while (std::getline(ss, s, ',')) {
            s = detail::trim(s);
            if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
                throw std::invalid_argument("unknown suite '" + s + "'");
            }
            selected.push_back(s);
        }
    }
    auto append = [&report](std::vector<CheckEntry> v) {
        report.checks.insert(report.checks.end(), v.begin(), v.end());
    };
    for (const auto& name : suite_names()) {
        if (std::find(selected.begin(), selected.end(), name) == selected.end()) continue;
        if (name == "coeffs") {
            append(check_coefficients(cfg.kernel_order));
        } else if (name == "bounds") {
            append(check_bounds(cfg.bounds, cfg.mprime_min, &report.observations));
            report.checks.push_back(check_median_at_one());
            append(check_small_x(cfg.small_x));
        } else if (name == "identity") {
            report.checks.push_back(check_key_identity(cfg.key_identity_x, cfg.key_identity_tol));
        } else if (name == "residuals") {
            append(check_expansion_residuals(cfg.residual_orders, cfg.residual_x));
            report.checks.push_back(check_mprime_expansion(cfg.mprime_expansion_x, cfg.mprime_expansion_tol));
        } else if (name == "theta") {
            append(check_theta(cfg.theta_n_max, cfg.theta_cross_n, cfg.theta_tol));
        }
    }
    return report;
}

namespace detail {

inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace detail

/// grid.csv: x,m,m_prime,phi,x_phi,m_expansion_n,residual_n per residual order.
/// xi.csv: t,xi on [1, xi_csv_max].
inline void write_csv_tables(const VerifyConfig& cfg, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / "grid.csv");
        out << "x,m,m_prime,phi,x_phi";
        for (const auto n : cfg.residual_orders) {
            out << ",m_expansion_" << n << ",residual_" << n;
        }
        out << '\n';
        std::vector<AsymptoticExpansion> expansions;
        for (const auto n : cfg.residual_orders) {
            expansions.push_back(median_expansion(n));
        }
        for (const double x : cfg.bounds.grid.nodes()) {
            const auto med = median(x);
            const double phi = std::log(x) - med.log_m;
            out << detail::num(x) << ',' << detail::num(med.m) << ',' << detail::num(median_prime(x)) << ','
                << detail::num(phi) << ',' << detail::num(x * phi);
            for (std::size_t i = 0; i < expansions.size(); ++i) {
                const double e = eval_expansion(expansions[i], x);
                out << ',' << detail::num(e) << ','
                    << detail::num(std::abs(med.m - e) * std::pow(x, static_cast<double>(cfg.residual_orders[i])));
            }
            out << '\n';
        }
    }
    {
        std::ofstream out(dir / "xi.csv");
        out << "t,xi\n";
        for (int i = 0; i < cfg.xi_csv_points; ++i) {
            const double t = 1.0 + (cfg.xi_csv_max - 1.0) * i / (cfg.xi_csv_points - 1);
            out << detail::num(t) << ',' << detail::num(xi_eval(t)) << '\n';
        }
    }
}

} // namespace gammamedian
