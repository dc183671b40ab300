#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "rational.hpp"
#include "reversion.hpp"

namespace gammamedian {

/// Exact values xi^{(k)}(1), k = 0..max_order, together with the Taylor
/// coefficients xi^{(k)}(1)/k! in double precision for evaluation near t = 1.
class XiDerivativeTable {
public:
    explicit XiDerivativeTable(std::vector<Rational> values) : values_(std::move(values)) {
        if (values_.empty()) {
            throw std::invalid_argument("XiDerivativeTable: empty table");
        }
        taylor_.reserve(values_.size());
        for (std::size_t k = 0; k < values_.size(); ++k) {
            taylor_.push_back((values_[k] / Rational(factorial(static_cast<unsigned>(k)))).to_double());
        }
    }

    const std::vector<Rational>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    std::size_t max_order() const { return values_.size() - 1; }
    const Rational& operator[](std::size_t k) const { return values_[k]; }

    /// xi^{(k)}(1)/k! as double.
    const std::vector<double>& taylor() const { return taylor_; }

private:
    std::vector<Rational> values_;
    std::vector<double> taylor_;
};

/// xi^{(j-1)}(1) = 2 a_{2j} j! for j = 1..n, where a_k are the reversion
/// coefficients of h. Needs a_1..a_{2n}, hence b_1..b_{2n}.
inline XiDerivativeTable xi_derivatives(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("xi_derivatives: n must be positive");
    }
    const auto a = inverse_coefficients(h_polynomial(2 * n), 2 * n);
    std::vector<Rational> values;
    values.reserve(n);
    for (std::size_t j = 1; j <= n; ++j) {
        values.push_back(Rational(2) * a[2 * j - 1].to_rational() *
                         Rational(factorial(static_cast<unsigned>(j))));
    }
    return XiDerivativeTable(std::move(values));
}

/// Below this distance from t = 1 the Taylor series replaces the direct formula.
inline constexpr double kXiSwitchRadius = 0.5;
/// Highest derivative order used by the series branch of the default table.
inline constexpr std::size_t kXiSeriesOrder = 10;
inline constexpr double kBranchTolerance = 1e-14;

/// Table of xi^{(0..kXiSeriesOrder)}(1), computed once.
inline const XiDerivativeTable& default_xi_table() {
    static const XiDerivativeTable table = xi_derivatives(kXiSeriesOrder + 1);
    return table;
}

/// Negative (u) and non-negative (v) solutions of e^{-z} + z = t.
struct BranchPair {
    double u = 0.0;
    double v = 0.0;
    double t = 1.0;
};

namespace detail {

inline void require_xi_domain(double t, const char* who) {
    if (!(t >= 1.0)) {
        throw std::domain_error(std::string(who) + ": requires t >= 1");
    }
}

inline double branch_residual(double z, double t) { return std::exp(-z) + z - t; }

inline double solve_branch(double t, double guess, double lo, double hi, double tol) {
    auto f = [t](double z) {
        return std::pair<double, double>(std::exp(-z) + z - t, -std::expm1(-z));
    };
    std::uintmax_t iters = 200;
    double z = boost::math::tools::newton_raphson_iterate(
        f, std::clamp(guess, lo, hi), lo, hi, std::numeric_limits<double>::digits, iters);
    const double floor_tol = std::max(tol, 4.0 * std::numeric_limits<double>::epsilon() * t);
    if (std::abs(branch_residual(z, t)) > floor_tol) {
        throw std::runtime_error("solve_branches: residual above tolerance at t = " + std::to_string(t));
    }
    return z;
}

} // namespace detail

/// Solves e^{-z} + z = t on both sides of 0 by bracketed Newton.
/// The tolerance is floored at the rounding level of t.
inline BranchPair solve_branches(double t, double tol = kBranchTolerance) {
    detail::require_xi_domain(t, "solve_branches");
    if (!(tol > 0.0)) {
        throw std::invalid_argument("solve_branches: tolerance must be positive");
    }
    if (t == 1.0) {
        return {0.0, 0.0, 1.0};
    }
    const double s = std::sqrt(2.0 * (t - 1.0));
    const double v_guess = t < 2.0 ? s : t - std::exp(-t);
    const double u_guess = t < 2.0 ? -s : -std::log(t + std::log(t));
    BranchPair r;
    r.t = t;
    r.v = detail::solve_branch(t, v_guess, 0.0, t, tol);
    r.u = detail::solve_branch(t, u_guess, -(1.0 + s) - 1e-12, 0.0, tol);
    return r;
}

/// xi(t) = 1/(1 - e^{-v}) + 1/(1 - e^{-u}) for t >= 1, using the Taylor
/// series at 1 inside kXiSwitchRadius.
inline double xi_eval(double t, const XiDerivativeTable& table = default_xi_table()) {
    detail::require_xi_domain(t, "xi_eval");
    const double d = t - 1.0;
    if (d < kXiSwitchRadius) {
        const auto& c = table.taylor();
        double acc = 0.0;
        for (std::size_t k = c.size(); k-- > 0;) {
            acc = acc * d + c[k];
        }
        return acc;
    }
    const auto b = solve_branches(t);
    return -1.0 / std::expm1(-b.v) - 1.0 / std::expm1(-b.u);
}

/// xi'(t) = -e^{-u}/(1 - e^{-u})^3 - e^{-v}/(1 - e^{-v})^3, series near 1.
inline double xi_prime_eval(double t, const XiDerivativeTable& table = default_xi_table()) {
    detail::require_xi_domain(t, "xi_prime_eval");
    const double d = t - 1.0;
    if (d < kXiSwitchRadius) {
        const auto& c = table.taylor();
        double acc = 0.0;
        for (std::size_t k = c.size(); k-- > 1;) {
            acc = acc * d + static_cast<double>(k) * c[k];
        }
        return acc;
    }
    const auto b = solve_branches(t);
    auto term = [](double z) {
        const double w = -std::expm1(-z);
        return -std::exp(-z) / (w * w * w);
    };
    return term(b.u) + term(b.v);
}

} // namespace gammamedian
