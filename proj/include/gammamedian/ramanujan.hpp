#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include "median.hpp"
#include "quadrature.hpp"
#include "xi.hpp"

namespace gammamedian {

enum class ThetaMethod { sum, integral, series };

inline std::string_view to_string(ThetaMethod m) {
    switch (m) {
    case ThetaMethod::sum: return "sum";
    case ThetaMethod::integral: return "integral";
    case ThetaMethod::series: return "series";
    }
    return "unknown";
}

struct ThetaResult {
    double argument = 0.0;
    double theta = 0.0;
    ThetaMethod method = ThetaMethod::sum;
    double est_error = 0.0;
};

inline constexpr int kThetaMaxN = 170;

/// theta(n) from e^n / 2 = sum_{k<n} n^k / k! + theta(n) n^n / n!.
///
/// Everything is scaled by e^{-n}: the terms e^{-n} n^k / k! follow from a
/// recurrence and are summed with Neumaier compensation in long double.
inline ThetaResult theta_integer(int n) {
    if (n < 1 || n > kThetaMaxN) {
        throw std::out_of_range("theta_integer: n must lie in [1, 170]");
    }
    using ld = long double;
    const ld nn = n;
    ld term = std::exp(-nn);
    ld sum = 0.0L;
    ld comp = 0.0L;
    for (int k = 0; k < n; ++k) {
        const ld t = sum + term;
        comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
        term *= nn / static_cast<ld>(k + 1);
    }
    // term now equals e^{-n} n^n / n!
    const ld partial = sum + comp;
    const ld theta = (0.5L - partial) / term;
    const ld eps = std::numeric_limits<ld>::epsilon();
    const ld est = (static_cast<ld>(n) + 2.0L) * eps * (0.5L + partial) / term;
    return {static_cast<double>(n), static_cast<double>(theta), ThetaMethod::sum, static_cast<double>(est)};
}

/// theta(x) = (x/2) int_0^inf e^{-xt} xi(t+1) dt on [0, T], T = max(50/x, 10);
/// the tail is below (1/2) e^{-xT} because xi <= 1.
inline ThetaResult theta_real(double x, double tol = 1e-12) {
    if (!(x > 0.0)) {
        throw std::domain_error("theta_real: requires x > 0");
    }
    const double upper = std::max(50.0 / x, 10.0);
    auto f = [x](double t) { return 0.5 * x * std::exp(-x * t) * xi_eval(t + 1.0); };
    // split where xi switches from its Taylor series to the branch formula
    const double split = std::min(kXiSwitchRadius, upper);
    const auto near = integrate(f, 0.0, split, tol);
    const auto far = integrate(f, split, upper, tol, tol * 1e-3);
    const double tail = 0.5 * std::exp(-x * upper);
    return {x, near.value + far.value, ThetaMethod::integral, near.error + far.error + tail};
}

/// sum_{k=0}^{n_terms-1} xi^{(k)}(1) / (2 x^k). Asymptotic, not convergent.
inline double theta_series(double x, std::size_t n_terms, const XiDerivativeTable& table = default_xi_table()) {
    if (n_terms > table.size()) {
        throw std::invalid_argument("theta_series: n_terms exceeds table size");
    }
    if (!(x > 0.0)) {
        throw std::domain_error("theta_series: requires x > 0");
    }
    double acc = 0.0;
    for (std::size_t k = n_terms; k-- > 0;) {
        acc = acc / x + 0.5 * table[k].to_double();
    }
    return acc;
}

/// |(1 - theta(n)) - (e/n)^n int_n^{m(n+1)} t^n e^{-t} dt|, the integrand
/// written as exp(n + n log(t/n) - t).
inline double choi_identity_residual(int n) {
    if (n < 1 || n > kThetaMaxN) {
        throw std::out_of_range("choi_identity_residual: n must lie in [1, 170]");
    }
    const double nn = n;
    const double upper = median(nn + 1.0).m;
    const auto rhs = integrate(
        [nn](double t) { return std::exp(nn + nn * std::log(t / nn) - t); }, nn, upper, 1e-13);
    return std::abs((1.0 - theta_integer(n).theta) - rhs.value);
}

/// Watson's phi(t) = (135/8) xi'(t + 1).
inline double watson_phi(double t) {
    if (!(t >= 0.0)) {
        throw std::domain_error("watson_phi: requires t >= 0");
    }
    return 135.0 / 8.0 * xi_prime_eval(t + 1.0);
}

} // namespace gammamedian
