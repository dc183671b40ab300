#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/math/tools/roots.hpp>

#include "errors.hpp"
#include "quadrature.hpp"
#include "special.hpp"

namespace gammamedian {

inline constexpr double kMedianTolerance = 1e-12;

/// Below this x the median underflows double precision (m < DBL_MIN);
/// `m` is then 0 and `log_m` carries the value.
inline constexpr double kMedianUnderflowX = 0.0015;

/// Median of the gamma(x) distribution, P(x, m) = 1/2.
template <typename Real = double>
struct MedianResult {
    Real x = 0;
    Real m = 0;
    Real log_m = 0;
    Real residual = 0; ///< |P(x, m) - 1/2|
    int iterations = 0;
};

namespace detail {

template <typename Real>
MedianResult<Real> median_newton(Real x, Real tol) {
    using std::abs;
    using std::exp;
    using std::log;
    using std::max;
    const Real half = Real(1) / 2;
    const Real third = Real(1) / 3;
    const Real ln2 = log(Real(2));
    std::uintmax_t iters = 200;
    MedianResult<Real> r;
    r.x = x;
    // Brackets: max(x - 1/3, x 2^{-1/x}) < m < x.
    if (x >= 1) {
        auto f = [x, half](Real m) {
            return std::pair<Real, Real>(regularized_p(x, m) - half,
                                         exp((x - 1) * log(m) - m - ln_gamma<Real>(x)));
        };
        const Real lo = max(Real(x - third), Real(x * exp(-ln2 / x)));
        const Real guess = x - third + Real(8) / (405 * x);
        r.m = boost::math::tools::newton_raphson_iterate(
            f, std::clamp(guess, lo, x), lo, x, std::numeric_limits<Real>::digits - 1, iters);
        r.log_m = log(r.m);
        r.residual = abs(regularized_p(x, r.m) - half);
    } else {
        // Solve in s = log m; dP/ds = density * m.
        auto f = [x, half](Real s) {
            return std::pair<Real, Real>(regularized_p_log(x, s) - half, density_times_t_log(x, s));
        };
        Real lo = log(x) - ln2 / x;
        if (x > third) {
            lo = max(lo, Real(log(x - third)));
        }
        const Real hi = log(x);
        const Real guess = -Real(kConstants.euler_gamma) - ln2 / x;
        r.log_m = boost::math::tools::newton_raphson_iterate(
            f, std::clamp(guess, lo, hi), lo, hi, std::numeric_limits<Real>::digits - 1, iters);
        r.m = exp(r.log_m);
        r.residual = abs(regularized_p_log(x, r.log_m) - half);
    }
    r.iterations = static_cast<int>(iters);
    if (!(r.residual <= tol)) {
        throw ConvergenceError("median: residual above tolerance", iters);
    }
    return r;
}

} // namespace detail

/// Bracketed Newton on P(x, m) = 1/2 with bisection fallback. For x < 1 the
/// unknown is log m, which keeps tiny medians representable.
template <typename Real = double>
MedianResult<Real> median(Real x, Real tol = Real(kMedianTolerance)) {
    if (!(x > 0)) {
        throw std::domain_error("median: requires x > 0");
    }
    if (!(tol > 0)) {
        throw std::invalid_argument("median: tolerance must be positive");
    }
    return detail::median_newton(x, tol);
}

/// phi(x) = log(x / m(x)), evaluated in the log domain.
inline double phi_num(double x) {
    const auto r = median(x);
    return std::log(x) - r.log_m;
}

enum class MedianDerivativeMethod { finite_diff, diff_eq };

namespace detail {

/// Central difference of log m with one Richardson step, scaled by m.
/// Medians are taken in extended precision to keep the difference quotient
/// clear of rounding noise.
inline double median_prime_finite_diff(double x) {
    const long double h = static_cast<long double>(x) * 1e-5L;
    const long double tol = 1e-15L;
    auto log_m = [tol](long double at) { return median<long double>(at, tol).log_m; };
    const long double xl = x;
    const long double d1 = (log_m(xl + h) - log_m(xl - h)) / (2 * h);
    const long double d2 = (log_m(xl + h / 2) - log_m(xl - h / 2)) / h;
    const long double dlog = (4 * d2 - d1) / 3;
    return static_cast<double>(std::exp(median<long double>(xl, tol).log_m) * dlog);
}

/// From d/dx P(x, m(x)) = 0:
///   rho(m) m' = psi(x)/2 - (1/Gamma(x)) int_0^m log t e^{-t} t^{x-1} dt,
/// with rho the gamma(x) density. For x < 2 the part int_0^m log t t^{x-1} dt
/// is integrated in closed form and only the e^{-t} - 1 remainder goes to
/// quadrature.
inline double median_prime_diff_eq(double x) {
    const auto med = median(x);
    const double m = med.m;
    const double lgx = ln_gamma(x);
    double integral = 0.0;
    if (x < 2.0) {
        const double lm = med.log_m;
        const double closed = std::exp(x * lm - lgx) * (lm / x - 1.0 / (x * x));
        const auto rest = integrate_tanh_sinh(
            [x, lgx](double t) {
                if (t <= 0.0) return 0.0;
                const double lt = std::log(t);
                return lt * std::exp((x - 1.0) * lt - lgx) * std::expm1(-t);
            },
            0.0, m, kQuadratureTolerance, 1e-12 * std::abs(closed));
        integral = closed + rest.value;
    } else {
        integral = integrate_tanh_sinh(
                       [x, lgx](double t) {
                           if (t <= 0.0) return 0.0;
                           const double lt = std::log(t);
                           return lt * std::exp((x - 1.0) * lt - t - lgx);
                       },
                       0.0, m, kQuadratureTolerance, 1e-15)
                       .value;
    }
    const double numerator = 0.5 * digamma(x) - integral;
    const double rho = std::exp((x - 1.0) * med.log_m - m - lgx);
    return numerator / rho;
}

} // namespace detail

inline double median_prime(double x, MedianDerivativeMethod method = MedianDerivativeMethod::finite_diff) {
    if (!(x > 0.0)) {
        throw std::domain_error("median_prime: requires x > 0");
    }
    return method == MedianDerivativeMethod::finite_diff ? detail::median_prime_finite_diff(x)
                                                         : detail::median_prime_diff_eq(x);
}

} // namespace gammamedian
