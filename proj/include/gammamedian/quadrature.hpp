#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "errors.hpp"

namespace gammamedian {

inline constexpr double kQuadratureTolerance = 1e-10;

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
};

namespace detail {

inline void check_quadrature(const char* rule, double error, double l1, double rel_tol, double abs_tol,
                             unsigned depth) {
    if (!(error <= std::max(rel_tol * l1, abs_tol)) || !std::isfinite(error)) {
        throw ConvergenceError(std::string(rule) + ": error estimate " + std::to_string(error) +
                                   " above tolerance",
                               depth);
    }
}

} // namespace detail

/// Adaptive 15/31-point Gauss-Kronrod on [a, b]. Converged when the error
/// estimate is below rel_tol * L1 norm or abs_tol.
template <typename F>
QuadratureResult integrate(F f, double a, double b, double rel_tol = kQuadratureTolerance,
                           double abs_tol = 0.0) {
    constexpr unsigned max_depth = 15;
    double error = 0.0;
    double l1 = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, a, b, max_depth, rel_tol, &error, &l1);
    detail::check_quadrature("gauss_kronrod", error, l1, rel_tol, abs_tol, max_depth);
    return {value, error};
}

/// Double-exponential quadrature on [a, b]; tolerates integrable endpoint
/// singularities. Used where an integral is cross-checked against Gauss-Kronrod.
template <typename F>
QuadratureResult integrate_tanh_sinh(F f, double a, double b, double rel_tol = kQuadratureTolerance,
                                     double abs_tol = 0.0) {
    thread_local boost::math::quadrature::tanh_sinh<double> rule;
    double error = 0.0;
    double l1 = 0.0;
    std::size_t levels = 0;
    // the two-argument form sidesteps an endpoint rounding assertion in the one-argument path
    auto g = [&f](double t, double) { return f(t); };
    const double value = rule.integrate(g, a, b, rel_tol / 8, &error, &l1, &levels);
    detail::check_quadrature("tanh_sinh", error, l1, rel_tol, abs_tol, static_cast<unsigned>(levels));
    return {value, error};
}

} // namespace gammamedian
