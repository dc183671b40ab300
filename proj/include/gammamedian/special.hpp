#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "errors.hpp"

namespace gammamedian {

struct Constants {
    double euler_gamma;
    double log2;
};

inline constexpr Constants kConstants{std::numbers::egamma, std::numbers::ln2};

/// Iteration cap of the incomplete gamma series and continued fraction.
inline constexpr int kIncompleteGammaMaxIter = 10000;

template <typename Real>
Real ln_gamma(Real x) {
    if (!(x > 0)) {
        throw std::domain_error("ln_gamma: requires x > 0");
    }
    if constexpr (std::is_floating_point_v<Real>) {
        return std::lgamma(x);
    } else {
        return boost::math::lgamma(x);
    }
}

inline double digamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("digamma: requires x > 0");
    }
    return boost::math::digamma(x);
}

namespace detail {

template <typename Real>
Real tiny() {
    return std::numeric_limits<Real>::min() * 16;
}

/// log(Gamma(x)) - ((x - 1/2) log x - x + log(2 pi)/2), Stirling series; x >= 10.
template <typename Real>
Real stirling_correction(Real x) {
    const Real r = 1 / x;
    const Real r2 = r * r;
    return r * (Real(1) / 12 + r2 * (Real(-1) / 360 + r2 * (Real(1) / 1260 + r2 * (Real(-1) / 1680 +
           r2 * (Real(1) / 1188 + r2 * (Real(-691) / 360360 + r2 * (Real(1) / 156)))))));
}

/// log(y^x e^{-y} / Gamma(x)) given y and s = log y. For large x in hardware
/// precision the terms x log y, y and log Gamma(x) nearly cancel, so the
/// exponent is rearranged around y = x.
template <typename Real>
Real log_prefix(Real x, Real y, Real s) {
    using std::log;
    if constexpr (std::is_floating_point_v<Real>) {
        if (x >= 10 && y > 0) {
            const Real t = (y - x) / x;
            return x * (std::log1p(t) - t) + log(x) / 2 - log(2 * std::numbers::pi_v<Real>) / 2 -
                   stirling_correction(x);
        }
    }
    return x * s - y - ln_gamma<Real>(x);
}

/// P(x, e^s) by the power series; valid (and accurate) for e^s < x + 1.
/// Working from s keeps the prefactor finite when e^s underflows.
template <typename Real>
Real p_series(Real x, Real s, Real y) {
    using std::abs;
    using std::exp;
    using std::log;
    const Real eps = std::numeric_limits<Real>::epsilon();
    Real term = 1;
    Real sum = 1;
    Real ap = x;
    for (int n = 1; n <= kIncompleteGammaMaxIter; ++n) {
        ap += 1;
        term *= y / ap;
        sum += term;
        if (abs(term) <= abs(sum) * eps) {
            return sum * exp(log_prefix(x, y, s) - log(x));
        }
    }
    throw ConvergenceError("regularized_p: series did not converge", kIncompleteGammaMaxIter);
}

template <typename Real>
Real p_series(Real x, Real s) {
    using std::exp;
    return p_series(x, s, Real(exp(s)));
}

/// Q(x, y) by the modified Lentz continued fraction; for y >= x + 1.
template <typename Real>
Real q_continued_fraction(Real x, Real y) {
    using std::abs;
    using std::exp;
    using std::log;
    const Real eps = std::numeric_limits<Real>::epsilon();
    const Real fpmin = tiny<Real>();
    Real b = y + 1 - x;
    Real c = 1 / fpmin;
    Real d = 1 / b;
    Real h = d;
    for (int i = 1; i <= kIncompleteGammaMaxIter; ++i) {
        const Real an = -Real(i) * (Real(i) - x);
        b += 2;
        d = an * d + b;
        if (abs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (abs(c) < fpmin) c = fpmin;
        d = 1 / d;
        const Real del = d * c;
        h *= del;
        if (abs(del - 1) <= eps) {
            return exp(log_prefix(x, y, Real(log(y)))) * h;
        }
    }
    throw ConvergenceError("regularized_p: continued fraction did not converge", kIncompleteGammaMaxIter);
}

template <typename Real>
void require_p_domain(Real x, Real y) {
    if (!(x > 0) || !(y >= 0)) {
        throw std::domain_error("regularized_p: requires x > 0 and y >= 0");
    }
}

} // namespace detail

/// Regularized lower incomplete gamma P(x, y) = (1/Gamma(x)) int_0^y e^{-t} t^{x-1} dt.
/// Series for y < x + 1, continued fraction for Q = 1 - P otherwise.
template <typename Real>
Real regularized_p(Real x, Real y) {
    using std::log;
    detail::require_p_domain(x, y);
    if (y == 0) {
        return 0;
    }
    if (y < x + 1) {
        return detail::p_series(x, Real(log(y)), y);
    }
    return 1 - detail::q_continued_fraction(x, y);
}

/// Regularized upper incomplete gamma Q(x, y) = 1 - P(x, y).
template <typename Real>
Real regularized_q(Real x, Real y) {
    using std::log;
    detail::require_p_domain(x, y);
    if (y == 0) {
        return 1;
    }
    if (y < x + 1) {
        return 1 - detail::p_series(x, Real(log(y)), y);
    }
    return detail::q_continued_fraction(x, y);
}

/// P(x, e^s) for any real s; e^s may underflow.
template <typename Real>
Real regularized_p_log(Real x, Real log_y) {
    using std::exp;
    if (!(x > 0)) {
        throw std::domain_error("regularized_p_log: requires x > 0");
    }
    const Real y = exp(log_y);
    if (y < x + 1) {
        return detail::p_series(x, log_y);
    }
    return 1 - detail::q_continued_fraction(x, y);
}

/// Gamma(x) density e^{-t} t^{x-1} / Gamma(x) at t = e^s, times t (d P / d s).
template <typename Real>
Real density_times_t_log(Real x, Real s) {
    using std::exp;
    return exp(x * s - exp(s) - ln_gamma<Real>(x));
}

} // namespace gammamedian
