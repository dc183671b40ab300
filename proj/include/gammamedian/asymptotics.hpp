#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "series.hpp"
#include "xi.hpp"

namespace gammamedian {

/// linear * x + constant + sum_{k>=1} inv(k) x^{-k}, valid modulo o(x^{-order}).
class AsymptoticExpansion {
public:
    AsymptoticExpansion() = default;
    AsymptoticExpansion(Rational linear, Rational constant, std::vector<Rational> inverse, std::size_t order)
        : linear_(std::move(linear)), constant_(std::move(constant)), inverse_(std::move(inverse)),
          order_(order) {}

    /// Expansion constant + sum_{k=1}^{order} s_k x^{-k} from a series in y = 1/x.
    static AsymptoticExpansion from_inverse_series(const TruncatedSeries<Rational>& s) {
        std::vector<Rational> inv(s.coeffs().begin() + 1, s.coeffs().end());
        return {Rational(0), s[0], std::move(inv), s.order()};
    }

    const Rational& linear_coeff() const { return linear_; }
    const Rational& const_coeff() const { return constant_; }
    /// inverse_coeffs()[k-1] multiplies x^{-k}.
    const std::vector<Rational>& inverse_coeffs() const { return inverse_; }
    std::size_t order() const { return order_; }

    /// Coefficient of x^{-k}, k >= 1; zero beyond the stored terms.
    Rational inv(std::size_t k) const {
        return k >= 1 && k <= inverse_.size() ? inverse_[k - 1] : Rational(0);
    }

    bool is_pure_inverse() const { return linear_.is_zero() && constant_.is_zero(); }

    /// constant + sum inv(k) y^k as a series in y = 1/x of the given order.
    TruncatedSeries<Rational> to_inverse_series(std::size_t order) const {
        if (!linear_.is_zero()) {
            throw std::invalid_argument("AsymptoticExpansion: linear term has no series in 1/x");
        }
        TruncatedSeries<Rational> s(order);
        s[0] = constant_;
        for (std::size_t k = 1; k <= order && k <= inverse_.size(); ++k) {
            s[k] = inverse_[k - 1];
        }
        return s;
    }

    AsymptoticExpansion truncated(std::size_t order) const {
        auto inv = inverse_;
        if (inv.size() > order) {
            inv.resize(order);
        }
        return {linear_, constant_, std::move(inv), order};
    }

    friend AsymptoticExpansion operator-(const AsymptoticExpansion& a, const AsymptoticExpansion& b) {
        const std::size_t n = std::max(a.inverse_.size(), b.inverse_.size());
        std::vector<Rational> inv(n);
        for (std::size_t k = 1; k <= n; ++k) {
            inv[k - 1] = a.inv(k) - b.inv(k);
        }
        return {a.linear_ - b.linear_, a.constant_ - b.constant_, std::move(inv),
                std::min(a.order_, b.order_)};
    }

    friend bool operator==(const AsymptoticExpansion& a, const AsymptoticExpansion& b) {
        if (a.linear_ != b.linear_ || a.constant_ != b.constant_) {
            return false;
        }
        const std::size_t n = std::max(a.inverse_.size(), b.inverse_.size());
        for (std::size_t k = 1; k <= n; ++k) {
            if (a.inv(k) != b.inv(k)) {
                return false;
            }
        }
        return true;
    }

private:
    Rational linear_;
    Rational constant_;
    std::vector<Rational> inverse_;
    std::size_t order_ = 0;
};

/// sum_{k=1}^{n} xi^{(k-1)}(1) / (2 x^k).
inline AsymptoticExpansion xi_sum(const XiDerivativeTable& table, std::size_t n) {
    if (n == 0 || n > table.size()) {
        throw std::invalid_argument("xi_sum: need 1 <= n <= table size");
    }
    std::vector<Rational> inv;
    inv.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        inv.push_back(table[k - 1] / Rational(2));
    }
    return {Rational(0), Rational(0), std::move(inv), n};
}

inline AsymptoticExpansion xi_sum(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("xi_sum: n must be positive");
    }
    return xi_sum(xi_derivatives(n), n);
}

/// Taylor coefficients t_{k,l}, l = 2k..max_degree, of (e^{-u} + u - 1)^k:
///   t_{1,m} = (-1)^m / m!,  t_{j+1,m} = sum_{l=2}^{m-2j} (-1)^l / l! * t_{j,m-l}.
/// Empty when max_degree < 2k.
inline std::vector<Rational> integrand_power_coeffs(std::size_t k, std::size_t max_degree) {
    if (k == 0) {
        throw std::invalid_argument("integrand_power_coeffs: k must be positive");
    }
    if (max_degree < 2 * k) {
        return {};
    }
    std::vector<Rational> base(max_degree + 1); // base[m] = (-1)^m / m!, m >= 2
    for (std::size_t m = 2; m <= max_degree; ++m) {
        base[m] = Rational(m % 2 == 0 ? 1 : -1, factorial(static_cast<unsigned>(m)));
    }
    std::vector<Rational> current = base; // indexed by degree
    for (std::size_t j = 1; j < k; ++j) {
        std::vector<Rational> next(max_degree + 1);
        for (std::size_t m = 2 * (j + 1); m <= max_degree; ++m) {
            for (std::size_t l = 2; l <= m - 2 * j; ++l) {
                next[m] += base[l] * current[m - l];
            }
        }
        current = std::move(next);
    }
    return {current.begin() + static_cast<std::ptrdiff_t>(2 * k), current.end()};
}

/// sum_{k=1}^{n} ((-1)^k x^k / k!) int_0^{phi} (u + e^{-u} - 1)^k du with the
/// integrand replaced by its Taylor polynomial of degree n + k, expanded in
/// powers of 1/x and truncated after x^{-(n+1)}.
inline AsymptoticExpansion sum_of_int(std::size_t n, const AsymptoticExpansion& phi) {
    if (!phi.is_pure_inverse()) {
        throw std::invalid_argument("sum_of_int: phi must be a pure expansion in 1/x");
    }
    TruncatedSeries<Rational> result(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t work_order = n + 1 + k;
        const auto y_phi = phi.to_inverse_series(work_order);
        const auto t = integrand_power_coeffs(k, n + k); // t[l - 2k]
        TruncatedSeries<Rational> integral(work_order);
        auto power = series_pow(y_phi, static_cast<unsigned>(2 * k + 1));
        for (std::size_t l = 2 * k; l <= n + k; ++l) {
            integral += power * (t[l - 2 * k] / Rational(static_cast<std::int64_t>(l + 1)));
            power = series_mul(power, y_phi);
        }
        // times (-1)^k x^k / k!: shift down by k powers of y
        const Rational scale(k % 2 == 0 ? 1 : -1, factorial(static_cast<unsigned>(k)));
        for (std::size_t j = 0; j <= n + 1; ++j) {
            result[j] += scale * integral[j + k];
        }
    }
    return AsymptoticExpansion::from_inverse_series(result);
}

/// Coefficients c_1..c_n of phi(x) = log(x / m(x)) at infinity, from the
/// fixed point phi = xi_sum(k+1) - sum_of_int(k, phi), k = 1..n, started at 1/(3x).
inline AsymptoticExpansion asymp_phi(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("asymp_phi: n must be positive");
    }
    const auto table = xi_derivatives(n + 1);
    AsymptoticExpansion phi(Rational(0), Rational(0), {Rational(1, 3)}, 1);
    for (std::size_t k = 1; k <= n; ++k) {
        phi = xi_sum(table, k + 1) - sum_of_int(k, phi);
    }
    return phi.truncated(n);
}

/// m(x) = x exp(-phi(x)) = x - 1/3 + sum_{k=1}^{n-1} m_k x^{-k}.
inline AsymptoticExpansion asymp_m(std::size_t n) {
    const auto phi = asymp_phi(n).to_inverse_series(n);
    const auto e = series_exp(-phi);
    std::vector<Rational> inv;
    for (std::size_t k = 2; k <= n; ++k) {
        inv.push_back(e[k]);
    }
    return {e[0], e[1], std::move(inv), n - 1};
}

/// Term-wise d/dx.
inline AsymptoticExpansion differentiate_expansion(const AsymptoticExpansion& e) {
    std::vector<Rational> inv(e.inverse_coeffs().size() + 1);
    for (std::size_t k = 1; k <= e.inverse_coeffs().size(); ++k) {
        inv[k] = -Rational(static_cast<std::int64_t>(k)) * e.inv(k);
    }
    return {Rational(0), e.linear_coeff(), std::move(inv), e.order() + 1};
}

/// Term-wise antiderivative with zero integration constant. Rejects x and
/// 1/x terms, whose primitives leave the expansion class.
inline AsymptoticExpansion integrate_expansion(const AsymptoticExpansion& e) {
    if (!e.linear_coeff().is_zero() || !e.inv(1).is_zero()) {
        throw std::invalid_argument("integrate_expansion: x or 1/x term present");
    }
    std::vector<Rational> inv;
    for (std::size_t k = 1; k + 1 <= e.inverse_coeffs().size(); ++k) {
        inv.push_back(-e.inv(k + 1) / Rational(static_cast<std::int64_t>(k)));
    }
    return {e.const_coeff(), Rational(0), std::move(inv), e.order() == 0 ? 0 : e.order() - 1};
}

/// linear * x + constant + sum inv(k) / x^k, Horner in 1/x.
template <typename Real = double>
Real eval_expansion(const AsymptoticExpansion& e, Real x) {
    if (!(x > 0)) {
        throw std::domain_error("eval_expansion: requires x > 0");
    }
    const Real y = Real(1) / x;
    Real acc = 0;
    const auto& inv = e.inverse_coeffs();
    for (std::size_t k = inv.size(); k >= 1; --k) {
        acc = (acc + inv[k - 1].to<Real>()) * y;
    }
    return e.linear_coeff().to<Real>() * x + e.const_coeff().to<Real>() + acc;
}

} // namespace gammamedian
