#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qsqrt2.hpp"
#include "series.hpp"

namespace gammamedian {

/// Coefficients b_1..b_n of the series h with h(z)^2 = e^{-z} + z - 1 and
/// h'(0) = 1/sqrt(2) > 0, from
///   sum_{l=1}^{k-1} b_l b_{k-l} = (-1)^k / k!,  k >= 2.
inline std::vector<QSqrt2> h_polynomial(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("h_polynomial: n must be positive");
    }
    std::vector<QSqrt2> b;
    b.reserve(n);
    b.emplace_back(Rational(0), Rational(1, 2));
    const QSqrt2 two_b1 = QSqrt2(2) * b[0];
    BigInt fact = 2; // (k+1)! for k = 1
    for (std::size_t k = 2; k <= n; ++k) {
        fact *= static_cast<unsigned>(k + 1);
        // coefficient of z^{k+1}: 2 b_1 b_k + sum_{l=2}^{k-1} b_l b_{k+1-l}
        QSqrt2 rhs = Rational((k + 1) % 2 == 0 ? 1 : -1, fact);
        for (std::size_t l = 2; l + 1 <= k; ++l) {
            rhs -= b[l - 1] * b[k - l];
        }
        b.push_back(rhs / two_b1);
    }
    return b;
}

/// h as a truncated series of the given order (constant term zero).
inline TruncatedSeries<QSqrt2> as_series(const std::vector<QSqrt2>& from_one, std::size_t order) {
    TruncatedSeries<QSqrt2> s(order);
    for (std::size_t k = 1; k <= order && k <= from_one.size(); ++k) {
        s[k] = from_one[k - 1];
    }
    return s;
}

/// Reversion coefficients a_1..a_n of w = sum b_k z^k, obtained by equating
/// coefficients in a(b(z)) = z:
///   a_1 = 1/b_1,   sum_{k=1}^{l} a_k b_{k,l} = 0 for l >= 2,
/// where b_{k,l} is the coefficient of z^l in (sum b_m z^m)^k.
inline std::vector<QSqrt2> inverse_coefficients(const std::vector<QSqrt2>& b, std::size_t n) {
    if (b.empty() || b[0].is_zero()) {
        throw std::invalid_argument("inverse_coefficients: leading coefficient must be nonzero");
    }
    if (n == 0 || n > b.size()) {
        throw std::invalid_argument("inverse_coefficients: need 1 <= n <= len(b)");
    }
    const auto base = as_series(b, n);
    std::vector<TruncatedSeries<QSqrt2>> powers; // powers[k-1] = base^k
    powers.reserve(n);
    powers.push_back(base);

    std::vector<QSqrt2> a;
    a.reserve(n);
    a.push_back(QSqrt2(1) / b[0]);
    for (std::size_t l = 2; l <= n; ++l) {
        powers.push_back(series_mul(powers.back(), base));
        QSqrt2 acc;
        for (std::size_t k = 1; k < l; ++k) {
            acc += a[k - 1] * powers[k - 1][l];
        }
        a.push_back(-acc / powers[l - 1][l]);
    }
    return a;
}

} // namespace gammamedian
