#pragma once

#include <vector>

#include "rational.hpp"

// Reference coefficient tables, transcribed in factored form.

namespace gammamedian::golden {

namespace detail {

inline BigInt p(unsigned base, unsigned exp) { return ipow(BigInt(base), exp); }

inline Rational q(const BigInt& num, const BigInt& den) { return Rational(num, den); }

} // namespace detail

/// xi^{(k)}(1), k = 0..10, as transcribed, misprints included.
inline std::vector<Rational> printed_xi_derivatives() {
    using detail::p;
    using detail::q;
    return {
        q(2, 3),
        q(p(2, 3), p(3, 3) * 5),
        -q(p(2, 4), p(3, 4) * 5 * 7),
        -q(p(2, 5), p(3, 5) * 5 * 7),
        q(p(2, 6) * 281, p(3, 8) * p(5, 2) * 7 * 11),
        q(p(2, 7) * 23 * 227, p(3, 9) * p(5, 2) * 7 * 11 * 13),
        -q(p(2, 8) * 53 * 103, p(3, 10) * p(5, 2) * 7 * 11 * 13),
        -q(p(2, 9) * 373 * 4439 * 557, p(3, 12) * p(5, 4) * p(7, 2) * 11 * 13 * 17),
        q(p(2, 10) * BigInt(2650986803), p(3, 13) * p(5, 4) * p(7, 2) * 11 * 13 * 17 * 19),
        q(p(2, 11) * BigInt(6171801683), p(3, 14) * p(5, 4) * p(7, 2) * 11 * 13 * 17 * 19),
        -q(p(2, 12) * 1117 * BigInt(3835213201), p(3, 16) * p(5, 2) * p(7, 2) * 11 * 13 * 17 * 19 * 23),
    };
}

/// The transcribed table with its two misprints repaired:
///   k = 7:  numerator factor 4439 should read 439,
///   k = 10: denominator factor 5^2 should read 5^5.
/// Both repairs agree with Lagrange inversion, a Cauchy integral of h^{-1},
/// and the reference c_8, m_8, which depend on xi^{(7)}(1).
inline std::vector<Rational> xi_derivatives() {
    using detail::p;
    using detail::q;
    auto t = printed_xi_derivatives();
    t[7] = -q(p(2, 9) * 373 * 439 * 557, p(3, 12) * p(5, 4) * p(7, 2) * 11 * 13 * 17);
    t[10] = -q(p(2, 12) * 1117 * BigInt(3835213201), p(3, 16) * p(5, 5) * p(7, 2) * 11 * 13 * 17 * 19 * 23);
    return t;
}

/// c_1..c_10 of phi(x) = sum c_k x^{-k}.
inline std::vector<Rational> phi_coefficients() {
    using detail::p;
    using detail::q;
    return {
        q(1, 3),
        q(29, p(3, 4) * 5 * 2),
        -q(37, p(3, 6) * 5 * 7),
        -q(3877, p(3, 9) * p(5, 2) * p(2, 2)),
        q(8957413, p(3, 13) * p(5, 3) * 7 * 11),
        q(BigInt(401) * 8842279, 2 * p(3, 15) * p(5, 2) * p(7, 2) * 11 * 13),
        -q(BigInt(356146891) * 2039, p(3, 18) * p(5, 4) * p(7, 2) * 11 * 13),
        -q(BigInt(216607304027) * 3077479, p(2, 3) * p(3, 21) * p(5, 6) * p(7, 3) * 11 * 13 * 17),
        q(BigInt(31) * 743 * BigInt(4569027042343), p(3, 23) * p(5, 3) * p(7, 3) * 11 * 13 * 17 * 19),
        q(BigInt(71) * BigInt(282699240672481) * 1949 * 5113,
          2 * p(3, 27) * p(5, 7) * p(7, 3) * p(11, 2) * 13 * 17 * 19),
    };
}

/// m_1..m_9 of m(x) = x - 1/3 + sum m_k x^{-k}.
inline std::vector<Rational> m_coefficients() {
    using detail::p;
    using detail::q;
    return {
        q(p(2, 3), p(3, 4) * 5),
        q(p(2, 3) * 23, p(3, 6) * 5 * 7),
        q(p(2, 3) * 281, p(3, 9) * p(5, 2) * 7),
        -q(p(2, 3) * 17 * 139753, p(3, 13) * p(5, 3) * 7 * 11),
        -q(p(2, 3) * 708494947, p(3, 15) * p(5, 3) * p(7, 2) * 11 * 13),
        q(p(2, 3) * BigInt(140814348739), p(3, 18) * p(5, 4) * p(7, 2) * 11 * 13),
        q(p(2, 3) * BigInt(7663181003289047), p(3, 21) * p(5, 6) * p(7, 3) * 11 * 13 * 17),
        -q(p(2, 3) * 653 * 1359581 * BigInt(759929) * 3307,
           p(3, 23) * p(5, 6) * p(7, 3) * 11 * 13 * 17 * 19),
        -q(p(2, 3) * 29 * BigInt("1376560394479059407"), p(3, 27) * p(5, 7) * p(7, 3) * p(11, 2) * 17),
    };
}

inline Rational m_constant() { return Rational(-1, 3); }

} // namespace gammamedian::golden
