#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

namespace gammamedian {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction numerator/denominator with denominator > 0 and
/// gcd(|numerator|, denominator) = 1. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& n) : value_(n) {} // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    int sign() const { return value_.sign(); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) {
            throw std::domain_error("Rational: division by zero");
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// Serialized form "p/q"; integers keep the "/1" suffix.
    std::string to_string() const {
        return numerator().str() + "/" + denominator().str();
    }

    /// Accepts "p/q" or a bare integer "p".
    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) {
                return Rational(BigInt(std::string(text)));
            }
            return Rational(BigInt(std::string(text.substr(0, slash))),
                            BigInt(std::string(text.substr(slash + 1))));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
        }
    }

    /// Conversion through the quotient of the converted numerator and
    /// denominator; exact up to one rounding of each for multiprecision reals.
    template <typename Real>
    Real to() const {
        if constexpr (std::is_floating_point_v<Real>) {
            return value_.convert_to<Real>();
        } else {
            return Real(numerator()) / Real(denominator());
        }
    }

    double to_double() const { return to<double>(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    boost::multiprecision::cpp_rational value_{0};
};

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

inline BigInt ipow(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

} // namespace gammamedian
