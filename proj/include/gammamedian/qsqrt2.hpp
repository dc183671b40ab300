#pragma once

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "rational.hpp"

namespace gammamedian {

/// Element rat + sqrt2 * sqrt(2) of the quadratic field Q(sqrt 2).
class QSqrt2 {
public:
    QSqrt2() = default;
    QSqrt2(std::int64_t r) : rat_(r) {}      // NOLINT(google-explicit-constructor)
    QSqrt2(Rational r) : rat_(std::move(r)) {} // NOLINT(google-explicit-constructor)
    QSqrt2(Rational r, Rational s) : rat_(std::move(r)), sqrt2_(std::move(s)) {}

    static QSqrt2 sqrt2() { return {Rational(0), Rational(1)}; }

    const Rational& rat_part() const { return rat_; }
    const Rational& sqrt2_part() const { return sqrt2_; }

    bool is_zero() const { return rat_.is_zero() && sqrt2_.is_zero(); }

    /// Norm a^2 - 2b^2; nonzero for nonzero elements since sqrt 2 is irrational.
    Rational norm() const { return rat_ * rat_ - Rational(2) * sqrt2_ * sqrt2_; }
    QSqrt2 conjugate() const { return {rat_, -sqrt2_}; }

    QSqrt2& operator+=(const QSqrt2& o) { rat_ += o.rat_; sqrt2_ += o.sqrt2_; return *this; }
    QSqrt2& operator-=(const QSqrt2& o) { rat_ -= o.rat_; sqrt2_ -= o.sqrt2_; return *this; }
    QSqrt2& operator*=(const QSqrt2& o) {
        Rational r = rat_ * o.rat_ + Rational(2) * sqrt2_ * o.sqrt2_;
        Rational s = rat_ * o.sqrt2_ + sqrt2_ * o.rat_;
        rat_ = std::move(r);
        sqrt2_ = std::move(s);
        return *this;
    }
    QSqrt2& operator/=(const QSqrt2& o) {
        if (o.is_zero()) {
            throw std::domain_error("QSqrt2: division by zero");
        }
        const Rational n = o.norm();
        *this *= o.conjugate();
        rat_ /= n;
        sqrt2_ /= n;
        return *this;
    }

    friend QSqrt2 operator+(QSqrt2 a, const QSqrt2& b) { return a += b; }
    friend QSqrt2 operator-(QSqrt2 a, const QSqrt2& b) { return a -= b; }
    friend QSqrt2 operator*(QSqrt2 a, const QSqrt2& b) { return a *= b; }
    friend QSqrt2 operator/(QSqrt2 a, const QSqrt2& b) { return a /= b; }
    friend QSqrt2 operator-(const QSqrt2& a) { return {-a.rat_, -a.sqrt2_}; }

    friend bool operator==(const QSqrt2& a, const QSqrt2& b) {
        return a.rat_ == b.rat_ && a.sqrt2_ == b.sqrt2_;
    }

    bool is_rational() const { return sqrt2_.is_zero(); }

    /// Throws std::logic_error when the sqrt 2 part does not vanish.
    Rational to_rational() const {
        if (!is_rational()) {
            throw std::logic_error("QSqrt2: expected a rational value, got " + to_string());
        }
        return rat_;
    }

    double to_double() const {
        return rat_.to_double() + sqrt2_.to_double() * std::numbers::sqrt2;
    }

    std::string to_string() const {
        return rat_.to_string() + " + " + sqrt2_.to_string() + "*sqrt(2)";
    }

    friend std::ostream& operator<<(std::ostream& os, const QSqrt2& q) {
        return os << q.to_string();
    }

private:
    Rational rat_;
    Rational sqrt2_;
};

} // namespace gammamedian
