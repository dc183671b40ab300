#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gammamedian {

/// Dense power series known modulo z^(order+1).
///
/// The coefficient type needs ring operations, construction from an integer
/// and division (only for exp/log). Binary operations truncate to the smaller
/// order of their operands.
template <typename T>
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1, T(0)) {}

    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, T(0)) {}

    /// Coefficients beyond `order` are dropped; missing ones are zero.
    TruncatedSeries(std::vector<T> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1, T(0));
    }

    TruncatedSeries(std::initializer_list<T> coeffs, std::size_t order)
        : TruncatedSeries(std::vector<T>(coeffs), order) {}

    static TruncatedSeries constant(T c, std::size_t order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = std::move(c);
        return s;
    }

    /// The series z.
    static TruncatedSeries variable(std::size_t order) {
        TruncatedSeries s(order);
        if (order >= 1) {
            s.coeffs_[1] = T(1);
        }
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<T>& coeffs() const { return coeffs_; }
    const T& operator[](std::size_t k) const { return coeffs_[k]; }
    T& operator[](std::size_t k) { return coeffs_[k]; }

    TruncatedSeries truncated(std::size_t order) const {
        return TruncatedSeries(std::vector<T>(coeffs_.begin(),
                                              coeffs_.begin() + std::min(order, this->order()) + 1),
                               order <= this->order() ? order : this->order());
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            coeffs_[k] += o.coeffs_[k];
        }
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            coeffs_[k] -= o.coeffs_[k];
        }
        return *this;
    }
    TruncatedSeries& operator*=(const T& c) {
        for (auto& a : coeffs_) {
            a *= c;
        }
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator-(TruncatedSeries a) {
        for (auto& c : a.coeffs_) {
            c = -c;
        }
        return a;
    }
    friend TruncatedSeries operator*(TruncatedSeries a, const T& c) { return a *= c; }
    friend TruncatedSeries operator*(const T& c, TruncatedSeries a) { return a *= c; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        return series_mul(a, b);
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Cauchy product, schoolbook O(n^2).
    friend TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t) {
        const std::size_t n = std::min(s.order(), t.order());
        TruncatedSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (s.coeffs_[i] == T(0)) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                r.coeffs_[i + j] += s.coeffs_[i] * t.coeffs_[j];
            }
        }
        return r;
    }

private:
    std::vector<T> coeffs_;
};

template <typename T>
TruncatedSeries<T> series_pow(const TruncatedSeries<T>& s, unsigned k) {
    auto r = TruncatedSeries<T>::constant(T(1), s.order());
    for (unsigned i = 0; i < k; ++i) {
        r = series_mul(r, s);
    }
    return r;
}

/// outer(inner(z)) by Horner accumulation; inner must have no constant term.
template <typename T>
TruncatedSeries<T> series_compose(const TruncatedSeries<T>& outer, const TruncatedSeries<T>& inner) {
    if (!(inner[0] == T(0))) {
        throw std::invalid_argument("series_compose: inner series has a nonzero constant term");
    }
    const std::size_t n = std::min(outer.order(), inner.order());
    const auto in = inner.truncated(n);
    auto acc = TruncatedSeries<T>::constant(outer[n], n);
    for (std::size_t j = n; j-- > 0;) {
        acc = series_mul(acc, in);
        acc[0] += outer[j];
    }
    return acc;
}

/// exp(s) = sum_j s^j / j!; s must have no constant term.
template <typename T>
TruncatedSeries<T> series_exp(const TruncatedSeries<T>& s) {
    if (!(s[0] == T(0))) {
        throw std::invalid_argument("series_exp: nonzero constant term");
    }
    const std::size_t n = s.order();
    auto result = TruncatedSeries<T>::constant(T(1), n);
    auto term = result;
    for (std::size_t j = 1; j <= n; ++j) {
        term = series_mul(term, s) * (T(1) / T(static_cast<std::int64_t>(j)));
        result += term;
    }
    return result;
}

/// log(s) for s with constant term 1, via log(1+w) = sum (-1)^(j+1) w^j / j.
template <typename T>
TruncatedSeries<T> series_log(const TruncatedSeries<T>& s) {
    if (!(s[0] == T(1))) {
        throw std::invalid_argument("series_log: constant term must be 1");
    }
    const std::size_t n = s.order();
    auto w = s;
    w[0] = T(0);
    TruncatedSeries<T> result(n);
    auto power = TruncatedSeries<T>::constant(T(1), n);
    for (std::size_t j = 1; j <= n; ++j) {
        power = series_mul(power, w);
        const T c = T(j % 2 == 1 ? 1 : -1) / T(static_cast<std::int64_t>(j));
        result += power * c;
    }
    return result;
}

} // namespace gammamedian
