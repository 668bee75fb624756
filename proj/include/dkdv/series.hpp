#pragma once

#include "dkdv/rational.hpp"

#include <algorithm>
#include <vector>

namespace dkdv {

/// Dense truncated power series over an exact field K. A series of order n
/// carries coefficients of z^0 .. z^n; arithmetic clamps to the smaller order.
template <class K> class Series {
  public:
    explicit Series(int order) : c_(static_cast<size_t>(order) + 1) {}

    static Series one(int order) {
        Series s(order);
        s.c_[0] = K(1);
        return s;
    }

    static Series z(int order) {
        Series s(order);
        if (order >= 1) s.c_[1] = K(1);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const K &operator[](int k) const { return c_[static_cast<size_t>(k)]; }
    K &operator[](int k) { return c_[static_cast<size_t>(k)]; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const K &x) { return x.is_zero(); });
    }

    Series truncated(int order) const {
        Series s(order);
        for (int k = 0; k <= std::min(order, this->order()); ++k) s.c_[k] = c_[k];
        return s;
    }

    Series operator-() const {
        Series s = *this;
        for (auto &x : s.c_) x = -x;
        return s;
    }

    friend Series operator+(const Series &a, const Series &b) {
        Series s(std::min(a.order(), b.order()));
        for (int k = 0; k <= s.order(); ++k) s[k] = a[k] + b[k];
        return s;
    }

    friend Series operator-(const Series &a, const Series &b) {
        Series s(std::min(a.order(), b.order()));
        for (int k = 0; k <= s.order(); ++k) s[k] = a[k] - b[k];
        return s;
    }

    friend Series operator*(const Series &a, const Series &b) {
        Series s(std::min(a.order(), b.order()));
        for (int i = 0; i <= std::min(a.order(), s.order()); ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; i + j <= s.order() && j <= b.order(); ++j) s[i + j] += a[i] * b[j];
        }
        return s;
    }

    Series scaled(const K &f) const {
        Series s = *this;
        for (auto &x : s.c_) x = x * f;
        return s;
    }

    /// Multiplicative inverse; requires an invertible constant term.
    Series inverse() const {
        if (c_[0].is_zero()) throw std::domain_error("Series: inverse of series with zero constant term");
        Series s(order());
        s[0] = K(1) / c_[0];
        for (int n = 1; n <= order(); ++n) {
            K acc(0);
            for (int i = 1; i <= n; ++i) acc += c_[static_cast<size_t>(i)] * s[n - i];
            s[n] = -acc / c_[0];
        }
        return s;
    }

    /// Square root with constant term 1; requires c0 = 1.
    Series sqrt_one() const {
        if (!c_[0].is_one()) throw std::domain_error("Series: sqrt requires constant term 1");
        Series s(order());
        s[0] = K(1);
        for (int n = 1; n <= order(); ++n) {
            K acc(0);
            for (int i = 1; i < n; ++i) acc += s[i] * s[n - i];
            s[n] = (c_[static_cast<size_t>(n)] - acc) / K(2);
        }
        return s;
    }

    /// Termwise d/dz; the result is exact to order()-1.
    Series derivative() const {
        Series s(std::max(order() - 1, 0));
        for (int k = 1; k <= order(); ++k)
            if (k - 1 <= s.order()) s[k - 1] = c_[static_cast<size_t>(k)] * K(k);
        return s;
    }

    /// z * d/dz, order-preserving.
    Series z_derivative() const {
        Series s(order());
        for (int k = 1; k <= order(); ++k) s[k] = c_[static_cast<size_t>(k)] * K(k);
        return s;
    }

    /// Divides by z^k; the discarded low coefficients must vanish.
    Series shifted_down(int k) const {
        for (int j = 0; j < std::min(k, order() + 1); ++j)
            if (!c_[static_cast<size_t>(j)].is_zero())
                throw std::domain_error("Series: shift below z^0");
        Series s(order() - k);
        for (int j = 0; j <= s.order(); ++j) s[j] = c_[static_cast<size_t>(j + k)];
        return s;
    }

    friend bool operator==(const Series &a, const Series &b) {
        if (a.order() != b.order()) return false;
        return a.c_ == b.c_;
    }

  private:
    std::vector<K> c_;
};

using TaylorSeries = Series<Rational>;

/// exp(f*z) truncated; f is the scalar in the exponent.
template <class K> Series<K> exp_linear(const K &f, int order) {
    Series<K> s(order);
    K term(1);
    s[0] = term;
    for (int k = 1; k <= order; ++k) {
        term = term * f / K(k);
        s[k] = term;
    }
    return s;
}

} // namespace dkdv
