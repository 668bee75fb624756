#pragma once

#include "dkdv/diffpoly.hpp"
#include "dkdv/series.hpp"

namespace dkdv {

enum class NamedOp { L, R, X, T };

NamedOp named_op_from_string(const std::string &name);

/// Constant-coefficient even operator 1 + sum_g c_g (eps dx)^{2g} with
/// rational coefficients, truncated at g = G.
class EvenOp {
  public:
    explicit EvenOp(std::vector<Rational> coeffs);

    static EvenOp identity(int G);
    static EvenOp named(NamedOp which, int G);
    /// Reads the even coefficients of an even Taylor series.
    static EvenOp from_hat(const TaylorSeries &hat);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational &coeff(int g) const { return c_[static_cast<size_t>(g)]; }
    const std::vector<Rational> &coeffs() const { return c_; }

    EvenOp compose(const EvenOp &other) const;
    EvenOp invert() const;
    EvenOp sqrt() const;

    /// K -> hat K(z) = 1 + sum K_g z^{2g}; round-trips with from_hat.
    TaylorSeries hat() const;

    DiffPoly apply(const DiffPoly &p) const;

    friend bool operator==(const EvenOp &a, const EvenOp &b) { return a.c_ == b.c_; }

  private:
    std::vector<Rational> c_;
};

/// Exact Taylor expansions of the closed-form generators, to z^order.
TaylorSeries lhat_series(int order);      // (z/2)/sin(z/2)
TaylorSeries rhat_series(int order);      // 2 tan(z/2)/z
TaylorSeries that_series(int order);      // sqrt of rhat
TaylorSeries sec_half_series(int order);  // 1/cos(z/2)

/// Constant-coefficient operator series sum_k a_k (eps dx)^k over Q(i);
/// realizes Lambda^m = e^{i m eps dx} and the eps-series inverse of 1+Lambda.
class ConstCoeffOp {
  public:
    explicit ConstCoeffOp(Series<GaussianRational> sym) : s_(std::move(sym)) {}

    static ConstCoeffOp identity(int order);
    static ConstCoeffOp shift(int m, int order); // Lambda^m
    static ConstCoeffOp from_even(const EvenOp &op, int order);

    const Series<GaussianRational> &sym() const { return s_; }
    int order() const { return s_.order(); }

    friend ConstCoeffOp operator*(const ConstCoeffOp &a, const ConstCoeffOp &b) {
        return ConstCoeffOp(a.s_ * b.s_);
    }
    friend ConstCoeffOp operator+(const ConstCoeffOp &a, const ConstCoeffOp &b) {
        return ConstCoeffOp(a.s_ + b.s_);
    }
    friend ConstCoeffOp operator-(const ConstCoeffOp &a, const ConstCoeffOp &b) {
        return ConstCoeffOp(a.s_ - b.s_);
    }
    ConstCoeffOp scaled(const GaussianRational &f) const { return ConstCoeffOp(s_.scaled(f)); }
    ConstCoeffOp inverse() const { return ConstCoeffOp(s_.inverse()); }

    DiffPoly apply(const DiffPoly &p) const;

  private:
    Series<GaussianRational> s_;
};

/// (Lambda - 1)(Lambda + 1)^{-1}, the building block of R.
ConstCoeffOp shift_cayley(int order);
/// (1 + Lambda)^{-1}; constant term 1/2.
ConstCoeffOp one_plus_shift_inverse(int order);

} // namespace dkdv
