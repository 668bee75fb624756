#pragma once

#include "dkdv/diffpoly.hpp"

#include <climits>
#include <map>

namespace dkdv {

/// Truncated Laurent operator sum_n a_n Lambda^n with differential-polynomial
/// coefficients, Lambda = e^{i eps dx}. Multiplication twists by the shift:
/// (f Lambda^m)(g Lambda^n) = f (e^{i m eps dx} g) Lambda^{m+n}.
///
/// valid_from() marks the exponent below which coefficients were clipped by a
/// windowed computation; INT_MIN means the operator is complete (all omitted
/// coefficients are genuinely zero).
class ShiftOp {
  public:
    ShiftOp(RingPtr ring, int trunc) : ring_(std::move(ring)), trunc_(trunc) {}

    static ShiftOp lambda_power(RingPtr ring, int trunc, int n);

    const RingPtr &ring() const { return ring_; }
    int trunc() const { return trunc_; }
    const std::map<int, DiffPoly> &coefs() const { return coef_; }
    int valid_from() const { return valid_from_; }

    void set_coef(int n, const DiffPoly &p);
    /// Coefficient of Lambda^n; zero when absent. Access below the computed
    /// window throws, naming the depth that would be needed.
    DiffPoly coef(int n) const;

    bool is_zero() const { return coef_.empty(); }
    int max_exp() const; // throws on the zero operator
    int min_exp() const;

    ShiftOp operator-() const;
    ShiftOp &operator+=(const ShiftOp &o);
    ShiftOp &operator-=(const ShiftOp &o);
    friend ShiftOp operator+(ShiftOp a, const ShiftOp &b) { return a += b; }
    friend ShiftOp operator-(ShiftOp a, const ShiftOp &b) { return a -= b; }

    ShiftOp scaled(const GaussianRational &f) const;
    ShiftOp truncated(int E) const;

    void mark_valid_from(int v) { valid_from_ = v; }

  private:
    RingPtr ring_;
    int trunc_;
    std::map<int, DiffPoly> coef_;
    int valid_from_ = INT_MIN;

    void merge_valid(int v);
    friend ShiftOp shift_mul(const ShiftOp &, const ShiftOp &);
};

ShiftOp shift_mul(const ShiftOp &A, const ShiftOp &B);

/// Projection onto nonnegative Lambda powers. The result is a complete
/// operator; requires the window to cover exponent 0.
ShiftOp plus_part(const ShiftOp &A);

/// Unique B = Lambda + sum_{n <= 0} b_n Lambda^n with B^2 = A, for monic A of
/// top degree 2. Computes b_0 .. b_{-depth}, solving (1+Lambda) b = known
/// with the eps-series inverse of 1+Lambda.
ShiftOp shift_sqrt(const ShiftOp &A, int depth);

/// (i eps)^{-1}[A, B]; the commutative limit of [A,B] vanishes, so the
/// division is exact. The eps truncation drops by one.
ShiftOp commutator_over_ieps(const ShiftOp &A, const ShiftOp &B);

/// (A^{1/2})^{2d+1} projected onto nonnegative powers; root depth 2d is
/// sufficient for an exact plus part.
ShiftOp lax_power_plus(const ShiftOp &lax, int d);

/// eps = 0 reduction with Lambda -> commuting symbol z.
using SymbolPoly = std::map<int, DiffPoly>;
SymbolPoly dispersionless_symbol(const ShiftOp &A);
SymbolPoly symbol_mul(const SymbolPoly &a, const SymbolPoly &b);

} // namespace dkdv
