#include "dkdv/shiftop.hpp"

#include "dkdv/evenop.hpp"

#include <stdexcept>
#include <string>

namespace dkdv {

ShiftOp ShiftOp::lambda_power(RingPtr ring, int trunc, int n) {
    ShiftOp op(ring, trunc);
    op.set_coef(n, DiffPoly::constant(ring, trunc, GaussianRational(1)));
    return op;
}

void ShiftOp::set_coef(int n, const DiffPoly &p) {
    if (p.is_zero())
        coef_.erase(n);
    else
        coef_.insert_or_assign(n, p);
}

DiffPoly ShiftOp::coef(int n) const {
    if (n < valid_from_)
        throw std::domain_error("ShiftOp: coefficient of Lambda^" + std::to_string(n) +
                                " is below the computed window (valid from " +
                                std::to_string(valid_from_) + "); recompute with depth >= " +
                                std::to_string(-n));
    auto it = coef_.find(n);
    if (it != coef_.end()) return it->second;
    return DiffPoly(ring_, trunc_);
}

int ShiftOp::max_exp() const {
    if (coef_.empty()) throw std::logic_error("ShiftOp::max_exp on zero operator");
    return coef_.rbegin()->first;
}

int ShiftOp::min_exp() const {
    if (coef_.empty()) throw std::logic_error("ShiftOp::min_exp on zero operator");
    return coef_.begin()->first;
}

void ShiftOp::merge_valid(int v) { valid_from_ = std::max(valid_from_, v); }

ShiftOp ShiftOp::operator-() const {
    ShiftOp r(ring_, trunc_);
    r.valid_from_ = valid_from_;
    for (const auto &[n, p] : coef_) r.coef_.emplace(n, -p);
    return r;
}

ShiftOp &ShiftOp::operator+=(const ShiftOp &o) {
    if (!(*ring_ == *o.ring_)) throw std::invalid_argument("ShiftOp: ring mismatch");
    if (o.trunc_ < trunc_) {
        trunc_ = o.trunc_;
        for (auto &[n, p] : coef_) p = p.truncated(trunc_);
    }
    merge_valid(o.valid_from_);
    for (const auto &[n, p] : o.coef_) {
        if (n < valid_from_) continue;
        set_coef(n, coef(n) + p.truncated(trunc_));
    }
    for (auto it = coef_.begin(); it != coef_.end();)
        it = it->first < valid_from_ ? coef_.erase(it) : std::next(it);
    return *this;
}

ShiftOp &ShiftOp::operator-=(const ShiftOp &o) { return *this += -o; }

ShiftOp ShiftOp::scaled(const GaussianRational &f) const {
    ShiftOp r(ring_, trunc_);
    r.valid_from_ = valid_from_;
    if (f.is_zero()) return r;
    for (const auto &[n, p] : coef_) r.coef_.emplace(n, p.scaled(f));
    return r;
}

ShiftOp ShiftOp::truncated(int E) const {
    ShiftOp r(ring_, std::min(E, trunc_));
    r.valid_from_ = valid_from_;
    for (const auto &[n, p] : coef_) r.set_coef(n, p.truncated(r.trunc_));
    return r;
}

ShiftOp shift_mul(const ShiftOp &A, const ShiftOp &B) {
    if (!(*A.ring_ == *B.ring_)) throw std::invalid_argument("shift_mul: ring mismatch");
    ShiftOp r(A.ring_, std::min(A.trunc_, B.trunc_));
    // Contamination bound: unknown coefficients of one factor can only reach
    // exponents up to (valid_from - 1) + max support of the other factor.
    auto bound = [](int vf, const ShiftOp &other) {
        if (vf == INT_MIN || other.coef_.empty()) return INT_MIN;
        return vf + other.max_exp();
    };
    r.valid_from_ = std::max(bound(A.valid_from_, B), bound(B.valid_from_, A));
    for (const auto &[ea, pa] : A.coef_) {
        for (const auto &[eb, pb] : B.coef_) {
            int e = ea + eb;
            if (e < r.valid_from_) continue;
            DiffPoly term = pa.truncated(r.trunc_) * exp_shift(pb.truncated(r.trunc_), ea);
            if (term.is_zero()) continue;
            auto it = r.coef_.find(e);
            if (it == r.coef_.end())
                r.coef_.emplace(e, std::move(term));
            else {
                it->second += term;
                if (it->second.is_zero()) r.coef_.erase(it);
            }
        }
    }
    return r;
}

ShiftOp plus_part(const ShiftOp &A) {
    if (A.valid_from() > 0)
        throw std::domain_error("plus_part: window does not reach Lambda^0; recompute with depth >= " +
                                std::to_string(A.valid_from()));
    ShiftOp r(A.ring(), A.trunc());
    for (const auto &[n, p] : A.coefs())
        if (n >= 0) r.set_coef(n, p);
    return r;
}

ShiftOp shift_sqrt(const ShiftOp &A, int depth) {
    const RingPtr &ring = A.ring();
    int E = A.trunc();
    if (A.is_zero() || A.max_exp() != 2)
        throw std::invalid_argument("shift_sqrt: operator must have top degree 2");
    DiffPoly one = DiffPoly::constant(ring, E, GaussianRational(1));
    if (!(A.coef(2) == one)) throw std::invalid_argument("shift_sqrt: operator must be monic");

    ConstCoeffOp inv = one_plus_shift_inverse(E);
    std::map<int, DiffPoly> b; // exponents -depth .. 0
    for (int j = 1; j >= 1 - depth; --j) {
        DiffPoly rhs = A.coef(j);
        for (int n = j; n <= 0; ++n) {
            int m = j - n;
            if (m > 0) continue;
            auto itn = b.find(n), itm = b.find(m);
            if (itn == b.end() || itm == b.end()) continue;
            rhs -= itn->second * exp_shift(itm->second, n);
        }
        b.emplace(j - 1, inv.apply(rhs));
    }
    ShiftOp B(ring, E);
    B.set_coef(1, one);
    for (const auto &[n, p] : b) B.set_coef(n, p);
    B.mark_valid_from(-depth);
    return B;
}

ShiftOp commutator_over_ieps(const ShiftOp &A, const ShiftOp &B) {
    ShiftOp c = shift_mul(A, B) - shift_mul(B, A);
    ShiftOp r(c.ring(), c.trunc() - 1);
    r.mark_valid_from(c.valid_from());
    for (const auto &[n, p] : c.coefs()) r.set_coef(n, p.div_ieps());
    return r;
}

ShiftOp lax_power_plus(const ShiftOp &lax, int d) {
    ShiftOp root = shift_sqrt(lax, 2 * d);
    ShiftOp p = root;
    for (int k = 2; k <= 2 * d + 1; ++k) p = shift_mul(p, root);
    return plus_part(p);
}

SymbolPoly dispersionless_symbol(const ShiftOp &A) {
    SymbolPoly s;
    for (const auto &[n, p] : A.coefs()) {
        DiffPoly q = dispersionless(p);
        if (!q.is_zero()) s.emplace(n, std::move(q));
    }
    return s;
}

SymbolPoly symbol_mul(const SymbolPoly &a, const SymbolPoly &b) {
    SymbolPoly s;
    for (const auto &[m, p] : a)
        for (const auto &[n, q] : b) {
            DiffPoly t = p * q;
            if (t.is_zero()) continue;
            auto it = s.find(m + n);
            if (it == s.end())
                s.emplace(m + n, std::move(t));
            else {
                it->second += t;
                if (it->second.is_zero()) s.erase(it);
            }
        }
    return s;
}

} // namespace dkdv
