#pragma once

#include "dkdv/rational.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace dkdv {

/// Descriptor of a differential polynomial ring: variable names plus the
/// per-variable odeg weight (deg weights are always the jet order).
struct RingDesc {
    std::vector<std::string> names;
    std::vector<int> odeg;

    int size() const { return static_cast<int>(names.size()); }
    int var_index(const std::string &name) const;

    friend bool operator==(const RingDesc &a, const RingDesc &b) {
        return a.names == b.names && a.odeg == b.odeg;
    }
};

using RingPtr = std::shared_ptr<const RingDesc>;

RingPtr make_ring(std::vector<std::string> names, std::vector<int> odeg);

/// The coordinate charts used throughout the hierarchy computations.
namespace rings {
RingPtr uv();     // u (odeg 2), v (odeg 1): discrete KdV chart
RingPtr uw();     // u (2), w (1): chart of the compatibility analysis
RingPtr w12();    // w1 (2), w2 (1): hierarchy of topological type
RingPtr dr();     // u1 (2), u2 (1): DR chart
RingPtr v12();    // v1 (2), v2 (1): genus-0 flat coordinates
RingPtr wonly();  // w (1)
RingPtr chart(const std::string &name); // "uv" | "w" | "dr"
} // namespace rings

struct JetFactor {
    int var;
    int order;
    int exp;
    friend bool operator==(const JetFactor &, const JetFactor &) = default;
};

/// Product of jet variables times a power of eps. Factors are kept sorted by
/// (var, order) with positive exponents.
struct Monomial {
    int eps = 0;
    std::vector<JetFactor> factors;

    int jet_weight() const; // sum of order*exp
    int total_exp() const;  // sum of exp
    int odeg(const RingDesc &ring) const;
    bool is_constant() const { return factors.empty(); }

    friend bool operator==(const Monomial &, const Monomial &) = default;
};

/// Canonical term order: eps ascending, total exponent degree descending,
/// then factorwise (var, order) ascending with larger exponents first.
struct MonomialOrder {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

Monomial mono_mul(const Monomial &a, const Monomial &b);

enum class GradeKind { deg, odeg };

/// Truncated eps-series of differential polynomials with coefficients in
/// Q(i). Operations between polynomials require identical ring descriptors
/// and clamp the truncation order to the smaller one.
class DiffPoly {
  public:
    using TermMap = std::map<Monomial, GaussianRational, MonomialOrder>;

    DiffPoly() = default;
    DiffPoly(RingPtr ring, int trunc) : ring_(std::move(ring)), trunc_(trunc) {}

    static DiffPoly constant(RingPtr ring, int trunc, GaussianRational c);
    static DiffPoly var(RingPtr ring, int trunc, int v) { return jet(std::move(ring), trunc, v, 0); }
    static DiffPoly jet(RingPtr ring, int trunc, int v, int order);
    static DiffPoly eps(RingPtr ring, int trunc, int pow = 1);

    const RingPtr &ring() const { return ring_; }
    int trunc() const { return trunc_; }
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial &m, const GaussianRational &c);

    DiffPoly operator-() const;
    DiffPoly &operator+=(const DiffPoly &o);
    DiffPoly &operator-=(const DiffPoly &o);
    friend DiffPoly operator+(DiffPoly a, const DiffPoly &b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly &b) { return a -= b; }
    friend DiffPoly operator*(const DiffPoly &a, const DiffPoly &b);

    DiffPoly scaled(const GaussianRational &f) const;
    DiffPoly pow(int e) const;

    /// Multiplication by eps^k (terms pushed past the truncation are dropped).
    DiffPoly mul_eps(int k) const;
    /// Exact division by (i*eps); requires a vanishing eps^0 part. The result
    /// is trustworthy only to one order lower, so the truncation decreases.
    DiffPoly div_ieps() const;

    /// Restricts to truncation order E (drops higher eps terms). Raising the
    /// bound is allowed only via assume_exact_to, which asserts intent.
    DiffPoly truncated(int E) const;
    DiffPoly assume_exact_to(int E) const;

    friend bool operator==(const DiffPoly &a, const DiffPoly &b);

    std::string str() const; // canonical grammar, defined in expr.cpp

  private:
    RingPtr ring_;
    int trunc_ = 0;
    TermMap terms_;

    friend int check_compat(const DiffPoly &a, const DiffPoly &b);
};

int check_compat(const DiffPoly &a, const DiffPoly &b);

DiffPoly dx(const DiffPoly &p);
DiffPoly dx_pow(const DiffPoly &p, int n);

/// e^{i m eps dx} applied to p, truncated at p's eps order.
DiffPoly exp_shift(const DiffPoly &p, int m);

/// d/d(w^var_order), the plain partial derivative in the jet variable.
DiffPoly partial(const DiffPoly &p, int var, int order);
DiffPoly partial0(const DiffPoly &p, int var);

/// eps d/d(eps) + sum over jet variables of w d/dw: scales each monomial by
/// its eps power plus its total variable exponent.
DiffPoly euler_derivation(const DiffPoly &p);

std::map<int, DiffPoly> grade(const DiffPoly &p, GradeKind kind);
bool is_homogeneous(const DiffPoly &p, GradeKind kind, int weight);

/// Slice of the eps^k part, returned with the eps factor stripped.
DiffPoly eps_slice(const DiffPoly &p, int k);
DiffPoly dispersionless(const DiffPoly &p);

DiffPoly filter_terms(const DiffPoly &p, const std::function<bool(const Monomial &)> &keep);
DiffPoly without_var(const DiffPoly &p, int var);
DiffPoly swap_vars(const DiffPoly &p, int a, int b);
/// Shifts every jet order of `var` by delta; negative shifts require all
/// affected orders to stay nonnegative.
DiffPoly shift_jet_orders(const DiffPoly &p, int var, int delta);

bool is_real(const DiffPoly &p);
bool has_even_eps_only(const DiffPoly &p);
/// Membership in the degree-0 part: every term has eps power equal to its
/// total jet order.
bool is_deg_zero(const DiffPoly &p);

/// Substitutes w^a_n -> dx^n(exprs[a]); exprs live in the target ring.
DiffPoly substitute_jets(const DiffPoly &p, const RingPtr &target, const std::vector<DiffPoly> &exprs);

/// Sum of coeff * dx^power, as produced by linearize.
struct LinearOperatorExpr {
    std::vector<std::pair<DiffPoly, int>> terms;
    DiffPoly apply(const DiffPoly &g) const;
};

/// f_* with respect to one variable: sum_n (df/dw^var_n) dx^n.
LinearOperatorExpr linearize(const DiffPoly &f, int var);
LinearOperatorExpr linearize(const DiffPoly &f);

enum class FlowFamily { tau, t1, t2, dr_t };

/// Evolutionary vector field: one right-hand side per dependent variable,
/// stored alongside the potential where the flow is a total x-derivative.
struct Flow {
    FlowFamily family = FlowFamily::tau;
    int index = 0;
    RingPtr ring;
    int trunc = 0;
    std::map<int, DiffPoly> rhs;
    std::map<int, DiffPoly> potential;

    const DiffPoly &rhs_of(int var) const;
};

/// Derivation along the flow: sum over (var, n) of (dg/dw^var_n) dx^n(rhs).
DiffPoly flow_derive(const Flow &flow, const DiffPoly &g);

/// Per-variable commutator D_F(G) - D_G(F); the zero map iff the flows
/// commute to the stored eps order.
Flow commutator_flows(const Flow &F, const Flow &G);

} // namespace dkdv
