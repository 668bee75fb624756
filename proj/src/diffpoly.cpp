#include "dkdv/diffpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace dkdv {

int RingDesc::var_index(const std::string &name) const {
    for (int i = 0; i < size(); ++i)
        if (names[static_cast<size_t>(i)] == name) return i;
    return -1;
}

RingPtr make_ring(std::vector<std::string> names, std::vector<int> odeg) {
    if (names.size() != odeg.size()) throw std::invalid_argument("make_ring: names/odeg size mismatch");
    return std::make_shared<const RingDesc>(RingDesc{std::move(names), std::move(odeg)});
}

namespace rings {
RingPtr uv() {
    static RingPtr r = make_ring({"u", "v"}, {2, 1});
    return r;
}
RingPtr uw() {
    static RingPtr r = make_ring({"u", "w"}, {2, 1});
    return r;
}
RingPtr w12() {
    static RingPtr r = make_ring({"w1", "w2"}, {2, 1});
    return r;
}
RingPtr dr() {
    static RingPtr r = make_ring({"u1", "u2"}, {2, 1});
    return r;
}
RingPtr v12() {
    static RingPtr r = make_ring({"v1", "v2"}, {2, 1});
    return r;
}
RingPtr wonly() {
    static RingPtr r = make_ring({"w"}, {1});
    return r;
}
RingPtr chart(const std::string &name) {
    if (name == "uv") return uv();
    if (name == "w") return w12();
    if (name == "dr") return dr();
    throw std::invalid_argument("unknown chart '" + name + "' (expected uv|w|dr)");
}
} // namespace rings

int Monomial::jet_weight() const {
    int w = 0;
    for (const auto &f : factors) w += f.order * f.exp;
    return w;
}

int Monomial::total_exp() const {
    int e = 0;
    for (const auto &f : factors) e += f.exp;
    return e;
}

int Monomial::odeg(const RingDesc &ring) const {
    int w = 0;
    for (const auto &f : factors) w += ring.odeg[static_cast<size_t>(f.var)] * f.exp;
    return w;
}

bool MonomialOrder::operator()(const Monomial &a, const Monomial &b) const {
    if (a.eps != b.eps) return a.eps < b.eps;
    int da = a.total_exp(), db = b.total_exp();
    if (da != db) return da > db;
    size_t n = std::min(a.factors.size(), b.factors.size());
    for (size_t k = 0; k < n; ++k) {
        const auto &fa = a.factors[k], &fb = b.factors[k];
        if (fa.var != fb.var) return fa.var < fb.var;
        if (fa.order != fb.order) return fa.order < fb.order;
        if (fa.exp != fb.exp) return fa.exp > fb.exp;
    }
    return a.factors.size() < b.factors.size();
}

Monomial mono_mul(const Monomial &a, const Monomial &b) {
    Monomial m;
    m.eps = a.eps + b.eps;
    m.factors.reserve(a.factors.size() + b.factors.size());
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        const auto &fa = a.factors[i], &fb = b.factors[j];
        if (fa.var == fb.var && fa.order == fb.order) {
            m.factors.push_back({fa.var, fa.order, fa.exp + fb.exp});
            ++i, ++j;
        } else if (fa.var < fb.var || (fa.var == fb.var && fa.order < fb.order)) {
            m.factors.push_back(fa);
            ++i;
        } else {
            m.factors.push_back(fb);
            ++j;
        }
    }
    for (; i < a.factors.size(); ++i) m.factors.push_back(a.factors[i]);
    for (; j < b.factors.size(); ++j) m.factors.push_back(b.factors[j]);
    return m;
}

int check_compat(const DiffPoly &a, const DiffPoly &b) {
    if (!a.ring_ || !b.ring_) throw std::invalid_argument("DiffPoly: uninitialized ring");
    if (!(*a.ring_ == *b.ring_)) throw std::invalid_argument("DiffPoly: ring descriptor mismatch");
    return std::min(a.trunc_, b.trunc_);
}

DiffPoly DiffPoly::constant(RingPtr ring, int trunc, GaussianRational c) {
    DiffPoly p(std::move(ring), trunc);
    p.add_term(Monomial{}, c);
    return p;
}

DiffPoly DiffPoly::jet(RingPtr ring, int trunc, int v, int order) {
    if (v < 0 || v >= ring->size()) throw std::invalid_argument("DiffPoly::jet: variable index out of range");
    DiffPoly p(std::move(ring), trunc);
    Monomial m;
    m.factors.push_back({v, order, 1});
    p.add_term(m, GaussianRational(1));
    return p;
}

DiffPoly DiffPoly::eps(RingPtr ring, int trunc, int pow) {
    DiffPoly p(std::move(ring), trunc);
    Monomial m;
    m.eps = pow;
    if (pow <= trunc) p.add_term(m, GaussianRational(1));
    return p;
}

void DiffPoly::add_term(const Monomial &m, const GaussianRational &c) {
    if (c.is_zero() || m.eps > trunc_) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffPoly DiffPoly::operator-() const {
    DiffPoly p(ring_, trunc_);
    for (const auto &[m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

DiffPoly &DiffPoly::operator+=(const DiffPoly &o) {
    int E = check_compat(*this, o);
    if (E < trunc_) *this = truncated(E);
    for (const auto &[m, c] : o.terms_) add_term(m, c);
    return *this;
}

DiffPoly &DiffPoly::operator-=(const DiffPoly &o) {
    int E = check_compat(*this, o);
    if (E < trunc_) *this = truncated(E);
    for (const auto &[m, c] : o.terms_) add_term(m, -c);
    return *this;
}

DiffPoly operator*(const DiffPoly &a, const DiffPoly &b) {
    int E = check_compat(a, b);
    DiffPoly p(a.ring(), E);
    for (const auto &[ma, ca] : a.terms()) {
        if (ma.eps > E) continue;
        for (const auto &[mb, cb] : b.terms()) {
            if (ma.eps + mb.eps > E) continue;
            p.add_term(mono_mul(ma, mb), ca * cb);
        }
    }
    return p;
}

DiffPoly DiffPoly::scaled(const GaussianRational &f) const {
    DiffPoly p(ring_, trunc_);
    if (f.is_zero()) return p;
    for (const auto &[m, c] : terms_) p.terms_.emplace(m, c * f);
    return p;
}

DiffPoly DiffPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("DiffPoly::pow: negative exponent");
    DiffPoly r = constant(ring_, trunc_, GaussianRational(1));
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
}

DiffPoly DiffPoly::mul_eps(int k) const {
    DiffPoly p(ring_, trunc_);
    for (const auto &[m, c] : terms_) {
        if (m.eps + k > trunc_) continue;
        Monomial mm = m;
        mm.eps += k;
        p.terms_.emplace(mm, c);
    }
    return p;
}

DiffPoly DiffPoly::div_ieps() const {
    DiffPoly p(ring_, trunc_ - 1);
    GaussianRational minus_i{Rational(0), Rational(-1)};
    for (const auto &[m, c] : terms_) {
        if (m.eps == 0)
            throw std::logic_error("DiffPoly::div_ieps: nonzero eps^0 part, commutative limit violated");
        Monomial mm = m;
        mm.eps -= 1;
        p.add_term(mm, c * minus_i);
    }
    return p;
}

DiffPoly DiffPoly::truncated(int E) const {
    DiffPoly p(ring_, std::min(E, trunc_));
    for (const auto &[m, c] : terms_)
        if (m.eps <= p.trunc_) p.terms_.emplace(m, c);
    return p;
}

DiffPoly DiffPoly::assume_exact_to(int E) const {
    if (E <= trunc_) return truncated(E);
    DiffPoly p(ring_, E);
    p.terms_ = terms_;
    return p;
}

bool operator==(const DiffPoly &a, const DiffPoly &b) {
    check_compat(a, b);
    return a.terms_ == b.terms_;
}

DiffPoly dx(const DiffPoly &p) {
    DiffPoly r(p.ring(), p.trunc());
    for (const auto &[m, c] : p.terms()) {
        for (size_t k = 0; k < m.factors.size(); ++k) {
            Monomial mm;
            mm.eps = m.eps;
            mm.factors.reserve(m.factors.size() + 1);
            for (size_t j = 0; j < m.factors.size(); ++j) {
                if (j == k) {
                    JetFactor f = m.factors[j];
                    f.exp -= 1;
                    if (f.exp > 0) mm.factors.push_back(f);
                } else {
                    mm.factors.push_back(m.factors[j]);
                }
            }
            JetFactor raised{m.factors[k].var, m.factors[k].order + 1, 1};
            Monomial one;
            one.factors.push_back(raised);
            r.add_term(mono_mul(mm, one), c * GaussianRational(Rational(m.factors[k].exp)));
        }
    }
    return r;
}

DiffPoly dx_pow(const DiffPoly &p, int n) {
    DiffPoly r = p;
    for (int k = 0; k < n; ++k) r = dx(r);
    return r;
}

DiffPoly exp_shift(const DiffPoly &p, int m) {
    DiffPoly acc(p.ring(), p.trunc());
    DiffPoly cur = p;
    mpz_class mk(1);
    for (int k = 0; k <= p.trunc(); ++k) {
        if (k > 0) {
            cur = dx(cur);
            mk *= m;
        }
        if (cur.is_zero()) break;
        GaussianRational coef = i_pow(k) * GaussianRational(Rational(mk, factorial(static_cast<unsigned>(k))));
        acc += cur.scaled(coef).mul_eps(k);
    }
    return acc;
}

DiffPoly partial(const DiffPoly &p, int var, int order) {
    DiffPoly r(p.ring(), p.trunc());
    for (const auto &[m, c] : p.terms()) {
        for (size_t k = 0; k < m.factors.size(); ++k) {
            const JetFactor &f = m.factors[k];
            if (f.var != var || f.order != order) continue;
            Monomial mm;
            mm.eps = m.eps;
            for (size_t j = 0; j < m.factors.size(); ++j) {
                if (j == k) {
                    JetFactor g = f;
                    g.exp -= 1;
                    if (g.exp > 0) mm.factors.push_back(g);
                } else {
                    mm.factors.push_back(m.factors[j]);
                }
            }
            r.add_term(mm, c * GaussianRational(Rational(f.exp)));
        }
    }
    return r;
}

DiffPoly partial0(const DiffPoly &p, int var) { return partial(p, var, 0); }

DiffPoly euler_derivation(const DiffPoly &p) {
    DiffPoly r(p.ring(), p.trunc());
    for (const auto &[m, c] : p.terms())
        r.add_term(m, c * GaussianRational(Rational(m.eps + m.total_exp())));
    return r;
}

std::map<int, DiffPoly> grade(const DiffPoly &p, GradeKind kind) {
    std::map<int, DiffPoly> parts;
    for (const auto &[m, c] : p.terms()) {
        int w = kind == GradeKind::deg ? m.jet_weight() - m.eps : m.odeg(*p.ring());
        auto it = parts.find(w);
        if (it == parts.end()) it = parts.emplace(w, DiffPoly(p.ring(), p.trunc())).first;
        it->second.add_term(m, c);
    }
    return parts;
}

bool is_homogeneous(const DiffPoly &p, GradeKind kind, int weight) {
    auto parts = grade(p, kind);
    if (parts.empty()) return true;
    return parts.size() == 1 && parts.begin()->first == weight;
}

DiffPoly eps_slice(const DiffPoly &p, int k) {
    DiffPoly r(p.ring(), p.trunc());
    for (const auto &[m, c] : p.terms()) {
        if (m.eps != k) continue;
        Monomial mm = m;
        mm.eps = 0;
        r.add_term(mm, c);
    }
    return r;
}

DiffPoly dispersionless(const DiffPoly &p) { return eps_slice(p, 0); }

DiffPoly filter_terms(const DiffPoly &p, const std::function<bool(const Monomial &)> &keep) {
    DiffPoly r(p.ring(), p.trunc());
    for (const auto &[m, c] : p.terms())
        if (keep(m)) r.add_term(m, c);
    return r;
}

DiffPoly without_var(const DiffPoly &p, int var) {
    return filter_terms(p, [var](const Monomial &m) {
        return std::none_of(m.factors.begin(), m.factors.end(),
                            [var](const JetFactor &f) { return f.var == var; });
    });
}

DiffPoly swap_vars(const DiffPoly &p, int a, int b) {
    DiffPoly r(p.ring(), p.trunc());
    for (const auto &[m, c] : p.terms()) {
        Monomial mm;
        mm.eps = m.eps;
        mm.factors = m.factors;
        for (auto &f : mm.factors) {
            if (f.var == a)
                f.var = b;
            else if (f.var == b)
                f.var = a;
        }
        std::sort(mm.factors.begin(), mm.factors.end(), [](const JetFactor &x, const JetFactor &y) {
            return x.var != y.var ? x.var < y.var : x.order < y.order;
        });
        r.add_term(mm, c);
    }
    return r;
}

DiffPoly shift_jet_orders(const DiffPoly &p, int var, int delta) {
    DiffPoly r(p.ring(), p.trunc());
    for (const auto &[m, c] : p.terms()) {
        Monomial mm;
        mm.eps = m.eps;
        mm.factors = m.factors;
        for (auto &f : mm.factors) {
            if (f.var != var) continue;
            if (f.order + delta < 0)
                throw std::domain_error("shift_jet_orders: jet order would become negative");
            f.order += delta;
        }
        std::sort(mm.factors.begin(), mm.factors.end(), [](const JetFactor &x, const JetFactor &y) {
            return x.var != y.var ? x.var < y.var : x.order < y.order;
        });
        r.add_term(mm, c);
    }
    return r;
}

bool is_real(const DiffPoly &p) {
    for (const auto &[m, c] : p.terms())
        if (!c.is_real()) return false;
    return true;
}

bool has_even_eps_only(const DiffPoly &p) {
    for (const auto &[m, c] : p.terms())
        if (m.eps % 2 != 0) return false;
    return true;
}

bool is_deg_zero(const DiffPoly &p) {
    for (const auto &[m, c] : p.terms())
        if (m.jet_weight() != m.eps) return false;
    return true;
}

DiffPoly substitute_jets(const DiffPoly &p, const RingPtr &target, const std::vector<DiffPoly> &exprs) {
    if (static_cast<int>(exprs.size()) != p.ring()->size())
        throw std::invalid_argument("substitute_jets: incomplete substitution map");
    int E = p.trunc();
    for (const auto &e : exprs) E = std::min(E, e.trunc());
    // dx powers of each substituted expression, computed on demand
    std::vector<std::vector<DiffPoly>> dxp(exprs.size());
    auto jet_expr = [&](int var, int order) -> const DiffPoly & {
        auto &v = dxp[static_cast<size_t>(var)];
        if (v.empty()) v.push_back(exprs[static_cast<size_t>(var)].truncated(E));
        while (static_cast<int>(v.size()) <= order) v.push_back(dx(v.back()));
        return v[static_cast<size_t>(order)];
    };
    DiffPoly acc(target, E);
    for (const auto &[m, c] : p.terms()) {
        if (m.eps > E) continue;
        DiffPoly t = DiffPoly::constant(target, E, c).mul_eps(m.eps);
        for (const auto &f : m.factors) {
            const DiffPoly &base = jet_expr(f.var, f.order);
            for (int k = 0; k < f.exp && !t.is_zero(); ++k) t = t * base;
        }
        acc += t;
    }
    return acc;
}

DiffPoly LinearOperatorExpr::apply(const DiffPoly &g) const {
    if (terms.empty()) throw std::logic_error("LinearOperatorExpr: empty operator");
    DiffPoly acc(terms.front().first.ring(), std::min(terms.front().first.trunc(), g.trunc()));
    for (const auto &[coef, n] : terms) acc += coef * dx_pow(g, n);
    return acc;
}

LinearOperatorExpr linearize(const DiffPoly &f, int var) {
    int max_order = 0;
    for (const auto &[m, c] : f.terms())
        for (const auto &fac : m.factors)
            if (fac.var == var) max_order = std::max(max_order, fac.order);
    LinearOperatorExpr op;
    for (int n = 0; n <= max_order; ++n) {
        DiffPoly d = partial(f, var, n);
        if (!d.is_zero()) op.terms.emplace_back(std::move(d), n);
    }
    if (op.terms.empty()) op.terms.emplace_back(DiffPoly(f.ring(), f.trunc()), 0);
    return op;
}

LinearOperatorExpr linearize(const DiffPoly &f) {
    if (f.ring()->size() != 1)
        throw std::invalid_argument("linearize: variable must be named explicitly in a multivariate ring");
    return linearize(f, 0);
}

const DiffPoly &Flow::rhs_of(int var) const {
    auto it = rhs.find(var);
    if (it == rhs.end())
        throw std::invalid_argument("Flow: missing right-hand side for variable '" +
                                    ring->names[static_cast<size_t>(var)] + "'");
    return it->second;
}

DiffPoly flow_derive(const Flow &flow, const DiffPoly &g) {
    if (!(*flow.ring == *g.ring())) throw std::invalid_argument("flow_derive: ring mismatch");
    int E = std::min(flow.trunc, g.trunc());
    DiffPoly acc(g.ring(), E);
    // per-variable cache of dx^n(rhs)
    std::map<int, std::vector<DiffPoly>> cache;
    int N = g.ring()->size();
    for (int var = 0; var < N; ++var) {
        int max_order = -1;
        for (const auto &[m, c] : g.terms())
            for (const auto &fac : m.factors)
                if (fac.var == var) max_order = std::max(max_order, fac.order);
        if (max_order < 0) continue;
        const DiffPoly &r = flow.rhs_of(var); // throws when the flow omits a used variable
        std::vector<DiffPoly> &d = cache[var];
        d.push_back(r.truncated(E));
        for (int n = 0; n <= max_order; ++n) {
            DiffPoly pg = partial(g, var, n);
            if (!pg.is_zero()) acc += pg * d[static_cast<size_t>(n)];
            if (n < max_order) d.push_back(dx(d.back()));
        }
    }
    return acc;
}

Flow commutator_flows(const Flow &F, const Flow &G) {
    if (!(*F.ring == *G.ring)) throw std::invalid_argument("commutator_flows: ring mismatch");
    Flow K;
    K.family = F.family;
    K.index = -1;
    K.ring = F.ring;
    K.trunc = std::min(F.trunc, G.trunc);
    for (int var = 0; var < F.ring->size(); ++var)
        K.rhs.emplace(var, flow_derive(F, G.rhs_of(var)) - flow_derive(G, F.rhs_of(var)));
    return K;
}

} // namespace dkdv
