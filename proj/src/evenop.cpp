#include "dkdv/evenop.hpp"

#include <stdexcept>

namespace dkdv {

NamedOp named_op_from_string(const std::string &name) {
    if (name == "L") return NamedOp::L;
    if (name == "R") return NamedOp::R;
    if (name == "X") return NamedOp::X;
    if (name == "T") return NamedOp::T;
    throw std::invalid_argument("unknown operator '" + name + "'");
}

EvenOp::EvenOp(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("EvenOp: empty coefficient list");
}

EvenOp EvenOp::identity(int G) {
    std::vector<Rational> c(static_cast<size_t>(G) + 1);
    c[0] = Rational(1);
    return EvenOp(std::move(c));
}

TaylorSeries EvenOp::hat() const {
    TaylorSeries s(2 * degree());
    for (int g = 0; g <= degree(); ++g) s[2 * g] = c_[static_cast<size_t>(g)];
    return s;
}

EvenOp EvenOp::from_hat(const TaylorSeries &hat) {
    int G = hat.order() / 2;
    std::vector<Rational> c(static_cast<size_t>(G) + 1);
    for (int k = 0; k <= hat.order(); ++k) {
        if (k % 2 == 0)
            c[static_cast<size_t>(k / 2)] = hat[k];
        else if (!hat[k].is_zero())
            throw std::invalid_argument("EvenOp::from_hat: series has an odd term");
    }
    return EvenOp(std::move(c));
}

EvenOp EvenOp::compose(const EvenOp &other) const { return from_hat(hat() * other.hat()); }

EvenOp EvenOp::invert() const {
    if (!c_[0].is_one()) throw std::domain_error("EvenOp::invert: constant term must be 1");
    return from_hat(hat().inverse());
}

EvenOp EvenOp::sqrt() const {
    if (!c_[0].is_one()) throw std::domain_error("EvenOp::sqrt: constant term must be 1");
    return from_hat(hat().sqrt_one());
}

DiffPoly EvenOp::apply(const DiffPoly &p) const {
    DiffPoly acc = p.scaled(GaussianRational(c_[0]));
    DiffPoly cur = p;
    for (int g = 1; g <= degree(); ++g) {
        if (2 * g > p.trunc()) break;
        cur = dx(dx(cur));
        if (c_[static_cast<size_t>(g)].is_zero()) continue;
        acc += cur.scaled(GaussianRational(c_[static_cast<size_t>(g)])).mul_eps(2 * g);
    }
    return acc;
}

namespace {
TaylorSeries cos_half_series(int order) {
    TaylorSeries c(order);
    for (int k = 0; 2 * k <= order; ++k) {
        Rational term(((k % 2) ? mpz_class(-1) : mpz_class(1)), mpz_class(1) << (2 * k));
        c[2 * k] = term / Rational(factorial(static_cast<unsigned>(2 * k)), 1);
    }
    return c;
}
// sin(z/2)/(z/2)
TaylorSeries sinc_half_series(int order) {
    TaylorSeries s(order);
    for (int k = 0; 2 * k <= order; ++k) {
        Rational term(((k % 2) ? mpz_class(-1) : mpz_class(1)), mpz_class(1) << (2 * k));
        s[2 * k] = term / Rational(factorial(static_cast<unsigned>(2 * k + 1)), 1);
    }
    return s;
}
} // namespace

TaylorSeries lhat_series(int order) { return sinc_half_series(order).inverse(); }

TaylorSeries rhat_series(int order) {
    return sinc_half_series(order) * cos_half_series(order).inverse();
}

TaylorSeries that_series(int order) { return rhat_series(order).sqrt_one(); }

TaylorSeries sec_half_series(int order) { return cos_half_series(order).inverse(); }

EvenOp EvenOp::named(NamedOp which, int G) {
    switch (which) {
    case NamedOp::L: return from_hat(lhat_series(2 * G));
    case NamedOp::R:
    case NamedOp::X: return from_hat(rhat_series(2 * G));
    case NamedOp::T: return from_hat(that_series(2 * G));
    }
    throw std::logic_error("EvenOp::named: unreachable");
}

ConstCoeffOp ConstCoeffOp::identity(int order) {
    return ConstCoeffOp(Series<GaussianRational>::one(order));
}

ConstCoeffOp ConstCoeffOp::shift(int m, int order) {
    // e^{i m eps dx}: coefficient of (eps dx)^k is (i m)^k / k!
    Series<GaussianRational> s(order);
    mpz_class mk(1);
    for (int k = 0; k <= order; ++k) {
        if (k > 0) mk *= m;
        s[k] = i_pow(k) * GaussianRational(Rational(mk, factorial(static_cast<unsigned>(k))));
    }
    return ConstCoeffOp(std::move(s));
}

ConstCoeffOp ConstCoeffOp::from_even(const EvenOp &op, int order) {
    Series<GaussianRational> s(order);
    for (int g = 0; g <= op.degree() && 2 * g <= order; ++g)
        s[2 * g] = GaussianRational(op.coeff(g));
    return ConstCoeffOp(std::move(s));
}

DiffPoly ConstCoeffOp::apply(const DiffPoly &p) const {
    DiffPoly acc = p.scaled(s_[0]);
    DiffPoly cur = p;
    for (int k = 1; k <= std::min(order(), p.trunc()); ++k) {
        cur = dx(cur);
        if (s_[k].is_zero()) continue;
        acc += cur.scaled(s_[k]).mul_eps(k);
    }
    return acc;
}

ConstCoeffOp shift_cayley(int order) {
    ConstCoeffOp lam = ConstCoeffOp::shift(1, order);
    ConstCoeffOp one = ConstCoeffOp::identity(order);
    return (lam - one) * (lam + one).inverse();
}

ConstCoeffOp one_plus_shift_inverse(int order) {
    ConstCoeffOp lam = ConstCoeffOp::shift(1, order);
    return (lam + ConstCoeffOp::identity(order)).inverse();
}

} // namespace dkdv
