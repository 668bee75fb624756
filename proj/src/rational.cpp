#include "dkdv/rational.hpp"

namespace dkdv {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class &num, const mpz_class &den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational &Rational::operator/=(const Rational &o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(const std::string &text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        mpz_class n;
        if (n.set_str(text, 10) != 0) throw std::invalid_argument("Rational: bad literal '" + text + "'");
        return Rational(mpq_class(n));
    }
    mpz_class n, d;
    if (n.set_str(text.substr(0, slash), 10) != 0 || d.set_str(text.substr(slash + 1), 10) != 0 || d <= 0)
        throw std::invalid_argument("Rational: bad literal '" + text + "'");
    return Rational(n, d);
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational rational_pow(const Rational &base, long e) {
    if (e < 0) return Rational(1) / rational_pow(base, -e);
    Rational r(1), b = base;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        b *= b;
    }
    return r;
}

mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class double_factorial(long n) {
    if (n <= 0) return 1;
    mpz_class r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

GaussianRational &GaussianRational::operator+=(const GaussianRational &o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussianRational &GaussianRational::operator-=(const GaussianRational &o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianRational &GaussianRational::operator*=(const GaussianRational &o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussianRational &GaussianRational::operator/=(const GaussianRational &o) {
    if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    Rational n = o.re * o.re + o.im * o.im;
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::string GaussianRational::str() const {
    if (im.is_zero()) return re.str();
    return re.str() + "+" + im.str() + "*I";
}

GaussianRational i_pow(long k) {
    switch (((k % 4) + 4) % 4) {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational::i();
    case 2: return GaussianRational(-1);
    default: return {Rational(0), Rational(-1)};
    }
}

} // namespace dkdv
