#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dkdv {

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator. Zero is 0/1.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long num, long den);
    Rational(const mpz_class &num, const mpz_class &den);
    explicit Rational(const mpq_class &q) : q_(q) { q_.canonicalize(); }

    /// Parses "p" or "p/q"; q must be a positive integer literal.
    static Rational parse(const std::string &text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
    Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
    Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational &a, const Rational &b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational &a, const Rational &b) { return a.q_ < b.q_; }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

  private:
    mpq_class q_;
};

Rational rational_pow(const Rational &base, long e);
mpz_class factorial(unsigned n);
/// n!! with the usual conventions (-1)!! = 1!! = 1.
mpz_class double_factorial(long n);
mpz_class binomial(unsigned n, unsigned k);

/// Element of Q(i). Equality and zero tests are componentwise.
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(long n) : re(n) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    bool is_one() const { return re.is_one() && im.is_zero(); }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational &operator+=(const GaussianRational &o);
    GaussianRational &operator-=(const GaussianRational &o);
    GaussianRational &operator*=(const GaussianRational &o);
    GaussianRational &operator/=(const GaussianRational &o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational &b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational &b) { return a /= b; }

    friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational &a, const GaussianRational &b) { return !(a == b); }

    /// Canonical serialized form "a+b*I" (rational form "p/q" when im = 0).
    std::string str() const;
};

/// i^k for any integer k.
GaussianRational i_pow(long k);

} // namespace dkdv
