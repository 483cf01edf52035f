#ifndef HQT_RATIONAL_HPP
#define HQT_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

#include "hqt/errors.hpp"

namespace hqt {

// Exact rational number. Invariant: gcd(|num|, den) = 1, den >= 1.
// Backed by GMP, which maintains the canonical form through mpq arithmetic.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d);
    explicit Rational(const mpq_class& v) : v_(v) {}

    static Rational parse(const std::string& s);
    std::string str() const { return v_.get_str(); } // "p" or "p/q", lowest terms

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational inverse() const;

    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

} // namespace hqt

#endif
