#include "hqt/rational.hpp"

namespace hqt {

Rational::Rational(long n, long d) {
    if (d == 0)
        throw DivisionByZero();
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw InvalidData("bad rational literal: " + s);
    v.canonicalize();
    return Rational(v);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw DivisionByZero();
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero())
        throw DivisionByZero();
    return Rational(mpq_class(1 / v_));
}

} // namespace hqt
