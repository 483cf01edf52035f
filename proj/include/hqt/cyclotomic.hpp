#ifndef HQT_CYCLOTOMIC_HPP
#define HQT_CYCLOTOMIC_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hqt/rational.hpp"

namespace hqt {

class CycNum;

// Immutable per-order data for Q(zeta_M): the M-th cyclotomic polynomial,
// reduction rows for x^k with k >= phi(M), the M powers of zeta_M in
// canonical form, and a lookup from canonical form back to the exponent.
// Instances are memoized globally and never mutated after construction, so
// they are safe to share across threads.
struct CycField {
    int order = 0;
    int degree = 0;                                 // phi(order)
    std::vector<long long> cyclo;                   // Phi_M, monic, size degree+1
    std::vector<std::vector<Rational>> xk_rows;     // x^(degree+i) mod Phi_M
    std::vector<std::vector<Rational>> zeta_pow;    // coeffs of zeta^k, k in [0, M)
    std::unordered_map<std::string, int> torsion;   // canonical coeff key -> k

    static const CycField& get(int order);
};

// Element of Q(zeta_M) on the power basis 1, zeta, ..., zeta^(phi(M)-1),
// reduced modulo the M-th cyclotomic polynomial. The zero element is stored
// with an empty coefficient vector; any other value carries exactly phi(M)
// coefficients. Two elements of equal order are equal iff their coefficient
// vectors are equal.
class CycNum {
  public:
    CycNum() = default;
    static CycNum zero(int order) { return CycNum(order, {}); }
    static CycNum one(int order);
    static CycNum integer(int order, long v);
    static CycNum rational(int order, const Rational& v);
    static CycNum root(int order, long k); // zeta_order^k
    static CycNum from_coeffs(int order, std::vector<Rational> coeffs);

    int order() const { return order_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const;

    CycNum operator-() const;
    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator/(const CycNum& a, const CycNum& b);
    CycNum& operator+=(const CycNum& o) { *this = *this + o; return *this; }
    CycNum& operator-=(const CycNum& o) { *this = *this - o; return *this; }
    CycNum& operator*=(const CycNum& o) { *this = *this * o; return *this; }
    CycNum& operator/=(const CycNum& o) { *this = *this / o; return *this; }

    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    CycNum inv() const;
    CycNum pow(long e) const;
    CycNum scaled(const Rational& r) const;

    // Total order used for canonical listings; lexicographic on coefficients.
    static int compare(const CycNum& a, const CycNum& b);

    std::string key() const; // canonical string form, usable as a map key
    std::string str() const; // human-readable

    // Exponent k with *this == zeta_order^k, if this is a root of unity.
    std::optional<int> torsion_exponent() const;
    // Multiplicative order, if this is a root of unity in Q(zeta_M).
    std::optional<int> multiplicative_order() const;

  private:
    CycNum(int order, std::vector<Rational> c) : order_(order), c_(std::move(c)) {}
    void normalize();

    int order_ = 0;
    std::vector<Rational> c_;
};

// Canonical embedding Q(zeta_m) -> Q(zeta_M'), zeta_m |-> zeta_M'^(M'/m).
CycNum embed(const CycNum& a, int new_order);

// Partial inverse of embed: expresses a as an element of Q(zeta_sub) when it
// lies in the embedded subfield, where sub | order(a).
std::optional<CycNum> descend(const CycNum& a, int sub_order);

// All x in Q(zeta_M) with x^k = 1, i.e. the gcd(k, M)-th roots of unity,
// listed as zeta^0, zeta^(M/d), zeta^(2M/d), ...
std::vector<CycNum> roots_of_unity(int order, long k);

// All x in Q(zeta_M) with x^k = c. Every solution of x^k = c with c a root
// of unity is itself a root of unity, and the roots of unity of Q(zeta_M)
// are exactly mu_M for even M, so scanning mu_M is exhaustive. Returns an
// empty list when c is not a root of unity.
std::vector<CycNum> solve_root_power(const CycNum& c, long k);

bool is_primitive_root(const CycNum& x, long n);

long lcm_long(long a, long b);

} // namespace hqt

#endif
