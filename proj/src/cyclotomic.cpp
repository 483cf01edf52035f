#include "hqt/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hqt/errors.hpp"

namespace hqt {

long lcm_long(long a, long b) {
    return a / std::gcd(a, b) * b;
}

namespace {

// Exact division of integer polynomials, divisor monic. Used only to build
// cyclotomic polynomials, whose coefficients stay tiny at the orders we use.
std::vector<long long> polydiv_exact(const std::vector<long long>& num, const std::vector<long long>& den) {
    std::vector<long long> rem = num;
    int dn = (int)num.size() - 1, dd = (int)den.size() - 1;
    std::vector<long long> quo(dn - dd + 1, 0);
    for (int k = dn - dd; k >= 0; --k) {
        long long c = rem[k + dd];
        quo[k] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j)
            rem[k + j] -= c * den[j];
    }
    for (long long r : rem)
        if (r != 0) throw HqtError("cyclotomic polynomial division left a remainder");
    return quo;
}

std::vector<long long> cyclotomic_poly(int M) {
    std::vector<std::vector<long long>> phi(M + 1);
    for (int d = 1; d <= M; ++d) {
        if (M % d) continue;
        std::vector<long long> p(d + 1, 0);
        p[0] = -1;
        p[d] = 1;
        for (int e = 1; e < d; ++e)
            if (d % e == 0) p = polydiv_exact(p, phi[e]);
        phi[d] = p;
    }
    return phi[M];
}

int euler_phi(int M) {
    int r = M;
    for (int p = 2; p * p <= M; ++p) {
        if (M % p == 0) {
            r -= r / p;
            while (M % p == 0) M /= p;
        }
    }
    if (M > 1) r -= r / M;
    return r;
}

std::string coeff_key(const std::vector<Rational>& c) {
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        s += std::to_string(i);
        s += ':';
        s += c[i].str();
        s += ';';
    }
    return s;
}

std::mutex field_mutex;
std::map<int, const CycField*> field_cache;

} // namespace

const CycField& CycField::get(int order) {
    if (order <= 0)
        throw InvalidData("cyclotomic order must be positive");
    {
        std::lock_guard<std::mutex> lk(field_mutex);
        auto it = field_cache.find(order);
        if (it != field_cache.end()) return *it->second;
    }
    auto* f = new CycField;
    f->order = order;
    f->cyclo = cyclotomic_poly(order);
    f->degree = (int)f->cyclo.size() - 1;
    if (f->degree != euler_phi(order))
        throw HqtError("cyclotomic degree mismatch");

    int deg = f->degree;
    std::vector<Rational> xdeg(deg);
    for (int j = 0; j < deg; ++j)
        xdeg[j] = Rational(-f->cyclo[j]); // x^deg = -(lower part of Phi)

    // multiply by x: shift up, reduce the coefficient that falls on x^deg
    auto shift_reduce = [&](std::vector<Rational>& row) {
        Rational top = row[deg - 1];
        for (int j = deg - 1; j > 0; --j)
            row[j] = row[j - 1];
        row[0] = Rational(0);
        if (!top.is_zero())
            for (int j = 0; j < deg; ++j)
                row[j] += top * xdeg[j];
    };

    // x^(degree + i) mod Phi_M for the product reduction
    {
        std::vector<Rational> row = xdeg;
        for (int k = deg; k <= 2 * deg - 2; ++k) {
            f->xk_rows.push_back(row);
            shift_reduce(row);
        }
    }

    // powers of zeta and the torsion lookup
    f->zeta_pow.resize(order);
    {
        std::vector<Rational> row(deg);
        row[0] = Rational(1);
        for (int k = 0; k < order; ++k) {
            f->zeta_pow[k] = row;
            f->torsion.emplace(coeff_key(row), k);
            shift_reduce(row);
        }
    }

    std::lock_guard<std::mutex> lk(field_mutex);
    auto [it, inserted] = field_cache.emplace(order, f);
    if (!inserted) delete f;
    return *it->second;
}

void CycNum::normalize() {
    for (const auto& r : c_)
        if (!r.is_zero()) return;
    c_.clear();
}

CycNum CycNum::one(int order) {
    return integer(order, 1);
}

CycNum CycNum::integer(int order, long v) {
    return rational(order, Rational(v));
}

CycNum CycNum::rational(int order, const Rational& v) {
    const CycField& f = CycField::get(order);
    if (v.is_zero()) return zero(order);
    std::vector<Rational> c(f.degree);
    c[0] = v;
    return CycNum(order, std::move(c));
}

CycNum CycNum::root(int order, long k) {
    const CycField& f = CycField::get(order);
    k %= order;
    if (k < 0) k += order;
    return CycNum(order, f.zeta_pow[k]);
}

CycNum CycNum::from_coeffs(int order, std::vector<Rational> coeffs) {
    const CycField& f = CycField::get(order);
    if ((int)coeffs.size() != f.degree && !coeffs.empty())
        throw InvalidData("coefficient vector has wrong length for order " + std::to_string(order));
    CycNum r(order, std::move(coeffs));
    r.normalize();
    return r;
}

bool CycNum::is_one() const {
    if (c_.empty()) return false;
    if (!c_[0].is_one()) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational CycNum::coeff(int k) const {
    if (c_.empty()) return Rational(0);
    return c_[k];
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

static void check_orders(const CycNum& a, const CycNum& b) {
    if (a.order() != b.order())
        throw IncompatibleOrders(a.order(), b.order());
}

CycNum operator+(const CycNum& a, const CycNum& b) {
    check_orders(a, b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<Rational> c = a.coeffs();
    const auto& bc = b.coeffs();
    for (size_t i = 0; i < c.size(); ++i)
        c[i] += bc[i];
    return CycNum::from_coeffs(a.order(), std::move(c));
}

CycNum operator-(const CycNum& a, const CycNum& b) {
    check_orders(a, b);
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    std::vector<Rational> c = a.coeffs();
    const auto& bc = b.coeffs();
    for (size_t i = 0; i < c.size(); ++i)
        c[i] -= bc[i];
    return CycNum::from_coeffs(a.order(), std::move(c));
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    check_orders(a, b);
    if (a.is_zero() || b.is_zero()) return CycNum::zero(a.order());
    const CycField& f = CycField::get(a.order());
    int deg = f.degree;

    // Skip zero coefficients; nearly all values occurring in practice are
    // monomials c*zeta^k, so the convolution is usually a single product.
    std::vector<int> anz, bnz;
    for (int i = 0; i < deg; ++i)
        if (!a.coeffs()[i].is_zero()) anz.push_back(i);
    for (int i = 0; i < deg; ++i)
        if (!b.coeffs()[i].is_zero()) bnz.push_back(i);

    std::vector<Rational> full(2 * deg - 1);
    for (int i : anz)
        for (int j : bnz)
            full[i + j] += a.coeffs()[i] * b.coeffs()[j];

    std::vector<Rational> c(full.begin(), full.begin() + deg);
    for (int k = deg; k <= 2 * deg - 2; ++k) {
        if (full[k].is_zero()) continue;
        const auto& row = f.xk_rows[k - deg];
        for (int j = 0; j < deg; ++j)
            if (!row[j].is_zero())
                c[j] += full[k] * row[j];
    }
    return CycNum::from_coeffs(a.order(), std::move(c));
}

CycNum operator/(const CycNum& a, const CycNum& b) {
    return a * b.inv();
}

bool operator==(const CycNum& a, const CycNum& b) {
    check_orders(a, b);
    return a.coeffs() == b.coeffs();
}

CycNum CycNum::scaled(const Rational& r) const {
    if (r.is_zero() || is_zero()) return zero(order_);
    std::vector<Rational> c = c_;
    for (auto& x : c)
        x *= r;
    return CycNum(order_, std::move(c));
}

namespace {

using Poly = std::vector<Rational>; // dense, may carry trailing zeros

int poly_deg(const Poly& p) {
    for (int i = (int)p.size() - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

// rem, quo of a / b over Q
void poly_divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
    int db = poly_deg(b);
    rem = a;
    int da = poly_deg(rem);
    quo.assign(std::max(0, da - db + 1), Rational(0));
    while ((da = poly_deg(rem)) >= db && db >= 0) {
        Rational c = rem[da] / b[db];
        quo[da - db] = c;
        for (int j = 0; j <= db; ++j)
            rem[da - db + j] -= c * b[j];
    }
}

} // namespace

CycNum CycNum::inv() const {
    if (is_zero())
        throw DivisionByZero();
    const CycField& f = CycField::get(order_);

    // Fast path: a monomial c*zeta^k inverts to (1/c)*zeta^(M-k).
    int nz = -1;
    bool monomial = true;
    for (int i = 0; i < f.degree; ++i) {
        if (c_[i].is_zero()) continue;
        if (nz >= 0) { monomial = false; break; }
        nz = i;
    }
    if (monomial)
        return root(order_, order_ - nz).scaled(c_[nz].inverse());

    // Extended Euclid in Q[x] against Phi_M: s*a + t*Phi = gcd = const.
    Poly r0(f.degree + 1), r1 = c_;
    for (int i = 0; i <= f.degree; ++i)
        r0[i] = Rational(f.cyclo[i]);
    Poly s0 = {Rational(0)}, s1 = {Rational(1)}; // coefficients of a
    while (poly_deg(r1) > 0) {
        Poly q, rem;
        poly_divmod(r0, r1, q, rem);
        // s_next = s0 - q*s1
        Poly snext(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (size_t i = 0; i < s0.size(); ++i)
            snext[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i].is_zero()) continue;
            for (size_t j = 0; j < s1.size(); ++j)
                snext[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snext);
    }
    int d = poly_deg(r1);
    if (d != 0)
        throw HqtError("element is a zero divisor modulo the cyclotomic polynomial");
    Rational g = r1[0];
    // inverse = s1 / g, reduced mod Phi (degree of s1 < deg Phi already)
    std::vector<Rational> c(f.degree, Rational(0));
    for (size_t i = 0; i < s1.size() && i < (size_t)f.degree; ++i)
        c[i] = s1[i] / g;
    CycNum res = from_coeffs(order_, std::move(c));
    return res;
}

CycNum CycNum::pow(long e) const {
    if (e == 0) return one(order_);
    if (e < 0) return inv().pow(-e);
    CycNum base = *this, acc = one(order_);
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

int CycNum::compare(const CycNum& a, const CycNum& b) {
    check_orders(a, b);
    const CycField& f = CycField::get(a.order());
    for (int i = 0; i < f.degree; ++i) {
        Rational x = a.coeff(i), y = b.coeff(i);
        if (x < y) return -1;
        if (y < x) return 1;
    }
    return 0;
}

std::string CycNum::key() const {
    return coeff_key(is_zero() ? std::vector<Rational>(CycField::get(order_).degree) : c_);
}

std::string CycNum::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].str();
        if (i > 0) os << "*z" << order_ << "^" << i;
    }
    return os.str();
}

std::optional<int> CycNum::torsion_exponent() const {
    if (is_zero()) return std::nullopt;
    const CycField& f = CycField::get(order_);
    auto it = f.torsion.find(coeff_key(c_));
    if (it == f.torsion.end()) return std::nullopt;
    return it->second;
}

std::optional<int> CycNum::multiplicative_order() const {
    auto e = torsion_exponent();
    if (!e) return std::nullopt;
    return order_ / std::gcd(order_, *e == 0 ? order_ : *e);
}

CycNum embed(const CycNum& a, int new_order) {
    if (a.order() == new_order) return a;
    if (new_order % a.order() != 0)
        throw NotADivisor(a.order(), new_order);
    long step = new_order / a.order();
    CycNum res = CycNum::zero(new_order);
    const auto& c = a.coeffs();
    const CycField& g = CycField::get(new_order);
    std::vector<Rational> acc(g.degree);
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        const auto& zp = g.zeta_pow[(k * step) % new_order];
        for (int j = 0; j < g.degree; ++j)
            if (!zp[j].is_zero())
                acc[j] += c[k] * zp[j];
    }
    return CycNum::from_coeffs(new_order, std::move(acc));
}

std::optional<CycNum> descend(const CycNum& a, int sub_order) {
    if (a.order() == sub_order) return a;
    if (a.order() % sub_order != 0)
        throw NotADivisor(sub_order, a.order());
    const CycField& big = CycField::get(a.order());
    const CycField& small = CycField::get(sub_order);
    if (a.is_zero()) return CycNum::zero(sub_order);

    // Solve sum_j b_j * embed(zeta_sub^j) = a by Gaussian elimination on the
    // (big.degree) x (small.degree) embedding matrix.
    int rows = big.degree, cols = small.degree;
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
    for (int j = 0; j < cols; ++j) {
        CycNum col = embed(CycNum::root(sub_order, j), a.order());
        for (int i = 0; i < rows; ++i)
            m[i][j] = col.coeff(i);
    }
    for (int i = 0; i < rows; ++i)
        m[i][cols] = a.coeff(i);

    std::vector<int> pivot_col(rows, -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[pr], m[r]);
        Rational inv = m[r][c].inverse();
        for (int j = c; j <= cols; ++j)
            m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (int j = c; j <= cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivot_col[r] = c;
        ++r;
    }
    // consistency: zero rows must have zero rhs
    for (int i = r; i < rows; ++i)
        if (!m[i][cols].is_zero()) return std::nullopt;
    std::vector<Rational> b(cols, Rational(0));
    for (int i = 0; i < r; ++i)
        b[pivot_col[i]] = m[i][cols];
    CycNum cand = CycNum::from_coeffs(sub_order, std::move(b));
    if (embed(cand, a.order()) != a) return std::nullopt;
    return cand;
}

std::vector<CycNum> roots_of_unity(int order, long k) {
    long d = std::gcd<long>(k, order);
    std::vector<CycNum> out;
    out.reserve(d);
    for (long j = 0; j < d; ++j)
        out.push_back(CycNum::root(order, j * (order / d)));
    return out;
}

std::vector<CycNum> solve_root_power(const CycNum& c, long k) {
    int M = c.order();
    std::vector<CycNum> out;
    auto ce = c.torsion_exponent();
    if (!ce) return out;
    for (int j = 0; j < M; ++j) {
        if ((int)((long)j * k % M) == ((*ce) % M))
            out.push_back(CycNum::root(M, j));
    }
    return out;
}

bool is_primitive_root(const CycNum& x, long n) {
    if (!(x.pow(n).is_one())) return false;
    for (long d = 1; d < n; ++d)
        if (n % d == 0 && x.pow(d).is_one()) return false;
    return true;
}

} // namespace hqt
