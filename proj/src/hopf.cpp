#include "hqt/hopf.hpp"

#include <sstream>

#include "hqt/errors.hpp"

namespace hqt {

std::string HopfAlgebra::basis_name(int b) const {
    std::string s = "e_" + element_name(data.group, bgroup(b));
    if (bdeg(b)) s += "*x";
    return s;
}

HopfAlgebra build_hopf(const ExtensionData& data) {
    const AbelianGroup& G = data.group;
    int n = G.size();
    if ((int)data.sigma.size() != n || (int)data.tau.size() != n * n)
        throw InvalidData("sigma/tau table size mismatch");
    HopfAlgebra h;
    h.data = data;
    h.gsize = n;
    h.dim = 2 * n;
    h.order = data.ambient_order;

    CycNum one = CycNum::one(h.order);
    h.mult.assign((size_t)h.dim * h.dim, {});
    for (int g = 0; g < n; ++g)
        for (int k = 0; k < n; ++k)
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q) {
                    // (e_g x^p)(e_k x^q) = [g = k <| x^p] e_g x^(p+q)
                    int u = h.bidx(g, p), v = h.bidx(k, q);
                    int kk = p ? data.action.apply(k) : k;
                    if (g != kk) continue;
                    HopfAlgebra::Mono m;
                    if (p + q == 2) {
                        m.idx = h.bidx(g, 0);
                        m.coeff = data.sig(g); // x^2 = sum sigma(w) e_w
                    } else {
                        m.idx = h.bidx(g, p + q);
                        m.coeff = one;
                    }
                    h.mult[(size_t)u * h.dim + v] = m;
                }

    h.comult.resize(h.dim);
    for (int g = 0; g < n; ++g) {
        for (int a = 0; a < n; ++a) {
            int b = G.mul(G.inv(a), g); // ab = g
            h.comult[h.bidx(g, 0)].push_back({h.bidx(a, 0), h.bidx(b, 0), one});
            h.comult[h.bidx(g, 1)].push_back({h.bidx(a, 1), h.bidx(b, 1), data.tu(a, b)});
        }
    }

    h.counit.assign(h.dim, CycNum::zero(h.order));
    h.counit[h.bidx(G.identity(), 0)] = one;
    h.counit[h.bidx(G.identity(), 1)] = one;

    // S(e_g) = e_{g^-1}; S(e_g x) = S(x) S(e_g) collapses to a single term.
    h.antipode.assign(h.dim, {});
    for (int g = 0; g < n; ++g) {
        h.antipode[h.bidx(g, 0)] = {h.bidx(G.inv(g), 0), one};
        int gi = G.inv(g);
        CycNum coeff = (data.sig(gi) * data.tu(gi, g)).inv();
        h.antipode[h.bidx(g, 1)] = {h.bidx(data.action.apply(gi), 1), coeff};
    }

    // beta_i beta_j picks the coefficient of b_i (x) b_j in the coproduct
    h.dual_mult.assign((size_t)h.dim * h.dim, {});
    for (int g = 0; g < n; ++g)
        for (int k = 0; k < n; ++k)
            for (int p = 0; p < 2; ++p) {
                int i = h.bidx(g, p), j = h.bidx(k, p);
                HopfAlgebra::Mono m;
                m.idx = h.bidx(G.mul(g, k), p);
                m.coeff = p ? data.tu(g, k) : one;
                h.dual_mult[(size_t)i * h.dim + j] = m;
            }
    return h;
}

namespace {

void report(AxiomReport& rep, const std::string& axiom, const std::string& witness) {
    rep.ok = false;
    if (rep.issues.size() < 32)
        rep.issues.push_back({axiom, witness});
}

using Vec = std::vector<CycNum>;

Vec basis_vec(const HopfAlgebra& h, int b) {
    Vec v(h.dim, CycNum::zero(h.order));
    v[b] = CycNum::one(h.order);
    return v;
}

Vec unit_vec(const HopfAlgebra& h) {
    Vec v(h.dim, CycNum::zero(h.order));
    for (int g = 0; g < h.gsize; ++g)
        v[h.bidx(g, 0)] = CycNum::one(h.order);
    return v;
}

Vec mul_vec(const HopfAlgebra& h, const Vec& a, const Vec& b) {
    Vec out(h.dim, CycNum::zero(h.order));
    for (int u = 0; u < h.dim; ++u) {
        if (a[u].is_zero()) continue;
        for (int v = 0; v < h.dim; ++v) {
            if (b[v].is_zero()) continue;
            const auto& m = h.mul(u, v);
            if (m.idx < 0) continue;
            out[m.idx] += a[u] * b[v] * m.coeff;
        }
    }
    return out;
}

Vec apply_antipode(const HopfAlgebra& h, const Vec& a) {
    Vec out(h.dim, CycNum::zero(h.order));
    for (int u = 0; u < h.dim; ++u) {
        if (a[u].is_zero()) continue;
        const auto& m = h.antipode[u];
        out[m.idx] += a[u] * m.coeff;
    }
    return out;
}

} // namespace

AxiomReport verify_hopf_axioms(const HopfAlgebra& h) {
    AxiomReport rep;
    int dim = h.dim;
    CycNum one = CycNum::one(h.order);

    // associativity on basis triples
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            const auto& ab = h.mul(a, b);
            for (int c = 0; c < dim; ++c) {
                const auto& bc = h.mul(b, c);
                CycNum lhs = CycNum::zero(h.order), rhs = lhs;
                int li = -1, ri = -1;
                if (ab.idx >= 0) {
                    const auto& m = h.mul(ab.idx, c);
                    if (m.idx >= 0) { lhs = ab.coeff * m.coeff; li = m.idx; }
                }
                if (bc.idx >= 0) {
                    const auto& m = h.mul(a, bc.idx);
                    if (m.idx >= 0) { rhs = bc.coeff * m.coeff; ri = m.idx; }
                }
                bool same = (lhs.is_zero() && rhs.is_zero()) || (li == ri && lhs == rhs);
                if (!same)
                    report(rep, "associativity", h.basis_name(a) + "," + h.basis_name(b) + "," + h.basis_name(c));
            }
        }

    // unit
    Vec u = unit_vec(h);
    for (int b = 0; b < dim; ++b) {
        Vec vb = basis_vec(h, b);
        if (mul_vec(h, u, vb) != vb || mul_vec(h, vb, u) != vb)
            report(rep, "unit", h.basis_name(b));
    }

    // coassociativity on basis elements
    for (int b = 0; b < dim; ++b) {
        std::vector<CycNum> lhs((size_t)dim * dim * dim, CycNum::zero(h.order));
        std::vector<CycNum> rhs((size_t)dim * dim * dim, CycNum::zero(h.order));
        for (const auto& t : h.comult[b]) {
            for (const auto& s : h.comult[t.i]) // (Delta (x) id)
                lhs[((size_t)s.i * dim + s.j) * dim + t.j] += t.coeff * s.coeff;
            for (const auto& s : h.comult[t.j]) // (id (x) Delta)
                rhs[((size_t)t.i * dim + s.i) * dim + s.j] += t.coeff * s.coeff;
        }
        if (lhs != rhs)
            report(rep, "coassociativity", h.basis_name(b));
    }

    // counit axiom (eps (x) id) Delta = id = (id (x) eps) Delta
    for (int b = 0; b < dim; ++b) {
        Vec left(dim, CycNum::zero(h.order)), right = left;
        for (const auto& t : h.comult[b]) {
            left[t.j] += t.coeff * h.counit[t.i];
            right[t.i] += t.coeff * h.counit[t.j];
        }
        Vec vb = basis_vec(h, b);
        if (left != vb || right != vb)
            report(rep, "counit", h.basis_name(b));
    }

    // Delta is an algebra map
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            std::vector<CycNum> lhs((size_t)dim * dim, CycNum::zero(h.order));
            std::vector<CycNum> rhs = lhs;
            const auto& m = h.mul(a, b);
            if (m.idx >= 0)
                for (const auto& t : h.comult[m.idx])
                    lhs[(size_t)t.i * dim + t.j] += m.coeff * t.coeff;
            for (const auto& s : h.comult[a])
                for (const auto& t : h.comult[b]) {
                    const auto& m1 = h.mul(s.i, t.i);
                    const auto& m2 = h.mul(s.j, t.j);
                    if (m1.idx < 0 || m2.idx < 0) continue;
                    rhs[(size_t)m1.idx * dim + m2.idx] += s.coeff * t.coeff * m1.coeff * m2.coeff;
                }
            if (lhs != rhs)
                report(rep, "comultiplicative", h.basis_name(a) + "," + h.basis_name(b));
        }

    // eps is an algebra map
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            const auto& m = h.mul(a, b);
            CycNum lhs = m.idx >= 0 ? m.coeff * h.counit[m.idx] : CycNum::zero(h.order);
            if (lhs != h.counit[a] * h.counit[b])
                report(rep, "counit-multiplicative", h.basis_name(a) + "," + h.basis_name(b));
        }
    {
        Vec u2 = unit_vec(h);
        CycNum s = CycNum::zero(h.order);
        for (int b = 0; b < dim; ++b)
            s += u2[b] * h.counit[b];
        if (!s.is_one())
            report(rep, "counit-unital", "eps(1) != 1");
    }

    // antipode axiom m(S (x) id)Delta = u eps = m(id (x) S)Delta
    for (int b = 0; b < dim; ++b) {
        Vec left(dim, CycNum::zero(h.order)), right = left;
        for (const auto& t : h.comult[b]) {
            const auto& sa = h.antipode[t.i];
            const auto& m1 = h.mul(sa.idx, t.j);
            if (m1.idx >= 0)
                left[m1.idx] += t.coeff * sa.coeff * m1.coeff;
            const auto& sb = h.antipode[t.j];
            const auto& m2 = h.mul(t.i, sb.idx);
            if (m2.idx >= 0)
                right[m2.idx] += t.coeff * sb.coeff * m2.coeff;
        }
        Vec expect = unit_vec(h);
        for (auto& x : expect)
            x *= h.counit[b];
        if (left != expect)
            report(rep, "antipode-left", h.basis_name(b));
        if (right != expect)
            report(rep, "antipode-right", h.basis_name(b));
    }

    // S is an involution here (semisimple case)
    for (int b = 0; b < dim; ++b) {
        Vec ss = apply_antipode(h, apply_antipode(h, basis_vec(h, b)));
        if (ss != basis_vec(h, b))
            report(rep, "antipode-involutive", h.basis_name(b));
    }
    (void)one;
    return rep;
}

// ---- tensor arithmetic -------------------------------------------------

TensorElement TensorElement::zero(const HopfAlgebra& h) {
    TensorElement t;
    t.H = &h;
    t.c.assign((size_t)h.dim * h.dim, CycNum::zero(h.order));
    return t;
}

TensorElement TensorElement::unit(const HopfAlgebra& h) {
    TensorElement t = zero(h);
    for (int g = 0; g < h.gsize; ++g)
        for (int k = 0; k < h.gsize; ++k)
            t.at(h.bidx(g, 0), h.bidx(k, 0)) = CycNum::one(h.order);
    return t;
}

TripleTensor TripleTensor::zero(const HopfAlgebra& h) {
    TripleTensor t;
    t.H = &h;
    t.c.assign((size_t)h.dim * h.dim * h.dim, CycNum::zero(h.order));
    return t;
}

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) {
    const HopfAlgebra& h = *a.H;
    if (a.H != b.H)
        throw DimensionMismatch("tensor product over different algebras");
    TensorElement out = TensorElement::zero(h);
    int dim = h.dim;
    std::vector<std::pair<int, const CycNum*>> anz;
    for (int i = 0; i < dim * dim; ++i)
        if (!a.c[i].is_zero()) anz.emplace_back(i, &a.c[i]);
    for (int j = 0; j < dim * dim; ++j) {
        if (b.c[j].is_zero()) continue;
        int u2 = j / dim, v2 = j % dim;
        for (auto& [i, ca] : anz) {
            int u1 = i / dim, v1 = i % dim;
            const auto& mu = h.mul(u1, u2);
            if (mu.idx < 0) continue;
            const auto& mv = h.mul(v1, v2);
            if (mv.idx < 0) continue;
            out.at(mu.idx, mv.idx) += (*ca) * b.c[j] * mu.coeff * mv.coeff;
        }
    }
    return out;
}

TripleTensor triple_mul(const TripleTensor& a, const TripleTensor& b) {
    const HopfAlgebra& h = *a.H;
    TripleTensor out = TripleTensor::zero(h);
    int dim = h.dim;
    size_t n3 = a.c.size();
    std::vector<size_t> anz, bnz;
    for (size_t i = 0; i < n3; ++i) {
        if (!a.c[i].is_zero()) anz.push_back(i);
        if (!b.c[i].is_zero()) bnz.push_back(i);
    }
    for (size_t i : anz) {
        int w1 = (int)(i / ((size_t)dim * dim)), rest = (int)(i % ((size_t)dim * dim));
        int v1 = rest / dim, u1 = rest % dim;
        // coordinates decode as ((slot1*dim + slot2)*dim + slot3)
        int s1 = w1, s2 = v1, s3 = u1;
        for (size_t j : bnz) {
            int t1 = (int)(j / ((size_t)dim * dim)), rest2 = (int)(j % ((size_t)dim * dim));
            int t2 = rest2 / dim, t3 = rest2 % dim;
            const auto& m1 = h.mul(s1, t1);
            if (m1.idx < 0) continue;
            const auto& m2 = h.mul(s2, t2);
            if (m2.idx < 0) continue;
            const auto& m3 = h.mul(s3, t3);
            if (m3.idx < 0) continue;
            out.c[((size_t)m1.idx * dim + m2.idx) * dim + m3.idx] +=
                a.c[i] * b.c[j] * m1.coeff * m2.coeff * m3.coeff;
        }
    }
    return out;
}

namespace {
TripleTensor lift(const TensorElement& t, int slot_a, int slot_b, int unit_slot) {
    const HopfAlgebra& h = *t.H;
    TripleTensor out = TripleTensor::zero(h);
    int dim = h.dim;
    for (int u = 0; u < dim; ++u)
        for (int v = 0; v < dim; ++v) {
            const CycNum& c = t.at(u, v);
            if (c.is_zero()) continue;
            for (int g = 0; g < h.gsize; ++g) {
                int e = h.bidx(g, 0);
                int s[3];
                s[slot_a] = u;
                s[slot_b] = v;
                s[unit_slot] = e;
                out.c[((size_t)s[0] * dim + s[1]) * dim + s[2]] += c;
            }
        }
    return out;
}
} // namespace

TripleTensor lift12(const TensorElement& t) { return lift(t, 0, 1, 2); }
TripleTensor lift13(const TensorElement& t) { return lift(t, 0, 2, 1); }
TripleTensor lift23(const TensorElement& t) { return lift(t, 1, 2, 0); }

TensorElement delta_of_basis(const HopfAlgebra& h, int b) {
    TensorElement t = TensorElement::zero(h);
    for (const auto& term : h.comult[b])
        t.at(term.i, term.j) += term.coeff;
    return t;
}

TensorElement deltaop_of_basis(const HopfAlgebra& h, int b) {
    TensorElement t = TensorElement::zero(h);
    for (const auto& term : h.comult[b])
        t.at(term.j, term.i) += term.coeff;
    return t;
}

TripleTensor delta_first(const TensorElement& t) {
    const HopfAlgebra& h = *t.H;
    TripleTensor out = TripleTensor::zero(h);
    int dim = h.dim;
    for (int u = 0; u < dim; ++u)
        for (int v = 0; v < dim; ++v) {
            const CycNum& c = t.at(u, v);
            if (c.is_zero()) continue;
            for (const auto& term : h.comult[u])
                out.c[((size_t)term.i * dim + term.j) * dim + v] += c * term.coeff;
        }
    return out;
}

TripleTensor delta_second(const TensorElement& t) {
    const HopfAlgebra& h = *t.H;
    TripleTensor out = TripleTensor::zero(h);
    int dim = h.dim;
    for (int u = 0; u < dim; ++u)
        for (int v = 0; v < dim; ++v) {
            const CycNum& c = t.at(u, v);
            if (c.is_zero()) continue;
            for (const auto& term : h.comult[v])
                out.c[((size_t)u * dim + term.i) * dim + term.j] += c * term.coeff;
        }
    return out;
}

TripleTensor braid_13_23(const TensorElement& r) {
    const HopfAlgebra& h = *r.H;
    TripleTensor out = TripleTensor::zero(h);
    int dim = h.dim;
    // column index of nonzero entries by second slot
    std::vector<std::vector<int>> col(dim);
    for (int u = 0; u < dim; ++u)
        for (int v = 0; v < dim; ++v)
            if (!r.at(u, v).is_zero()) col[v].push_back(u);
    for (int u = 0; u < dim; ++u)
        for (int v = 0; v < dim; ++v) {
            const CycNum& c1 = r.at(u, v);
            if (c1.is_zero()) continue;
            for (int v2 = 0; v2 < dim; ++v2) {
                const auto& m = h.mul(v, v2);
                if (m.idx < 0) continue;
                for (int u2 : col[v2]) {
                    out.c[((size_t)u * dim + u2) * dim + m.idx] += c1 * r.at(u2, v2) * m.coeff;
                }
            }
        }
    return out;
}

TripleTensor braid_13_12(const TensorElement& r) {
    const HopfAlgebra& h = *r.H;
    TripleTensor out = TripleTensor::zero(h);
    int dim = h.dim;
    std::vector<std::vector<int>> row(dim); // nonzero second-slots by first slot
    for (int u = 0; u < dim; ++u)
        for (int v = 0; v < dim; ++v)
            if (!r.at(u, v).is_zero()) row[u].push_back(v);
    for (int u = 0; u < dim; ++u)
        for (int v = 0; v < dim; ++v) {
            const CycNum& c1 = r.at(u, v);
            if (c1.is_zero()) continue;
            for (int u2 = 0; u2 < dim; ++u2) {
                const auto& m = h.mul(u, u2);
                if (m.idx < 0) continue;
                for (int v2 : row[u2])
                    out.c[((size_t)m.idx * dim + v2) * dim + v] += c1 * r.at(u2, v2) * m.coeff;
            }
        }
    return out;
}

// ---- dual side ---------------------------------------------------------

DualProductReport dual_products(const HopfAlgebra& h) {
    DualProductReport rep;
    const AbelianGroup& G = h.data.group;
    int n = h.gsize;
    auto fail = [&](const std::string& rule, int g, int k) {
        rep.ok = false;
        if (rep.issues.size() < 32)
            rep.issues.push_back({rule, "(" + element_name(G, g) + "," + element_name(G, k) + ")"});
    };
    for (int g = 0; g < n; ++g)
        for (int k = 0; k < n; ++k) {
            const auto& ee = h.dmul(h.bidx(g, 0), h.bidx(k, 0));
            if (ee.idx != h.bidx(G.mul(g, k), 0) || !ee.coeff.is_one())
                fail("E_g E_h = E_gh", g, k);
            const auto& xx = h.dmul(h.bidx(g, 1), h.bidx(k, 1));
            if (xx.idx != h.bidx(G.mul(g, k), 1) || xx.coeff != h.data.tu(g, k))
                fail("X_g X_h = tau(g,h) X_gh", g, k);
            const auto& ex = h.dmul(h.bidx(g, 0), h.bidx(k, 1));
            const auto& xe = h.dmul(h.bidx(g, 1), h.bidx(k, 0));
            if (ex.idx >= 0 || xe.idx >= 0)
                fail("E_g X_h = X_h E_g = 0", g, k);
        }
    return rep;
}

namespace {

using Vec = std::vector<CycNum>;

Vec dual_basis_vec(const HopfAlgebra& h, int i) {
    Vec v(h.dim, CycNum::zero(h.order));
    v[i] = CycNum::one(h.order);
    return v;
}

Vec dual_mul_vec(const HopfAlgebra& h, const Vec& a, const Vec& b) {
    Vec out(h.dim, CycNum::zero(h.order));
    for (int i = 0; i < h.dim; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < h.dim; ++j) {
            if (b[j].is_zero()) continue;
            const auto& m = h.dmul(i, j);
            if (m.idx < 0) continue;
            out[m.idx] += a[i] * b[j] * m.coeff;
        }
    }
    return out;
}

Vec dual_pow(const HopfAlgebra& h, const Vec& a, int e) {
    Vec acc = a;
    for (int i = 1; i < e; ++i)
        acc = dual_mul_vec(h, acc, a);
    return acc;
}

} // namespace

PresentationReport dual_presentation_check(const HopfAlgebra& h) {
    auto nopt = k8n_shape(h.data);
    if (!nopt)
        throw NotK8nShape();
    int n = *nopt;
    const AbelianGroup& G = h.data.group;
    int a = G.generator(0), b = G.generator(1);
    PresentationReport rep;
    auto expect = [&](const std::string& rule, const Vec& got, const Vec& want) {
        if (got != want) {
            rep.ok = false;
            rep.issues.push_back({rule, ""});
        }
    };

    Vec Xa = dual_basis_vec(h, h.bidx(a, 1));
    Vec Xb = dual_basis_vec(h, h.bidx(b, 1));
    Vec X1 = dual_basis_vec(h, h.bidx(G.identity(), 1));
    Vec Ea = dual_basis_vec(h, h.bidx(a, 0));
    Vec Eb = dual_basis_vec(h, h.bidx(b, 0));
    Vec E1 = dual_basis_vec(h, h.bidx(G.identity(), 0));

    CycNum prod = CycNum::one(h.order);
    for (int i = 1; i <= 2 * n - 1; ++i)
        prod *= h.data.tu(a, G.pow(a, i));
    Vec want = X1;
    for (auto& x : want) x *= prod;
    expect("X_a^2n = prod tau(a,a^i) X_1", dual_pow(h, Xa, 2 * n), want);

    want = X1;
    for (auto& x : want) x *= h.data.tu(b, b);
    expect("X_b^2 = tau(b,b) X_1", dual_mul_vec(h, Xb, Xb), want);

    CycNum et = h.data.tu(a, b) / h.data.tu(b, a);
    want = dual_mul_vec(h, Xa, Xb);
    for (auto& x : want) x *= et;
    expect("X_b X_a = eta(a,b) X_a X_b", dual_mul_vec(h, Xb, Xa), want);

    expect("E_a^2n = E_1", dual_pow(h, Ea, 2 * n), E1);
    expect("E_b^2 = E_1", dual_mul_vec(h, Eb, Eb), E1);
    expect("E_b E_a = E_a E_b", dual_mul_vec(h, Eb, Ea), dual_mul_vec(h, Ea, Eb));

    Vec zero(h.dim, CycNum::zero(h.order));
    expect("X_1 E_1 = 0", dual_mul_vec(h, X1, E1), zero);
    expect("E_1 X_1 = 0", dual_mul_vec(h, E1, X1), zero);

    // spanning: X_a^i X_b^j and E_a^i E_b^j, 1 <= i <= 2n, 1 <= j <= 2
    RowSpan span(h.dim, h.order);
    for (int kind = 0; kind < 2; ++kind) {
        Vec gena = kind ? Ea : Xa;
        Vec genb = kind ? Eb : Xb;
        Vec pa = gena;
        for (int i = 1; i <= 2 * n; ++i) {
            Vec pb = genb;
            for (int j = 1; j <= 2; ++j) {
                span.add(dual_mul_vec(h, pa, pb));
                pb = dual_mul_vec(h, pb, genb);
            }
            pa = dual_mul_vec(h, pa, gena);
        }
    }
    rep.span_rank = span.rank();
    if (rep.span_rank != h.dim) {
        rep.ok = false;
        rep.issues.push_back({"span", "rank " + std::to_string(rep.span_rank)});
    }
    return rep;
}

std::vector<CycNum> algebra_mul(const HopfAlgebra& h, const std::vector<CycNum>& a,
                                const std::vector<CycNum>& b) {
    return mul_vec(h, a, b);
}

std::vector<CycNum> dual_algebra_mul(const HopfAlgebra& h, const std::vector<CycNum>& a,
                                     const std::vector<CycNum>& b) {
    return dual_mul_vec(h, a, b);
}

std::vector<CycNum> solve_x_inverse(const HopfAlgebra& h) {
    // columns: x * b_v expanded over the basis
    CycMatrix m(h.dim, h.dim, h.order);
    for (int g = 0; g < h.gsize; ++g) {
        int xrow = h.bidx(g, 1); // x = sum_g e_g x
        for (int v = 0; v < h.dim; ++v) {
            const auto& mm = h.mul(xrow, v);
            if (mm.idx >= 0)
                m.at(mm.idx, v) += mm.coeff;
        }
    }
    std::vector<CycNum> one(h.dim, CycNum::zero(h.order));
    for (int g = 0; g < h.gsize; ++g)
        one[h.bidx(g, 0)] = CycNum::one(h.order);
    std::vector<CycNum> y = solve(m, one);
    return y;
}

} // namespace hqt
