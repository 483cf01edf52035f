#include "hqt/rmatrix.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hqt/errors.hpp"

namespace hqt {

// ---- basics --------------------------------------------------------------

RMatrix RMatrix::zero(const HopfAlgebra& h) {
    RMatrix r;
    r.H = &h;
    size_t n2 = (size_t)h.gsize * h.gsize;
    r.w1.assign(n2, CycNum::zero(h.order));
    r.w2 = r.w1;
    r.w3 = r.w1;
    r.w4 = r.w1;
    return r;
}

RMatrix RMatrix::identity(const HopfAlgebra& h) {
    RMatrix r = zero(h);
    for (int g = 0; g < h.gsize; ++g)
        for (int k = 0; k < h.gsize; ++k)
            r.blk(1, g, k) = CycNum::one(h.order);
    return r;
}

CycNum& RMatrix::blk(int which, int g, int h) {
    std::vector<CycNum>* w[4] = {&w1, &w2, &w3, &w4};
    return (*w[which - 1])[(size_t)g * H->gsize + h];
}

const CycNum& RMatrix::blk(int which, int g, int h) const {
    const std::vector<CycNum>* w[4] = {&w1, &w2, &w3, &w4};
    return (*w[which - 1])[(size_t)g * H->gsize + h];
}

TensorElement RMatrix::to_tensor() const {
    const HopfAlgebra& h = *H;
    TensorElement t = TensorElement::zero(h);
    for (int g = 0; g < h.gsize; ++g)
        for (int k = 0; k < h.gsize; ++k) {
            t.at(h.bidx(g, 0), h.bidx(k, 0)) = blk(1, g, k);
            t.at(h.bidx(g, 1), h.bidx(k, 0)) = blk(2, g, k);
            t.at(h.bidx(g, 0), h.bidx(k, 1)) = blk(3, g, k);
            t.at(h.bidx(g, 1), h.bidx(k, 1)) = blk(4, g, k);
        }
    return t;
}

RMatrix RMatrix::from_tensor(const TensorElement& t) {
    const HopfAlgebra& h = *t.H;
    RMatrix r = zero(h);
    for (int g = 0; g < h.gsize; ++g)
        for (int k = 0; k < h.gsize; ++k) {
            r.blk(1, g, k) = t.at(h.bidx(g, 0), h.bidx(k, 0));
            r.blk(2, g, k) = t.at(h.bidx(g, 1), h.bidx(k, 0));
            r.blk(3, g, k) = t.at(h.bidx(g, 0), h.bidx(k, 1));
            r.blk(4, g, k) = t.at(h.bidx(g, 1), h.bidx(k, 1));
        }
    return r;
}

int RMatrix::compare(const RMatrix& a, const RMatrix& b) {
    const std::vector<CycNum>* wa[4] = {&a.w1, &a.w2, &a.w3, &a.w4};
    const std::vector<CycNum>* wb[4] = {&b.w1, &b.w2, &b.w3, &b.w4};
    for (int k = 0; k < 4; ++k) {
        for (size_t i = 0; i < wa[k]->size(); ++i) {
            int c = CycNum::compare((*wa[k])[i], (*wb[k])[i]);
            if (c) return c;
        }
    }
    return 0;
}

void canonical_sort(std::vector<RMatrix>& rs) {
    std::sort(rs.begin(), rs.end(), [](const RMatrix& a, const RMatrix& b) { return RMatrix::compare(a, b) < 0; });
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
}

RMatrix change_ambient(const RMatrix& r, const HopfAlgebra& target) {
    if (r.H->gsize != target.gsize)
        throw DimensionMismatch("ambient change across different groups");
    RMatrix out = RMatrix::zero(target);
    for (int which = 1; which <= 4; ++which)
        for (int g = 0; g < target.gsize; ++g)
            for (int k = 0; k < target.gsize; ++k)
                out.blk(which, g, k) = embed(r.blk(which, g, k), target.order);
    return out;
}

// ---- verification --------------------------------------------------------

namespace {

std::string triple_name(const HopfAlgebra& h, size_t idx) {
    int dim = h.dim;
    int s3 = (int)(idx % dim);
    int s2 = (int)((idx / dim) % dim);
    int s1 = (int)(idx / ((size_t)dim * dim));
    return h.basis_name(s1) + " (x) " + h.basis_name(s2) + " (x) " + h.basis_name(s3);
}

bool tensor_invertible(const HopfAlgebra& h, const TensorElement& r) {
    const AbelianGroup& G = h.data.group;
    int gs = h.gsize;
    std::vector<char> seen((size_t)gs * gs, 0);
    for (int ga = 0; ga < gs; ++ga)
        for (int gb = 0; gb < gs; ++gb) {
            if (seen[(size_t)ga * gs + gb]) continue;
            // orbit of (ga, gb) under the simultaneous involution
            std::vector<std::pair<int, int>> orbit{{ga, gb}};
            int ga2 = h.data.action.apply(ga), gb2 = h.data.action.apply(gb);
            seen[(size_t)ga * gs + gb] = 1;
            if (ga2 != ga || gb2 != gb) {
                orbit.push_back({ga2, gb2});
                seen[(size_t)ga2 * gs + gb2] = 1;
            }
            // basis of the invariant subspace: both x-degrees free
            std::vector<std::pair<int, int>> basis;
            for (auto& [p, q] : orbit)
                for (int dp = 0; dp < 2; ++dp)
                    for (int dq = 0; dq < 2; ++dq)
                        basis.push_back({h.bidx(p, dp), h.bidx(q, dq)});
            std::map<std::pair<int, int>, int> pos;
            for (size_t i = 0; i < basis.size(); ++i)
                pos[basis[i]] = (int)i;
            CycMatrix m((int)basis.size(), (int)basis.size(), h.order);
            for (size_t col = 0; col < basis.size(); ++col) {
                auto [u, v] = basis[col];
                // R * (b_u (x) b_v)
                for (int pg = 0; pg < 2; ++pg)
                    for (int ph = 0; ph < 2; ++ph) {
                        int gg = pg ? h.data.action.apply(h.bgroup(u)) : h.bgroup(u);
                        int hh = ph ? h.data.action.apply(h.bgroup(v)) : h.bgroup(v);
                        const CycNum& c = r.at(h.bidx(gg, pg), h.bidx(hh, ph));
                        if (c.is_zero()) continue;
                        const auto& m1 = h.mul(h.bidx(gg, pg), u);
                        const auto& m2 = h.mul(h.bidx(hh, ph), v);
                        if (m1.idx < 0 || m2.idx < 0) continue;
                        int row = pos.at({m1.idx, m2.idx});
                        m.at(row, (int)col) += c * m1.coeff * m2.coeff;
                    }
            }
            if (rank(m) != (int)basis.size())
                return false;
        }
    (void)G;
    return true;
}

} // namespace

VerifyReport verify_quasitriangular(const HopfAlgebra& h, const RMatrix& r, Exec policy) {
    VerifyReport rep;
    TensorElement rt = r.to_tensor();

    rep.invertible = tensor_invertible(h, rt);
    if (!rep.invertible) {
        rep.ok = false;
        rep.issues.push_back({"invertibility", "left multiplication by R is singular"});
    }

    {
        TripleTensor lhs = delta_first(rt);
        TripleTensor rhs = braid_13_23(rt);
        if (!(lhs == rhs)) {
            rep.ok = false;
            for (size_t i = 0; i < lhs.c.size(); ++i)
                if (lhs.c[i] != rhs.c[i]) {
                    rep.issues.push_back({"(Delta (x) id)R = R13 R23", triple_name(h, i)});
                    break;
                }
        }
    }
    {
        TripleTensor lhs = delta_second(rt);
        TripleTensor rhs = braid_13_12(rt);
        if (!(lhs == rhs)) {
            rep.ok = false;
            for (size_t i = 0; i < lhs.c.size(); ++i)
                if (lhs.c[i] != rhs.c[i]) {
                    rep.issues.push_back({"(id (x) Delta)R = R13 R12", triple_name(h, i)});
                    break;
                }
        }
    }

    // intertwiner on every basis element
    std::vector<char> bad(h.dim, 0);
    parallel_for(policy, h.dim, [&](long b) {
        TensorElement lhs = tensor_mul(deltaop_of_basis(h, (int)b), rt);
        TensorElement rhs = tensor_mul(rt, delta_of_basis(h, (int)b));
        if (!(lhs == rhs)) bad[b] = 1;
    });
    for (int b = 0; b < h.dim; ++b)
        if (bad[b]) {
            rep.ok = false;
            rep.issues.push_back({"Deltaop(h)R = R Delta(h)", "h = " + h.basis_name(b)});
        }
    return rep;
}

FormClass classify_form(const RMatrix& r) {
    const HopfAlgebra& h = *r.H;
    STPartition p = st_partition(h.data);
    std::vector<char> in_fixed(h.gsize, 0);
    for (int s : p.fixed)
        in_fixed[s] = 1;

    bool w234_zero = true;
    for (int g = 0; g < h.gsize && w234_zero; ++g)
        for (int k = 0; k < h.gsize; ++k)
            if (!r.blk(2, g, k).is_zero() || !r.blk(3, g, k).is_zero() || !r.blk(4, g, k).is_zero()) {
                w234_zero = false;
                break;
            }
    if (w234_zero) return FormClass::Trivial;

    for (int g = 0; g < h.gsize; ++g)
        for (int k = 0; k < h.gsize; ++k) {
            bool gs = in_fixed[g], ks = in_fixed[k];
            if (!r.blk(1, g, k).is_zero() && !(gs && ks)) return FormClass::Neither;
            if (!r.blk(2, g, k).is_zero() && !(gs && !ks)) return FormClass::Neither;
            if (!r.blk(3, g, k).is_zero() && !(!gs && ks)) return FormClass::Neither;
            if (!r.blk(4, g, k).is_zero() && !(!gs && !ks)) return FormClass::Neither;
        }
    for (int t1 : p.moved)
        for (int t2 : p.moved)
            if (r.blk(4, t1, t2).is_zero()) return FormClass::Neither;
    return FormClass::NonTrivial;
}

std::string form_name(FormClass f) {
    switch (f) {
        case FormClass::Trivial: return "trivial";
        case FormClass::NonTrivial: return "nontrivial";
        case FormClass::Neither: return "neither";
    }
    return "?";
}

VerifyReport verify_block_criteria(const HopfAlgebra& h, const RMatrix& r) {
    if (!k8n_shape(h.data))
        throw NotK8nShape();
    VerifyReport rep;
    const AbelianGroup& G = h.data.group;
    STPartition p = st_partition(h.data);
    auto act = [&](int g) { return h.data.action.apply(g); };
    auto etav = [&](int g, int k) { return h.data.tu(g, k) / h.data.tu(k, g); };

    if (classify_form(r) != FormClass::NonTrivial) {
        rep.ok = false;
        rep.issues.push_back({"four-block form", "support is not the S/T block pattern"});
        return rep;
    }

    for (int s1 : p.fixed)
        for (int s2 : p.fixed)
            if (h.data.tu(s1, s2) != h.data.tu(s2, s1)) {
                rep.ok = false;
                rep.issues.push_back({"tau symmetric on fixed pairs",
                                      element_name(G, s1) + "," + element_name(G, s2)});
            }

    for (int s : p.fixed)
        for (int t : p.moved) {
            if (r.blk(2, s, act(t)) != r.blk(2, s, t) * etav(s, t)) {
                rep.ok = false;
                rep.issues.push_back({"w2 twist", element_name(G, s) + "," + element_name(G, t)});
            }
            if (r.blk(3, act(t), s) != r.blk(3, t, s) * etav(t, s)) {
                rep.ok = false;
                rep.issues.push_back({"w3 twist", element_name(G, t) + "," + element_name(G, s)});
            }
        }
    for (int t1 : p.moved)
        for (int t2 : p.moved) {
            CycNum lhs = h.data.tu(t2, t1) * r.blk(4, act(t1), act(t2));
            CycNum rhs = h.data.tu(act(t1), act(t2)) * r.blk(4, t1, t2);
            if (lhs != rhs) {
                rep.ok = false;
                rep.issues.push_back({"w4 twist", element_name(G, t1) + "," + element_name(G, t2)});
            }
        }

    // multiplicativity of l and anti-multiplicativity of r on dual pairs
    for (int i = 0; i < h.dim; ++i) {
        std::vector<CycNum> li = l_map(r, i), ri = r_map(r, i);
        for (int j = 0; j < h.dim; ++j) {
            std::vector<CycNum> lj = l_map(r, j), rj = r_map(r, j);
            const auto& m = h.dmul(i, j);
            std::vector<CycNum> want(h.dim, CycNum::zero(h.order));
            if (m.idx >= 0) {
                want = l_map(r, m.idx);
                for (auto& x : want)
                    x *= m.coeff;
            }
            if (algebra_mul(h, li, lj) != want) {
                rep.ok = false;
                rep.issues.push_back({"l multiplicative", h.basis_name(i) + "," + h.basis_name(j)});
            }
            const auto& mo = h.dmul(j, i);
            std::vector<CycNum> wantr(h.dim, CycNum::zero(h.order));
            if (mo.idx >= 0) {
                wantr = r_map(r, mo.idx);
                for (auto& x : wantr)
                    x *= mo.coeff;
            }
            if (algebra_mul(h, ri, rj) != wantr) {
                rep.ok = false;
                rep.issues.push_back({"r anti-multiplicative", h.basis_name(i) + "," + h.basis_name(j)});
            }
            if (rep.issues.size() > 64) return rep;
        }
    }

    if (!tensor_invertible(h, r.to_tensor())) {
        rep.ok = false;
        rep.invertible = false;
        rep.issues.push_back({"invertibility", ""});
    }
    return rep;
}

// ---- the group-like family ----------------------------------------------

TrivialOutcome construct_trivial(const HopfAlgebra& h, const Bicharacter& w) {
    TrivialOutcome out;
    const AbelianGroup& G = h.data.group;
    int n = h.gsize;
    for (int g = 0; g < n; ++g)
        for (int k = 0; k < n; ++k) {
            CycNum et = h.data.tu(g, k) / h.data.tu(k, g);
            if (w.at(h.data.action.apply(g), h.data.action.apply(k)) != w.at(g, k) * et) {
                out.violation = {g, k};
                return out;
            }
        }
    RMatrix r = RMatrix::zero(h);
    for (int g = 0; g < n; ++g)
        for (int k = 0; k < n; ++k)
            r.blk(1, g, k) = w.at(g, k);
    VerifyReport rep = verify_quasitriangular(h, r, Exec::Serial);
    if (!rep.ok)
        throw VerificationFailed("bicharacter passed the twist condition but the candidate failed: " +
                                 (rep.issues.empty() ? std::string("?") : rep.issues.front().equation));
    out.accepted = true;
    out.r = std::move(r);
    (void)G;
    return out;
}

std::vector<RMatrix> enumerate_trivial(const HopfAlgebra& h, Exec policy) {
    std::vector<Bicharacter> cands = enumerate_bicharacters(h.data.group, h.order);
    std::vector<std::optional<RMatrix>> hits(cands.size());
    parallel_for(policy, (long)cands.size(), [&](long i) {
        TrivialOutcome o = construct_trivial(h, cands[i]);
        if (o.accepted) hits[i] = std::move(o.r);
    });
    std::vector<RMatrix> out;
    for (auto& o : hits)
        if (o) out.push_back(std::move(*o));
    canonical_sort(out);
    return out;
}

// ---- the four-block family ----------------------------------------------

K8nNotation::K8nNotation(const HopfAlgebra& h) : H(&h) {
    auto nopt = k8n_shape(h.data);
    if (!nopt)
        throw NotK8nShape();
    n = *nopt;
    const AbelianGroup& G = h.data.group;
    a = G.generator(0);
    b = G.generator(1);
    apow.resize(2 * n + 1);
    apow[0] = G.identity();
    for (int i = 1; i <= 2 * n; ++i)
        apow[i] = G.mul(apow[i - 1], a);
    prefix.assign(2 * n + 1, CycNum::one(h.order));
    for (int i = 2; i <= 2 * n; ++i)
        prefix[i] = prefix[i - 1] * h.data.tu(a, apow[i - 1]);
}

CycNum K8nNotation::lambda(int i, int jexp) const {
    const AbelianGroup& G = H->data.group;
    int aj = G.pow(a, jexp);
    return prefix[i].inv() * H->data.sig(aj).pow(i / 2);
}

CycNum K8nNotation::h_ratio(int t1, int t2) const {
    const auto& act = H->data.action;
    return H->data.tu(t1, t2) / H->data.tu(act.apply(t2), act.apply(t1));
}

CycNum K8nNotation::seed0(int j, const CycNum& alpha, const CycNum& beta) const {
    return lambda(2 * j + 1, 1) * alpha.pow(j + 1) * beta.pow(j);
}

CycNum K8nNotation::seed1(int j, const CycNum& alpha, const CycNum& beta) const {
    const AbelianGroup& G = H->data.group;
    int t = G.mul(apow[(2 * j + 1) % (2 * n)], b);
    return h_ratio(a, t) * lambda(2 * j + 1, 1) * alpha.pow(j) * beta.pow(j + 1);
}

CycNum K8nNotation::eta_ab() const {
    return H->data.tu(a, b) / H->data.tu(b, a);
}

RMatrix build_nontrivial(const HopfAlgebra& h, const CycNum& alpha, const CycNum& beta, EtaVariant variant) {
    K8nNotation nt(h);
    const AbelianGroup& G = h.data.group;
    int n = nt.n;
    CycNum one = CycNum::one(h.order);
    CycNum minus_one = CycNum::integer(h.order, -1);

    CycNum ev = nt.eta_ab();
    if ((variant == EtaVariant::Minus && ev != minus_one) || (variant == EtaVariant::Plus && !ev.is_one()))
        throw VariantMismatch("eta(a,b) = " + ev.str());

    if ((alpha * beta).pow(n) * nt.lambda(2 * n, 1) != one)
        throw ParameterConstraintViolated("(alpha beta)^n lambda(2n,1) != 1");
    CycNum ratio = h.data.tu(nt.b, nt.b) / h.data.tu(nt.b, nt.a).pow(2);
    if (beta.pow(2) / alpha.pow(2) != ratio)
        throw ParameterConstraintViolated("beta^2/alpha^2 != tau(b,b)/tau(b,a)^2");

    bool minus = variant == EtaVariant::Minus;
    RMatrix r = RMatrix::zero(h);
    CycNum ab = alpha * beta;
    auto A = [&](int k) { return nt.apow[((k % (2 * n)) + 2 * n) % (2 * n)]; };
    auto Ab = [&](int k) { return G.mul(A(k), nt.b); };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CycNum v1 = nt.lambda(2 * j, 1).pow(2 * i) * ab.pow(2L * i * j) * h.data.sig(A(2 * j)).pow(i);
            r.blk(1, A(2 * i), A(2 * j)) = v1;
            r.blk(1, Ab(2 * i), A(2 * j)) = v1;
            r.blk(1, A(2 * i), Ab(2 * j)) = v1;
            r.blk(1, Ab(2 * i), Ab(2 * j)) = minus ? -v1 : v1;

            CycNum s0 = nt.seed0(j, alpha, beta), s1 = nt.seed1(j, alpha, beta);
            CycNum v2 = nt.lambda(2 * i, 2 * j + 1) * (s0 * s1).pow(i);
            CycNum c2 = h.data.tu(nt.b, nt.a) * beta / (h.data.tu(nt.b, A(2 * i)) * alpha);
            r.blk(2, A(2 * i), A(2 * j + 1)) = v2;
            r.blk(2, A(2 * i), Ab(2 * j + 1)) = v2;
            r.blk(2, Ab(2 * i), A(2 * j + 1)) = c2 * v2;
            r.blk(2, Ab(2 * i), Ab(2 * j + 1)) = minus ? -(c2 * v2) : c2 * v2;

            CycNum t0 = nt.seed0(i, alpha, beta), t1 = nt.seed1(i, alpha, beta);
            CycNum v3 = nt.lambda(2 * j, 2 * i + 1) * (t0 * t1).pow(j);
            CycNum c3 = h.data.tu(nt.b, nt.a) * beta / (h.data.tu(nt.b, A(2 * j)) * alpha);
            r.blk(3, A(2 * i + 1), A(2 * j)) = v3;
            r.blk(3, Ab(2 * i + 1), A(2 * j)) = v3;
            r.blk(3, A(2 * i + 1), Ab(2 * j)) = minus ? -(c3 * v3) : c3 * v3;
            r.blk(3, Ab(2 * i + 1), Ab(2 * j)) = c3 * v3;

            CycNum l4 = nt.lambda(2 * i + 1, 2 * j + 1);
            r.blk(4, A(2 * i + 1), A(2 * j + 1)) = l4 * s0.pow(i + 1) * s1.pow(i);
            r.blk(4, A(2 * i + 1), Ab(2 * j + 1)) = l4 * s0.pow(i) * s1.pow(i + 1);
            r.blk(4, Ab(2 * i + 1), A(2 * j + 1)) =
                nt.h_ratio(Ab(2 * i + 1), A(2 * j + 1)) * l4 * s0.pow(i) * s1.pow(i + 1);
            r.blk(4, Ab(2 * i + 1), Ab(2 * j + 1)) =
                nt.h_ratio(Ab(2 * i + 1), Ab(2 * j + 1)) * l4 * s0.pow(i + 1) * s1.pow(i);
        }

    VerifyReport rep = verify_quasitriangular(h, r, Exec::Serial);
    if (!rep.ok)
        throw VerificationFailed("constructed four-block candidate failed verification: " +
                                 (rep.issues.empty() ? std::string("?") : rep.issues.front().equation));
    return r;
}

std::vector<RMatrix> enumerate_nontrivial(const HopfAlgebra& h, Exec policy) {
    K8nNotation nt(h);
    int n = nt.n;
    EtaVariant variant = nt.eta_ab().is_one() ? EtaVariant::Plus : EtaVariant::Minus;

    CycNum c1 = nt.lambda(2 * n, 1).inv();
    CycNum ratio2 = h.data.tu(nt.b, nt.b) / h.data.tu(nt.b, nt.a).pow(2);

    std::vector<CycNum> svals = solve_root_power(ratio2, 2);
    if (svals.empty())
        throw AmbientFieldTooSmall("no square root of tau(b,b)/tau(b,a)^2 in the ambient field");
    std::vector<CycNum> uvals = solve_root_power(c1, n);
    if (uvals.empty())
        throw AmbientFieldTooSmall("no n-th root of lambda(2n,1)^-1 in the ambient field");

    std::set<std::pair<std::string, std::string>> seen;
    std::vector<std::pair<CycNum, CycNum>> params;
    for (const CycNum& u : uvals)
        for (const CycNum& s : svals)
            for (const CycNum& alpha : solve_root_power(u / s, 2)) {
                CycNum beta = s * alpha;
                if (seen.insert({alpha.key(), beta.key()}).second)
                    params.push_back({alpha, beta});
            }

    std::vector<RMatrix> out(params.size(), RMatrix());
    parallel_for(policy, (long)params.size(), [&](long i) {
        out[i] = build_nontrivial(h, params[i].first, params[i].second, variant);
    });
    canonical_sort(out);
    return out;
}

std::vector<RMatrix> enumerate_all(const HopfAlgebra& h, Exec policy) {
    ObstructionReport ob = obstruction_check(h.data);
    std::vector<RMatrix> out = enumerate_trivial(h, policy);
    if (k8n_shape(h.data)) {
        if (ob.possible) {
            std::vector<RMatrix> nt = enumerate_nontrivial(h, policy);
            out.insert(out.end(), nt.begin(), nt.end());
        }
    } else if (ob.possible) {
        throw UnsupportedFamily("four-block structures may exist but no closed enumeration applies; use the solver");
    }
    canonical_sort(out);
    return out;
}

// ---- l/r maps and minimality ----------------------------------------------

std::vector<CycNum> l_map(const RMatrix& r, int dual_idx) {
    const HopfAlgebra& h = *r.H;
    TensorElement t = r.to_tensor();
    std::vector<CycNum> v(h.dim, CycNum::zero(h.order));
    for (int u = 0; u < h.dim; ++u)
        v[u] = t.at(dual_idx, u);
    return v;
}

std::vector<CycNum> r_map(const RMatrix& r, int dual_idx) {
    const HopfAlgebra& h = *r.H;
    TensorElement t = r.to_tensor();
    std::vector<CycNum> v(h.dim, CycNum::zero(h.order));
    for (int u = 0; u < h.dim; ++u)
        v[u] = t.at(u, dual_idx);
    return v;
}

std::vector<VerifyIssue> lr_symmetry_issues(const HopfAlgebra& h, const RMatrix& r) {
    std::vector<VerifyIssue> issues;
    STPartition p = st_partition(h.data);
    const AbelianGroup& G = h.data.group;
    for (int t : p.moved) {
        if (l_map(r, h.bidx(t, 1)) != r_map(r, h.bidx(t, 1)))
            issues.push_back({"l(X_t) = r(X_t)", element_name(G, t)});
        if (l_map(r, h.bidx(t, 0)) != r_map(r, h.bidx(h.data.action.apply(t), 0)))
            issues.push_back({"l(E_t) = r(E_t<|x)", element_name(G, t)});
    }
    for (int s : p.fixed)
        if (l_map(r, h.bidx(s, 0)) != r_map(r, h.bidx(s, 0)))
            issues.push_back({"l(E_s) = r(E_s)", element_name(G, s)});
    return issues;
}

namespace {

int span_dimension(const HopfAlgebra& h, const RMatrix& r, Exec policy) {
    int dim = h.dim;
    TensorElement t = r.to_tensor();
    std::vector<std::vector<CycNum>> lv(dim), rv(dim);
    for (int i = 0; i < dim; ++i) {
        lv[i].assign(dim, CycNum::zero(h.order));
        rv[i].assign(dim, CycNum::zero(h.order));
        for (int u = 0; u < dim; ++u) {
            lv[i][u] = t.at(i, u);
            rv[i][u] = t.at(u, i);
        }
    }
    std::vector<std::vector<CycNum>> rows((size_t)dim * dim);
    parallel_for(policy, (long)dim * dim, [&](long k) {
        rows[k] = algebra_mul(h, lv[k / dim], rv[k % dim]);
    });
    RowSpan span(dim, h.order);
    for (auto& row : rows) {
        span.add(std::move(row));
        if (span.rank() == dim) break;
    }
    return span.rank();
}

} // namespace

MinimalityReport minimality(const HopfAlgebra& h, const RMatrix& r, Exec policy) {
    MinimalityReport rep;
    rep.span_dim = span_dimension(h, r, policy);
    rep.verdict = rep.span_dim == h.dim ? Verdict::Minimal : Verdict::NotMinimal;

    FormClass form = classify_form(r);
    if (form == FormClass::Trivial && rep.verdict == Verdict::Minimal) {
        rep.coherent = false;
        rep.note = "group-like structure reported as minimal";
    }

    auto nopt = k8n_shape(h.data);
    if (form == FormClass::NonTrivial && nopt) {
        int n = *nopt;
        K8nNotation nt(h);
        const AbelianGroup& G = h.data.group;
        // interleaved element order: a^0.. then a^0 b.., odd powers likewise
        std::vector<int> S, T;
        for (int j = 0; j < n; ++j)
            S.push_back(nt.apow[2 * j]);
        for (int j = 0; j < n; ++j)
            S.push_back(G.mul(nt.apow[2 * j], nt.b));
        for (int j = 0; j < n; ++j)
            T.push_back(nt.apow[(2 * j + 1) % (2 * n)]);
        for (int j = 0; j < n; ++j)
            T.push_back(G.mul(nt.apow[(2 * j + 1) % (2 * n)], nt.b));

        auto block_rank = [&](int which, const std::vector<int>& rows, const std::vector<int>& cols) {
            CycMatrix m(2 * n, 2 * n, h.order);
            for (int i = 0; i < 2 * n; ++i)
                for (int j = 0; j < 2 * n; ++j)
                    m.at(i, j) = r.blk(which, rows[i], cols[j]);
            return rank(m);
        };
        rep.block_ranks = std::array<int, 4>{block_rank(1, S, S), block_rank(2, S, T),
                                             block_rank(3, T, S), block_rank(4, T, T)};
        bool all_full = true;
        for (int k = 0; k < 4; ++k)
            all_full = all_full && (*rep.block_ranks)[k] == 2 * n;
        if (all_full != (rep.span_dim == h.dim))
            rep.coherent = false;

        if (nt.eta_ab() == CycNum::integer(h.order, -1)) {
            CycNum alpha = r.blk(4, nt.a, nt.a);
            CycNum beta = r.blk(4, nt.a, G.mul(nt.a, nt.b));
            CycNum sa = h.data.sig(nt.a);
            CycNum gamma = (sa * alpha * beta).pow(2) * h.data.sig(nt.apow[2]) / h.data.tu(nt.a, nt.a).pow(2);
            rep.gamma = gamma;
            rep.gamma_primitive = is_primitive_root(gamma, n);
            rep.omega = sa * alpha * beta;
            if (*rep.gamma_primitive != all_full)
                rep.coherent = false;
        }
    }
    return rep;
}

MinimalityReport minimality_criterion(const HopfAlgebra& h) {
    K8nNotation nt(h);
    int n = nt.n;
    MinimalityReport rep;
    if (nt.eta_ab().is_one()) {
        rep.verdict = Verdict::NotMinimal;
        rep.note = "eta(a,b) = 1, so the group-like block of every four-block structure is degenerate";
        return rep;
    }
    CycNum sa2 = h.data.sig(nt.apow[2]);
    CycNum taa2 = h.data.tu(nt.a, nt.a).pow(2);
    for (const CycNum& omega : solve_root_power(nt.prefix[2 * n], n)) {
        CycNum val = omega.pow(2) * sa2 / taa2;
        if (is_primitive_root(val, n))
            rep.omega_witnesses.push_back(omega);
    }
    rep.verdict = rep.omega_witnesses.empty() ? Verdict::NotMinimal : Verdict::Minimal;
    if (rep.verdict == Verdict::Minimal) {
        CycNum sa = h.data.sig(nt.a);
        for (const CycNum& omega : rep.omega_witnesses) {
            CycNum c = -(omega.pow(2) * h.data.tu(nt.a, nt.a).pow(2) / sa2);
            for (const CycNum& alpha : solve_root_power(c, 4)) {
                CycNum beta = omega / (sa * alpha);
                rep.minimal_set.push_back(build_nontrivial(h, alpha, beta, EtaVariant::Minus));
            }
        }
        canonical_sort(rep.minimal_set);
    }
    return rep;
}

} // namespace hqt
