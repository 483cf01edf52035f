#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hqt/catalog.hpp"
#include "hqt/errors.hpp"
#include "hqt/rmatrix.hpp"

using namespace hqt;

namespace {

Bicharacter from_generator_values(const AbelianGroup& g, int order,
                                  const std::vector<std::vector<CycNum>>& vals) {
    Bicharacter w;
    w.group = g;
    int n = g.size();
    w.table.assign((size_t)n * n, CycNum::one(order));
    int k = (int)g.invariants.size();
    for (int a = 0; a < n; ++a) {
        auto ea = g.exps_of(a);
        for (int b = 0; b < n; ++b) {
            auto eb = g.exps_of(b);
            CycNum v = CycNum::one(order);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    if (ea[i] && eb[j])
                        v *= vals[i][j].pow((long)ea[i] * eb[j]);
            w.table[(size_t)a * n + b] = v;
        }
    }
    return w;
}

} // namespace

TEST_CASE("unit tensor: fails on K8, passes on the flat instance") {
    HopfAlgebra k8 = build_hopf(build_k8());
    RMatrix one = RMatrix::identity(k8);
    VerifyReport rep = verify_quasitriangular(k8, one);
    CHECK_FALSE(rep.ok);
    bool at_x = false;
    for (const auto& i : rep.issues)
        if (i.equation == "Deltaop(h)R = R Delta(h)" && i.witness.find("*x") != std::string::npos)
            at_x = true;
    CHECK(at_x);

    HopfAlgebra flat = build_hopf(build_flat_trivial());
    CHECK(verify_quasitriangular(flat, RMatrix::identity(flat)).ok);
}

TEST_CASE("the K8 four-block structure at alpha = zeta_8, beta = zeta_8^7") {
    HopfAlgebra h = build_hopf(build_k8());
    CycNum alpha = CycNum::root(h.order, h.order / 8);
    CycNum beta = alpha.inv();
    RMatrix r = build_nontrivial(h, alpha, beta, EtaVariant::Minus);
    CHECK(verify_quasitriangular(h, r).ok);
    CHECK(classify_form(r) == FormClass::NonTrivial);

    VerifyReport blocks = verify_block_criteria(h, r);
    CHECK(blocks.ok);
}

TEST_CASE("constraint violations are rejected") {
    HopfAlgebra h = build_hopf(build_k8());
    CycNum one = CycNum::one(h.order);
    // beta^2/alpha^2 = 1 but tau(b,b)/tau(b,a)^2 = -1
    CHECK_THROWS_AS(build_nontrivial(h, one, one, EtaVariant::Minus), ParameterConstraintViolated);
    CHECK_THROWS_AS(build_nontrivial(h, one, one, EtaVariant::Plus), VariantMismatch);

    HopfAlgebra flat = build_hopf(build_flat_trivial());
    CHECK_NOTHROW(build_nontrivial(flat, CycNum::one(flat.order), CycNum::one(flat.order), EtaVariant::Plus));
}

TEST_CASE("mutating one w4 entry breaks the block criteria") {
    HopfAlgebra h = build_hopf(build_k8());
    CycNum alpha = CycNum::root(h.order, h.order / 8);
    RMatrix r = build_nontrivial(h, alpha, alpha.inv(), EtaVariant::Minus);
    int a = h.data.group.generator(0);
    r.blk(4, a, a) = -r.blk(4, a, a);
    VerifyReport rep = verify_block_criteria(h, r);
    CHECK_FALSE(rep.ok);
    bool lr_broken = false;
    for (const auto& i : rep.issues)
        if (i.equation == "l multiplicative" || i.equation == "r anti-multiplicative") lr_broken = true;
    CHECK(lr_broken);
}

TEST_CASE("the two verifiers agree on random block perturbations") {
    HopfAlgebra h = build_hopf(build_k8());
    std::vector<RMatrix> rs = enumerate_nontrivial(h);
    REQUIRE(!rs.empty());
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> block(1, 4), idx(0, h.gsize - 1), rot(1, h.order - 1);
    int checked = 0;
    while (checked < 20) {
        RMatrix r = rs[rng() % rs.size()];
        int which = block(rng), g = idx(rng), k = idx(rng);
        if (r.blk(which, g, k).is_zero()) continue;
        r.blk(which, g, k) *= CycNum::root(h.order, rot(rng));
        VerifyReport full = verify_quasitriangular(h, r, Exec::Serial);
        VerifyReport blk = verify_block_criteria(h, r);
        CHECK(full.ok == blk.ok);
        ++checked;
    }
    // and they agree on the valid ones
    for (const auto& r : rs)
        CHECK(verify_block_criteria(h, r).ok);
}

TEST_CASE("classification of forms") {
    HopfAlgebra h = build_hopf(build_k8());
    std::vector<RMatrix> triv = enumerate_trivial(h);
    for (const auto& r : triv)
        CHECK(classify_form(r) == FormClass::Trivial);

    std::vector<RMatrix> nt = enumerate_nontrivial(h);
    for (const auto& r : nt)
        CHECK(classify_form(r) == FormClass::NonTrivial);

    RMatrix bad = triv.front();
    STPartition p = st_partition(h.data);
    bad.blk(2, p.moved.front(), p.fixed.front()) = CycNum::one(h.order);
    CHECK(classify_form(bad) == FormClass::Neither);
}

TEST_CASE("group-like candidates on K8") {
    HopfAlgebra h = build_hopf(build_k8());
    const AbelianGroup& G = h.data.group;
    int M = h.order;

    // w(a^i b^j, a^k b^l) = (-1)^(j(k+l)) is the (gamma,delta) = (1,1) member
    // after the generator change into this presentation
    CycNum one = CycNum::one(M), minus = CycNum::integer(M, -1);
    Bicharacter w = from_generator_values(G, M, {{one, one}, {minus, minus}});
    TrivialOutcome out = construct_trivial(h, w);
    CHECK(out.accepted);

    Bicharacter triv = from_generator_values(G, M, {{one, one}, {one, one}});
    TrivialOutcome rej = construct_trivial(h, triv);
    CHECK_FALSE(rej.accepted);
    // the scan reports the first violating pair in element order, (b,a);
    // the condition genuinely fails there because eta(b,a) = -1
    int a = G.generator(0), b = G.generator(1);
    auto [vg, vh] = rej.violation;
    CHECK(((vg == a && vh == b) || (vg == b && vh == a)));
    CHECK(h.data.tu(vg, vh) != h.data.tu(vh, vg));
}

TEST_CASE("group-like candidate on the odd instance") {
    HopfAlgebra h = build_hopf(build_a2n2t(3));
    const AbelianGroup& G = h.data.group;
    int M = h.order;
    CycNum t = h.data.tu(G.generator(1), G.generator(0)); // tau(b,a) = primitive 3rd root
    REQUIRE(is_primitive_root(t, 3));
    CycNum one = CycNum::one(M);
    // w(a,b) = t^2 with 3 | (2*2 - 1), alpha = beta = 1
    Bicharacter w = from_generator_values(G, M, {{one, t.pow(2)}, {t, one}});
    TrivialOutcome out = construct_trivial(h, w);
    CHECK(out.accepted);
}

TEST_CASE("group-like counts") {
    HopfAlgebra k8 = build_hopf(build_k8());
    CHECK(enumerate_trivial(k8).size() == 4);
    HopfAlgebra h18 = build_hopf(build_h2n2(3));
    CHECK(enumerate_trivial(h18).size() == 9);
    HopfAlgebra h16 = build_hopf(build_k8n_zeta(2));
    CHECK(enumerate_trivial(h16).size() == 8);
}

TEST_CASE("four-block counts and parameters on K8") {
    HopfAlgebra h = build_hopf(build_k8());
    std::vector<RMatrix> rs = enumerate_nontrivial(h);
    CHECK(rs.size() == 4);
    const AbelianGroup& G = h.data.group;
    int a = G.generator(0), b = G.generator(1);
    for (const auto& r : rs) {
        CycNum alpha = r.blk(4, a, a);
        CycNum beta = r.blk(4, a, G.mul(a, b));
        CHECK(alpha.pow(4) == CycNum::integer(h.order, -1));
        CHECK((alpha * beta).is_one());
    }
}

TEST_CASE("four-block count on K(16, zeta_4)") {
    HopfAlgebra h = build_hopf(build_k8n_zeta(2));
    CHECK(enumerate_nontrivial(h).size() == 8);
}

TEST_CASE("full enumeration per family") {
    HopfAlgebra hk8 = build_hopf(build_k8());
    CHECK(enumerate_all(hk8).size() == 8);

    HopfAlgebra hh = build_hopf(build_h2n2(3));
    std::vector<RMatrix> h18 = enumerate_all(hh);
    CHECK(h18.size() == 9);
    for (const auto& r : h18)
        CHECK(classify_form(r) == FormClass::Trivial);

    HopfAlgebra ha = build_hopf(build_a2n2t(3));
    std::vector<RMatrix> a18 = enumerate_all(ha);
    CHECK(a18.size() == 9);
    for (const auto& r : a18)
        CHECK(classify_form(r) == FormClass::Trivial);
}

TEST_CASE("l/r symmetries of the four-block family") {
    for (int n = 1; n <= 2; ++n) {
        HopfAlgebra h = build_hopf(n == 1 ? build_k8() : build_k8n_zeta(n));
        for (const auto& r : enumerate_nontrivial(h))
            CHECK(lr_symmetry_issues(h, r).empty());
    }
}

TEST_CASE("minimality on K8") {
    HopfAlgebra h = build_hopf(build_k8());
    for (const auto& r : enumerate_trivial(h)) {
        MinimalityReport rep = minimality(h, r);
        CHECK(rep.verdict == Verdict::NotMinimal);
        CHECK(rep.coherent);
    }
    for (const auto& r : enumerate_nontrivial(h)) {
        MinimalityReport rep = minimality(h, r);
        CHECK(rep.verdict == Verdict::Minimal);
        CHECK(rep.span_dim == 8);
        REQUIRE(rep.block_ranks.has_value());
        for (int k = 0; k < 4; ++k)
            CHECK((*rep.block_ranks)[k] == 2);
        REQUIRE(rep.gamma_primitive.has_value());
        CHECK(*rep.gamma_primitive);
        CHECK(rep.coherent);
    }
}

TEST_CASE("no minimal structure on K(16, zeta_4)") {
    HopfAlgebra h = build_hopf(build_k8n_zeta(2));
    for (const auto& r : enumerate_all(h)) {
        MinimalityReport rep = minimality(h, r);
        CHECK(rep.verdict == Verdict::NotMinimal);
        CHECK(rep.coherent);
    }
    MinimalityReport crit = minimality_criterion(h);
    CHECK(crit.verdict == Verdict::NotMinimal);
    CHECK(crit.omega_witnesses.empty());
}

TEST_CASE("criterion on K8: omega = 1") {
    HopfAlgebra h = build_hopf(build_k8());
    MinimalityReport crit = minimality_criterion(h);
    CHECK(crit.verdict == Verdict::Minimal);
    REQUIRE(crit.omega_witnesses.size() == 1);
    CHECK(crit.omega_witnesses.front().is_one());
    CHECK(crit.minimal_set.size() == 4);
    // the explicit minimal family coincides with the full four-block family
    std::vector<RMatrix> nt = enumerate_nontrivial(h);
    REQUIRE(crit.minimal_set.size() == nt.size());
    for (size_t i = 0; i < nt.size(); ++i)
        CHECK(RMatrix::compare(crit.minimal_set[i], nt[i]) == 0);
}

TEST_CASE("eta = +1 instances have no minimal structure") {
    HopfAlgebra flat = build_hopf(build_flat_trivial());
    MinimalityReport crit = minimality_criterion(flat);
    CHECK(crit.verdict == Verdict::NotMinimal);
    for (const auto& r : enumerate_all(flat)) {
        MinimalityReport rep = minimality(flat, r);
        CHECK(rep.verdict == Verdict::NotMinimal);
        CHECK(rep.coherent);
    }
}

TEST_CASE("canonical ordering is deterministic and deduplicates") {
    HopfAlgebra h = build_hopf(build_k8());
    std::vector<RMatrix> a = enumerate_all(h);
    std::vector<RMatrix> b = enumerate_all(h);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i)
        CHECK(RMatrix::compare(a[i], b[i]) == 0);
    std::vector<RMatrix> doubled = a;
    doubled.insert(doubled.end(), a.begin(), a.end());
    canonical_sort(doubled);
    CHECK(doubled.size() == a.size());
}
