#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hqt/catalog.hpp"
#include "hqt/errors.hpp"
#include "hqt/hopf.hpp"

using namespace hqt;

namespace {

TensorElement delta_x(const HopfAlgebra& h) {
    TensorElement t = TensorElement::zero(h);
    for (int g = 0; g < h.gsize; ++g)
        for (int k = 0; k < h.gsize; ++k)
            t.at(h.bidx(g, 1), h.bidx(k, 1)) = h.data.tu(g, k);
    return t;
}

TensorElement deltaop_x(const HopfAlgebra& h) {
    TensorElement t = TensorElement::zero(h);
    for (int g = 0; g < h.gsize; ++g)
        for (int k = 0; k < h.gsize; ++k)
            t.at(h.bidx(g, 1), h.bidx(k, 1)) = h.data.tu(k, g);
    return t;
}

} // namespace

namespace {

std::vector<CycNum> x_vector(const HopfAlgebra& h) {
    std::vector<CycNum> x(h.dim, CycNum::zero(h.order));
    for (int g = 0; g < h.gsize; ++g)
        x[h.bidx(g, 1)] = CycNum::one(h.order);
    return x;
}

} // namespace

TEST_CASE("building the 8-dimensional instance") {
    HopfAlgebra h = build_hopf(build_k8());
    CHECK(h.dim == 8);
    // x^2 = sum sigma(g) e_g with sigma(b) = -1 and sigma = 1 elsewhere
    int b = h.data.group.generator(1);
    std::vector<CycNum> x2 = algebra_mul(h, x_vector(h), x_vector(h));
    for (int g = 0; g < h.gsize; ++g) {
        CHECK(x2[h.bidx(g, 1)].is_zero());
        if (g == b)
            CHECK(x2[h.bidx(g, 0)] == CycNum::integer(h.order, -1));
        else
            CHECK(x2[h.bidx(g, 0)].is_one());
    }
    // x e_g = e_{g<|x} x on the basis
    for (int g = 0; g < h.gsize; ++g)
        for (int k = 0; k < h.gsize; ++k) {
            const auto& m = h.mul(h.bidx(g, 1), h.bidx(k, 0));
            if (g == h.data.action.apply(k))
                CHECK(m.idx == h.bidx(g, 1));
            else
                CHECK(m.idx == -1);
        }
}

TEST_CASE("trivial sigma/tau gives a group-like x") {
    HopfAlgebra h = build_hopf(build_flat_trivial());
    CHECK(h.dim == 8);
    // x^2 = 1
    std::vector<CycNum> x2 = algebra_mul(h, x_vector(h), x_vector(h));
    for (int g = 0; g < h.gsize; ++g) {
        CHECK(x2[h.bidx(g, 0)].is_one());
        CHECK(x2[h.bidx(g, 1)].is_zero());
    }
    // Delta(x) = x (x) x: all tau coefficients are one
    TensorElement dx = delta_x(h);
    for (int g = 0; g < h.gsize; ++g)
        for (int k = 0; k < h.gsize; ++k)
            CHECK(dx.at(h.bidx(g, 1), h.bidx(k, 1)).is_one());
}

TEST_CASE("K(16, zeta_4) is 16-dimensional and passes the axiom suite") {
    HopfAlgebra h = build_hopf(build_k8n_zeta(2));
    CHECK(h.dim == 16);
    AxiomReport rep = verify_hopf_axioms(h);
    CHECK(rep.ok);
}

TEST_CASE("axiom suite passes on the catalog instances") {
    for (const ExtensionData& d :
         {build_k8(), build_flat_trivial(), build_h2n2(2), build_h2n2(3), build_a2n2t(3)}) {
        HopfAlgebra h = build_hopf(d);
        AxiomReport rep = verify_hopf_axioms(h);
        if (!rep.ok) {
            for (const auto& i : rep.issues)
                MESSAGE(i.axiom, " at ", i.witness);
        }
        CHECK(rep.ok);
    }
}

TEST_CASE("corrupting tau(b,b) breaks the coalgebra side with a witness") {
    ExtensionData d = build_k8();
    int b = d.group.generator(1);
    d.tau[(size_t)b * d.group.size() + b] = -d.tu(b, b);
    HopfAlgebra h = build_hopf(d);
    AxiomReport rep = verify_hopf_axioms(h);
    CHECK_FALSE(rep.ok);
    bool coalgebra_side = false;
    for (const auto& i : rep.issues) {
        if (i.axiom == "coassociativity" || i.axiom == "comultiplicative" ||
            i.axiom == "antipode-left" || i.axiom == "antipode-right") {
            coalgebra_side = true;
            CHECK_FALSE(i.witness.empty());
        }
    }
    CHECK(coalgebra_side);
}

TEST_CASE("counit values") {
    HopfAlgebra h = build_hopf(build_k8());
    for (int g = 0; g < h.gsize; ++g) {
        bool is_id = g == h.data.group.identity();
        CHECK(h.counit[h.bidx(g, 0)].is_zero() == !is_id);
        CHECK(h.counit[h.bidx(g, 1)].is_zero() == !is_id); // eps(e_g x) = delta_{g,1}
    }
}

TEST_CASE("x is invertible, verified by solving") {
    for (const ExtensionData& d : {build_k8(), build_k8n_zeta(2), build_a2n2t(3)}) {
        HopfAlgebra h = build_hopf(d);
        std::vector<CycNum> y = solve_x_inverse(h);
        std::vector<CycNum> x(h.dim, CycNum::zero(h.order));
        for (int g = 0; g < h.gsize; ++g)
            x[h.bidx(g, 1)] = CycNum::one(h.order);
        std::vector<CycNum> one(h.dim, CycNum::zero(h.order));
        for (int g = 0; g < h.gsize; ++g)
            one[h.bidx(g, 0)] = CycNum::one(h.order);
        CHECK(algebra_mul(h, x, y) == one);
        CHECK(algebra_mul(h, y, x) == one);
    }
}

TEST_CASE("tensor unit is idempotent and lifts to the cube") {
    HopfAlgebra h = build_hopf(build_k8());
    TensorElement one = TensorElement::unit(h);
    CHECK(tensor_mul(one, one) == one);

    TripleTensor r13 = lift13(one), r23 = lift23(one);
    TripleTensor prod = triple_mul(r13, r23);
    // 1 (x) 1 (x) 1
    TripleTensor cube = TripleTensor::zero(h);
    for (int g = 0; g < h.gsize; ++g)
        for (int k = 0; k < h.gsize; ++k)
            for (int l = 0; l < h.gsize; ++l)
                cube.c[((size_t)h.bidx(g, 0) * h.dim + h.bidx(k, 0)) * h.dim + h.bidx(l, 0)] =
                    CycNum::one(h.order);
    CHECK(prod == cube);
}

TEST_CASE("the unit tensor fails to intertwine the K8 coproduct at x") {
    HopfAlgebra h = build_hopf(build_k8());
    TensorElement one = TensorElement::unit(h);
    CHECK_FALSE(tensor_mul(deltaop_x(h), one) == tensor_mul(one, delta_x(h)));

    // while on the commutative-cocommutative flat instance it intertwines
    HopfAlgebra hf = build_hopf(build_flat_trivial());
    TensorElement onef = TensorElement::unit(hf);
    CHECK(tensor_mul(deltaop_x(hf), onef) == tensor_mul(onef, delta_x(hf)));
}

TEST_CASE("dual products reproduce the twisted group algebra") {
    HopfAlgebra h = build_hopf(build_k8());
    DualProductReport rep = dual_products(h);
    CHECK(rep.ok);

    const AbelianGroup& G = h.data.group;
    int a = G.generator(0), b = G.generator(1);
    // X_a X_a = tau(a,a) X_1 = X_1
    const auto& m = h.dmul(h.bidx(a, 1), h.bidx(a, 1));
    CHECK(m.idx == h.bidx(G.identity(), 1));
    CHECK(m.coeff.is_one());
    // X_b X_a = tau(b,a) X_ab = -X_ab
    const auto& m2 = h.dmul(h.bidx(b, 1), h.bidx(a, 1));
    CHECK(m2.idx == h.bidx(G.mul(a, b), 1));
    CHECK(m2.coeff == CycNum::integer(h.order, -1));
    // E_1 is the identity on the E-span
    for (int g = 0; g < h.gsize; ++g) {
        const auto& m3 = h.dmul(h.bidx(G.identity(), 0), h.bidx(g, 0));
        CHECK(m3.idx == h.bidx(g, 0));
        CHECK(m3.coeff.is_one());
    }
}

TEST_CASE("dual products hold on every catalog instance") {
    for (const ExtensionData& d :
         {build_k8(), build_flat_trivial(), build_k8n_zeta(2), build_h2n2(3), build_a2n2t(3)}) {
        HopfAlgebra h = build_hopf(d);
        CHECK(dual_products(h).ok);
    }
}

TEST_CASE("dual presentation relations") {
    HopfAlgebra k8 = build_hopf(build_k8());
    PresentationReport rep = dual_presentation_check(k8);
    CHECK(rep.ok);
    CHECK(rep.span_rank == 8);
    {
        // X_a^2 = X_1 and X_b^2 = -X_1, read off the structure constants
        const AbelianGroup& G = k8.data.group;
        int a = G.generator(0), b = G.generator(1);
        const auto& xa2 = k8.dmul(k8.bidx(a, 1), k8.bidx(a, 1));
        CHECK(xa2.idx == k8.bidx(G.identity(), 1));
        CHECK(xa2.coeff.is_one());
        const auto& xb2 = k8.dmul(k8.bidx(b, 1), k8.bidx(b, 1));
        CHECK(xb2.idx == k8.bidx(G.identity(), 1));
        CHECK(xb2.coeff == CycNum::integer(k8.order, -1));
    }

    HopfAlgebra h16 = build_hopf(build_k8n_zeta(2));
    CHECK(dual_presentation_check(h16).ok);

    HopfAlgebra h18 = build_hopf(build_h2n2(3));
    CHECK_THROWS_AS(dual_presentation_check(h18), NotK8nShape);
}
