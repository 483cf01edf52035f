#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hqt/catalog.hpp"
#include "hqt/errors.hpp"
#include "hqt/group.hpp"

using namespace hqt;

namespace {

ExtensionData flat_data(std::vector<int> invariants, std::vector<std::vector<int>> images, int order) {
    ExtensionData d;
    d.group.invariants = std::move(invariants);
    d.action.generator_images = std::move(images);
    d.action.compile(d.group);
    int n = d.group.size();
    d.sigma.assign(n, CycNum::one(order));
    d.tau.assign((size_t)n * n, CycNum::one(order));
    d.ambient_order = order;
    return d;
}

} // namespace

TEST_CASE("group indexing round trip") {
    AbelianGroup g{{4, 2}};
    CHECK(g.size() == 8);
    for (int i = 0; i < g.size(); ++i)
        CHECK(g.index_of(g.exps_of(i)) == i);
    CHECK(g.mul(g.generator(0), g.generator(1)) == g.index_of({1, 1}));
    CHECK(g.pow(g.generator(0), 5) == g.generator(0));
    CHECK(g.element_order(g.generator(0)) == 4);
    CHECK(g.inv(g.index_of({3, 1})) == g.index_of({1, 1}));
}

TEST_CASE("action must be an order-2 automorphism") {
    AbelianGroup g{{4, 2}};
    Action ok;
    ok.generator_images = {{1, 1}, {0, 1}}; // a -> ab, b -> b
    CHECK_NOTHROW(ok.compile(g));

    Action identity;
    identity.generator_images = {{1, 0}, {0, 1}};
    CHECK_THROWS_AS(identity.compile(g), InvalidData);

    Action order4;
    order4.generator_images = {{0, 1}, {1, 0}}; // a -> b is not even well-defined on Z4 x Z2
    CHECK_THROWS_AS(order4.compile(g), InvalidData);
}

TEST_CASE("catalog K8 data validates") {
    ExtensionData d = build_k8();
    CHECK(d.group.size() == 4);
    CHECK(d.ambient_order == 32);
    ValidationReport rep = validate_extension(d);
    CHECK(rep.ok);
    CHECK(k8n_shape(d) == 1);
}

TEST_CASE("catalog K(16, zeta_4) validates") {
    ExtensionData d = build_k8n_zeta(2);
    CHECK(d.group.size() == 8);
    ValidationReport rep = validate_extension(d);
    CHECK(rep.ok);
    CHECK(k8n_shape(d) == 2);
}

TEST_CASE("flipping sigma(b) breaks compatibility at (a,b)") {
    ExtensionData d = build_k8();
    int b = d.group.generator(1);
    d.sigma[b] = -d.sigma[b]; // now +1
    ValidationReport rep = validate_extension(d);
    CHECK_FALSE(rep.ok);
    // at (b,b) both sides stay +1 because sigma(b) enters squared; the first
    // broken pair involves a, e.g. (a,b)
    bool found = false;
    for (const auto& issue : rep.issues)
        if (issue.rule == "compatibility" && issue.witness == "(a,b)") found = true;
    CHECK(found);
    for (const auto& issue : rep.issues)
        CHECK(issue.witness != "(b,b)");
}

TEST_CASE("eta on the catalog instances") {
    ExtensionData k8 = build_k8();
    Bicharacter e = eta(k8);
    int a = k8.group.generator(0), b = k8.group.generator(1);
    CHECK(e.at(a, b) == CycNum::integer(k8.ambient_order, -1));

    // sigma = tau = 1 on Z4 x Z2 with a -> ab: eta is identically 1
    ExtensionData flat = flat_data({4, 2}, {{1, 1}, {0, 1}}, 8);
    Bicharacter ef = eta(flat);
    for (int g = 0; g < flat.group.size(); ++g)
        for (int h = 0; h < flat.group.size(); ++h)
            CHECK(ef.at(g, h).is_one());

    // sigma/tau of the Z3 x Z3 swap-action instance: eta(a,b) = tau(a,b)/tau(b,a) = w^-1
    ExtensionData h18 = build_h2n2(3);
    Bicharacter eh = eta(h18);
    int a3 = h18.group.generator(0), b3 = h18.group.generator(1);
    CycNum w = h18.tu(b3, a3); // tau(b,a) = w
    CHECK(eh.at(a3, b3) == w.inv());
    CHECK(is_primitive_root(eh.at(a3, b3), 3));
}

TEST_CASE("eta is antisymmetric") {
    for (const ExtensionData& d : {build_k8(), build_k8n_zeta(2), build_a2n2t(3)}) {
        Bicharacter e = eta(d);
        for (int g = 0; g < d.group.size(); ++g)
            for (int h = 0; h < d.group.size(); ++h)
                CHECK((e.at(g, h) * e.at(h, g)).is_one());
    }
}

TEST_CASE("fixed/moved partition") {
    ExtensionData k8 = build_k8();
    STPartition p = st_partition(k8);
    const AbelianGroup& G = k8.group;
    CHECK(p.fixed == std::vector<int>{G.identity(), G.generator(1)});
    CHECK(p.moved == std::vector<int>{G.generator(0), G.mul(G.generator(0), G.generator(1))});

    // K(8n) shape: S = {a^2i b^j}, T = {a^(2i+1) b^j}
    ExtensionData z = build_k8n_zeta(3);
    STPartition pz = st_partition(z);
    CHECK(pz.fixed.size() == pz.moved.size());
    for (int s : pz.fixed)
        CHECK(z.group.exps_of(s)[0] % 2 == 0);
    for (int t : pz.moved)
        CHECK(z.group.exps_of(t)[0] % 2 == 1);
}

TEST_CASE("partition multiplicativity when the obstruction test passes") {
    ExtensionData d = build_k8n_zeta(2);
    STPartition p = st_partition(d);
    const AbelianGroup& G = d.group;
    CHECK(p.fixed.size() == p.moved.size());
    auto is_fixed = [&](int g) {
        return std::find(p.fixed.begin(), p.fixed.end(), g) != p.fixed.end();
    };
    for (int s : p.fixed)
        for (int t : p.fixed)
            CHECK(is_fixed(G.mul(s, t)));
    for (int s : p.fixed)
        for (int t : p.moved)
            CHECK_FALSE(is_fixed(G.mul(s, t)));
    for (int s : p.moved)
        for (int t : p.moved)
            CHECK(is_fixed(G.mul(s, t)));
}

TEST_CASE("obstruction outcomes") {
    ObstructionReport a = obstruction_check(build_a2n2t(3));
    CHECK_FALSE(a.possible);
    CHECK(a.failures.front().first == ObstructionTag::OddGroupOrder);

    // |G| = 9 is odd here as well, but the quotient mismatch is also
    // detected and reported
    ObstructionReport h = obstruction_check(build_h2n2(3));
    CHECK_FALSE(h.possible);
    CHECK(h.has(ObstructionTag::NoCommonShift));
    CHECK(h.has(ObstructionTag::OddGroupOrder));

    ObstructionReport k = obstruction_check(build_k8());
    CHECK(k.possible);
    CHECK(k.reason == "b = b");
}

TEST_CASE("bicharacter counts") {
    CHECK(enumerate_bicharacters(AbelianGroup{{2, 2}}, 8).size() == 16);
    CHECK(enumerate_bicharacters(AbelianGroup{{3, 3}}, 12).size() == 81);
    // gcd table 4,2,2,2 over the ordered generator pairs
    CHECK(enumerate_bicharacters(AbelianGroup{{4, 2}}, 8).size() == 32);
}

TEST_CASE("bicharacters satisfy the pairing laws") {
    auto all = enumerate_bicharacters(AbelianGroup{{4, 2}}, 8);
    AbelianGroup g{{4, 2}};
    for (size_t i = 0; i < all.size(); i += 7) {
        const Bicharacter& w = all[i];
        for (int a = 0; a < g.size(); ++a)
            for (int b = 0; b < g.size(); ++b)
                for (int c = 0; c < g.size(); ++c) {
                    CHECK(w.at(g.mul(a, b), c) == w.at(a, c) * w.at(b, c));
                    CHECK(w.at(a, g.mul(b, c)) == w.at(a, b) * w.at(a, c));
                }
    }
}

TEST_CASE("h2n2 with n=2 lands in the Z_2n x Z_2 shape and equals the K8 tables") {
    ExtensionData d = build_h2n2(2);
    CHECK(d.group.invariants == std::vector<int>{2, 2});
    CHECK(k8n_shape(d) == 1);
    ExtensionData k8 = build_k8();
    REQUIRE(d.ambient_order == k8.ambient_order);
    CHECK(d.sigma == k8.sigma);
    CHECK(d.tau == k8.tau);
}

TEST_CASE("sigma(b) inverse equals tau(b,b) on the Z_2n x Z_2 catalog") {
    for (int n = 1; n <= 4; ++n) {
        ExtensionData d = n == 1 ? build_k8() : build_k8n_zeta(n);
        int b = d.group.generator(1);
        CHECK(d.sig(b).inv() == d.tu(b, b));
    }
}

TEST_CASE("prefix-product identities on the Z_2n x Z_2 catalog") {
    // the identities below tie the partial cocycle products, their
    // sigma-normalizations and the moved-pair ratio h together
    for (int n = 1; n <= 4; ++n) {
        ExtensionData d = n == 1 ? build_k8() : build_k8n_zeta(n);
        const AbelianGroup& G = d.group;
        int a = G.generator(0), b = G.generator(1);
        int M = d.ambient_order;
        auto act = [&](int g) { return d.action.apply(g); };

        std::vector<int> apow(2 * n + 1);
        apow[0] = G.identity();
        for (int i = 1; i <= 2 * n; ++i)
            apow[i] = G.mul(apow[i - 1], a);
        std::vector<CycNum> P(2 * n + 1, CycNum::one(M));
        for (int i = 2; i <= 2 * n; ++i)
            P[i] = P[i - 1] * d.tu(a, apow[i - 1]);

        auto hr = [&](int t1, int t2) { return d.tu(t1, t2) / d.tu(act(t2), act(t1)); };

        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                // P_2j^2i / P_2i^2j = sigma(a^2j)^i / sigma(a^2i)^j
                CHECK(P[2 * j].pow(2 * i) * d.sig(apow[2 * i]).pow(j) ==
                      P[2 * i].pow(2 * j) * d.sig(apow[2 * j]).pow(i));
                // P_(2i+1)^2j sigma(a)^j sigma(a^2j)^i
                //   = P_2j^2i sigma(a^(2i+1))^j (tau(b,a)/tau(b,a^(2i+1)))^j
                CHECK(P[2 * i + 1].pow(2 * j) * d.sig(a).pow(j) * d.sig(apow[2 * j]).pow(i) ==
                      P[2 * j].pow(2 * i) * d.sig(apow[2 * i + 1]).pow(j) *
                          (d.tu(b, a) / d.tu(b, apow[2 * i + 1])).pow(j));
                // the symmetric variant with both odd rows
                CHECK(P[2 * i + 1].pow(2 * j) * (d.sig(apow[2 * j + 1]) / d.sig(a)).pow(i) *
                          (d.tu(b, a) / d.tu(b, apow[2 * j + 1])).pow(i) ==
                      P[2 * j + 1].pow(2 * i) * (d.sig(apow[2 * i + 1]) / d.sig(a)).pow(j) *
                          (d.tu(b, a) / d.tu(b, apow[2 * i + 1])).pow(j));
            }

        STPartition p = st_partition(d);
        for (int t1 : p.moved)
            for (int t2 : p.moved) {
                CHECK((hr(t1, t2) * hr(act(t1), act(t2))).is_one());
                CHECK(hr(t1, t2) == hr(t2, t1));
            }
        // eta(a,b) = -1 branch: h(a, a^(2i+1) b) = tau(b,a)/tau(b,a^(2i+1))
        CycNum etab = d.tu(a, b) / d.tu(b, a);
        if (etab == CycNum::integer(M, -1)) {
            for (int i = 0; i < n; ++i) {
                int t = G.mul(apow[2 * i + 1], b);
                CHECK(hr(a, t) == d.tu(b, a) / d.tu(b, apow[2 * i + 1]));
            }
        }
    }
}

TEST_CASE("a2n2t requires odd n") {
    CHECK_THROWS_AS(build_a2n2t(4), InvalidSpec);
    CHECK_NOTHROW(build_a2n2t(3));
}
