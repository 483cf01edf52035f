#include "hqt/catalog.hpp"

#include <numeric>

#include "hqt/errors.hpp"
#include "hqt/serialize.hpp"

namespace hqt {

Family parse_family(const std::string& s) {
    if (s == "k8") return Family::K8;
    if (s == "h2n2") return Family::H2n2;
    if (s == "a2n2t") return Family::A2n2t;
    if (s == "k8n_zeta") return Family::K8nZeta;
    if (s == "k8n_custom") return Family::K8nCustom;
    if (s == "flat_custom") return Family::FlatCustom;
    throw InvalidSpec("unknown family: " + s);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::K8: return "k8";
        case Family::H2n2: return "h2n2";
        case Family::A2n2t: return "a2n2t";
        case Family::K8nZeta: return "k8n_zeta";
        case Family::K8nCustom: return "k8n_custom";
        case Family::FlatCustom: return "flat_custom";
    }
    return "?";
}

int ambient_order_for(const AbelianGroup& g, const std::vector<int>& value_orders) {
    long l = lcm_long(2L * g.size(), 8);
    for (int o : value_orders)
        l = lcm_long(l, o);
    return (int)(4 * l);
}

namespace {

// Root-of-unity table entry zeta_L^e, used while assembling a family before
// the ambient order is known.
struct RootVal {
    long e = 0;
    long L = 1;
    int mul_order() const {
        long r = ((e % L) + L) % L;
        return (int)(L / std::gcd(r == 0 ? L : r, L));
    }
};

struct SymbolicData {
    AbelianGroup group;
    Action action;
    std::vector<RootVal> sigma;
    std::vector<RootVal> tau;
};

ExtensionData materialize(const SymbolicData& s) {
    std::vector<int> orders;
    for (const auto& v : s.sigma)
        orders.push_back(v.mul_order());
    for (const auto& v : s.tau)
        orders.push_back(v.mul_order());
    int M = ambient_order_for(s.group, orders);

    ExtensionData d;
    d.group = s.group;
    d.action = s.action;
    d.action.compile(d.group);
    d.ambient_order = M;
    d.sigma.reserve(s.sigma.size());
    for (const auto& v : s.sigma)
        d.sigma.push_back(CycNum::root(M, v.e * (M / v.L)));
    d.tau.reserve(s.tau.size());
    for (const auto& v : s.tau)
        d.tau.push_back(CycNum::root(M, v.e * (M / v.L)));
    return d;
}

// j-th primitive k-th root exponent: the j-th residue coprime to k
long primitive_exponent(int k, int j) {
    if (k == 1) return 0;
    int seen = 0;
    for (int r = 1; r < k; ++r) {
        if (std::gcd(r, k) != 1) continue;
        if (seen == j) return r;
        ++seen;
    }
    throw InvalidSpec("root index out of range for order " + std::to_string(k));
}

// Rewrites Z_n x Z_n with the swap action into Z_2n' x Z_2 coordinates via
// the generator change a~ = a, b~ = ab (only used for n = 2, where the swap
// becomes a~ <| x = a~ b~).
SymbolicData relabel_swap_to_k8n(const SymbolicData& s) {
    int n = s.group.invariants[0];
    if (n != 2)
        throw InvalidSpec("relabel is only defined for the 8-dimensional case");
    SymbolicData out;
    out.group.invariants = {2, 2};
    out.action.generator_images = {{1, 1}, {0, 1}};
    int N = 4;
    out.sigma.resize(N);
    out.tau.resize((size_t)N * N);
    auto old_index = [&](int i, int j) {
        // a~^i b~^j = a^(i+j) b^j in the original coordinates
        return s.group.index_of({(i + j) % 2, j % 2});
    };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            int t = out.group.index_of({i, j});
            out.sigma[t] = s.sigma[old_index(i, j)];
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    int u = out.group.index_of({k, l});
                    out.tau[(size_t)t * N + u] = s.tau[(size_t)old_index(i, j) * N + old_index(k, l)];
                }
        }
    return out;
}

} // namespace

ExtensionData build_k8() {
    SymbolicData s;
    s.group.invariants = {2, 2};
    s.action.generator_images = {{1, 1}, {0, 1}}; // a -> ab, b -> b
    int N = 4;
    s.sigma.resize(N);
    s.tau.resize((size_t)N * N);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            int g = s.group.index_of({i, j});
            s.sigma[g] = {(long)((i - j) * j), 2};
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    int h = s.group.index_of({k, l});
                    s.tau[(size_t)g * N + h] = {(long)(j * (k - l)), 2};
                }
        }
    return materialize(s);
}

ExtensionData build_k8n_zeta(int n, int root_choice) {
    if (n < 2)
        throw InvalidSpec("this family needs n >= 2");
    SymbolicData s;
    s.group.invariants = {2 * n, 2};
    s.action.generator_images = {{1, 1}, {0, 1}};
    int N = 4 * n;
    long L = 4L * n; // -1 = zeta_L^{2n}, zeta = zeta_L^{2 e0}
    long e0 = primitive_exponent(2 * n, root_choice);
    s.sigma.resize(N);
    s.tau.resize((size_t)N * N);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2; ++j) {
            int g = s.group.index_of({i, j});
            // sigma(a^i b^j) = (-1)^{i(i-1)/2} zeta^i
            long e = (long)n * i * (i - 1) + 2L * e0 * i;
            s.sigma[g] = {e, L};
            for (int k = 0; k < 2 * n; ++k)
                for (int l = 0; l < 2; ++l) {
                    int h = s.group.index_of({k, l});
                    s.tau[(size_t)g * N + h] = {(long)(j * k), 2}; // (-1)^{jk}
                }
        }
    return materialize(s);
}

ExtensionData build_h2n2(int n, int root_choice) {
    if (n < 2)
        throw InvalidSpec("this family needs n >= 2");
    SymbolicData s;
    s.group.invariants = {n, n};
    s.action.generator_images = {{0, 1}, {1, 0}}; // a -> b, b -> a
    int N = n * n;
    long e0 = primitive_exponent(n, root_choice);
    s.sigma.resize(N);
    s.tau.resize((size_t)N * N);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int g = s.group.index_of({i, j});
            s.sigma[g] = {e0 * i * j, (long)n};
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    int h = s.group.index_of({k, l});
                    s.tau[(size_t)g * N + h] = {e0 * j * k, (long)n};
                }
        }
    if (n == 2)
        return materialize(relabel_swap_to_k8n(s));
    return materialize(s);
}

ExtensionData build_a2n2t(int n, int root_choice) {
    if (n < 3 || n % 2 == 0)
        throw InvalidSpec("this family needs an odd n >= 3");
    SymbolicData s;
    s.group.invariants = {n, n};
    s.action.generator_images = {{n - 1, 0}, {0, 1}}; // a -> a^-1, b -> b
    int N = n * n;
    long e0 = primitive_exponent(n, root_choice);
    s.sigma.assign(N, RootVal{0, 1});
    s.tau.resize((size_t)N * N);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int g = s.group.index_of({i, j});
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    int h = s.group.index_of({k, l});
                    s.tau[(size_t)g * N + h] = {e0 * j * k, (long)n};
                }
        }
    return materialize(s);
}

ExtensionData build_flat_trivial() {
    SymbolicData s;
    s.group.invariants = {2, 2};
    s.action.generator_images = {{1, 1}, {0, 1}};
    s.sigma.assign(4, RootVal{0, 1});
    s.tau.assign(16, RootVal{0, 1});
    return materialize(s);
}

ExtensionData build_from_spec(const CatalogSpec& spec) {
    switch (spec.family) {
        case Family::K8:
            return build_k8();
        case Family::H2n2:
            return build_h2n2(spec.n, spec.root_choice);
        case Family::A2n2t:
            return build_a2n2t(spec.n, spec.root_choice);
        case Family::K8nZeta:
            return build_k8n_zeta(spec.n, spec.root_choice);
        case Family::K8nCustom: {
            ExtensionData d = load_extension_data(spec.data_file);
            if (!k8n_shape(d))
                throw NotK8nShape();
            return d;
        }
        case Family::FlatCustom:
            return load_extension_data(spec.data_file);
    }
    throw InvalidSpec("unhandled family");
}

} // namespace hqt
