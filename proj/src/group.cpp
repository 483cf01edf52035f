#include "hqt/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hqt/errors.hpp"

namespace hqt {

int AbelianGroup::size() const {
    int n = 1;
    for (int m : invariants)
        n *= m;
    return n;
}

int AbelianGroup::index_of(const std::vector<int>& exps) const {
    int idx = 0;
    for (size_t i = 0; i < invariants.size(); ++i) {
        int e = exps[i] % invariants[i];
        if (e < 0) e += invariants[i];
        idx = idx * invariants[i] + e;
    }
    return idx;
}

std::vector<int> AbelianGroup::exps_of(int idx) const {
    std::vector<int> e(invariants.size());
    for (int i = (int)invariants.size() - 1; i >= 0; --i) {
        e[i] = idx % invariants[i];
        idx /= invariants[i];
    }
    return e;
}

int AbelianGroup::mul(int a, int b) const {
    std::vector<int> ea = exps_of(a), eb = exps_of(b);
    for (size_t i = 0; i < ea.size(); ++i)
        ea[i] += eb[i];
    return index_of(ea);
}

int AbelianGroup::inv(int a) const {
    std::vector<int> e = exps_of(a);
    for (auto& x : e)
        x = -x;
    return index_of(e);
}

int AbelianGroup::generator(int k) const {
    std::vector<int> e(invariants.size(), 0);
    e[k] = 1;
    return index_of(e);
}

int AbelianGroup::pow(int a, long e) const {
    std::vector<int> ex = exps_of(a);
    std::vector<int> out(ex.size());
    for (size_t i = 0; i < ex.size(); ++i)
        out[i] = (int)(((long)ex[i] * (e % invariants[i])) % invariants[i]);
    return index_of(out);
}

int AbelianGroup::element_order(int a) const {
    int o = 1;
    int cur = a;
    while (cur != identity()) {
        cur = mul(cur, a);
        ++o;
    }
    return o;
}

void Action::compile(const AbelianGroup& g) {
    if (generator_images.size() != g.invariants.size())
        throw InvalidData("action: one image per generator required");
    int n = g.size();
    std::vector<int> img(g.invariants.size());
    for (size_t i = 0; i < generator_images.size(); ++i) {
        img[i] = g.index_of(generator_images[i]);
        // well-defined: image of a generator must have order dividing it
        if (g.pow(img[i], g.invariants[i]) != g.identity())
            throw InvalidData("action: generator image order incompatible");
    }
    table.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        std::vector<int> e = g.exps_of(a);
        int acc = g.identity();
        for (size_t i = 0; i < e.size(); ++i)
            acc = g.mul(acc, g.pow(img[i], e[i]));
        table[a] = acc;
    }
    std::vector<int> seen(n, 0);
    for (int a = 0; a < n; ++a)
        seen[table[a]]++;
    for (int a = 0; a < n; ++a)
        if (seen[a] != 1)
            throw InvalidData("action: not a bijection");
    bool identity_map = true;
    for (int a = 0; a < n; ++a) {
        if (table[table[a]] != a)
            throw InvalidData("action: square is not the identity");
        if (table[a] != a)
            identity_map = false;
    }
    if (identity_map)
        throw InvalidData("action: must have order exactly 2");
}

namespace {

void issue(ValidationReport& rep, const std::string& rule, const std::string& witness) {
    rep.ok = false;
    rep.issues.push_back({rule, witness});
}

} // namespace

std::string element_name(const AbelianGroup& g, int idx) {
    static const char* letters = "abcdefgh";
    std::vector<int> e = g.exps_of(idx);
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        any = true;
        os << letters[i % 8];
        if (e[i] > 1) os << "^" << e[i];
    }
    if (!any) return "1";
    return os.str();
}

ValidationReport validate_extension(const ExtensionData& data) {
    ValidationReport rep;
    const AbelianGroup& G = data.group;
    int n = G.size();
    if ((int)data.sigma.size() != n || (int)data.tau.size() != n * n) {
        issue(rep, "tables", "sigma or tau table has the wrong size");
        return rep;
    }
    for (int g = 0; g < n; ++g)
        if (data.sig(g).is_zero())
            issue(rep, "nonzero", "sigma(" + element_name(G, g) + ") = 0");
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (data.tu(g, h).is_zero())
                issue(rep, "nonzero", "tau(" + element_name(G, g) + "," + element_name(G, h) + ") = 0");
    if (!rep.ok) return rep;

    if (!data.sig(G.identity()).is_one())
        issue(rep, "sigma-unital", "sigma(1) != 1");
    for (int g = 0; g < n; ++g)
        if (data.sig(data.action.apply(g)) != data.sig(g))
            issue(rep, "sigma-invariant", "sigma(g<|x) != sigma(g) at g=" + element_name(G, g));

    for (int g = 0; g < n; ++g) {
        if (!data.tu(g, G.identity()).is_one())
            issue(rep, "tau-unital", "tau(" + element_name(G, g) + ",1) != 1");
        if (!data.tu(G.identity(), g).is_one())
            issue(rep, "tau-unital", "tau(1," + element_name(G, g) + ") != 1");
    }

    for (int g = 0; g < n && rep.issues.size() < 64; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                // tau(g,h) tau(gh,k) = tau(h,k) tau(g,hk)
                CycNum lhs = data.tu(g, h) * data.tu(G.mul(g, h), k);
                CycNum rhs = data.tu(h, k) * data.tu(g, G.mul(h, k));
                if (lhs != rhs) {
                    issue(rep, "tau-cocycle",
                          "(" + element_name(G, g) + "," + element_name(G, h) + "," + element_name(G, k) + ")");
                }
            }

    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            // sigma(gh) sigma(g)^-1 sigma(h)^-1 = tau(g,h) tau(g<|x, h<|x)
            CycNum lhs = data.sig(G.mul(g, h)) / (data.sig(g) * data.sig(h));
            CycNum rhs = data.tu(g, h) * data.tu(data.action.apply(g), data.action.apply(h));
            if (lhs != rhs)
                issue(rep, "compatibility",
                      "(" + element_name(G, g) + "," + element_name(G, h) + ")");
        }
    return rep;
}

STPartition st_partition(const ExtensionData& data) {
    STPartition p;
    int n = data.group.size();
    for (int g = 0; g < n; ++g) {
        if (data.action.apply(g) == g)
            p.fixed.push_back(g);
        else
            p.moved.push_back(g);
    }
    // S is a subgroup and T is its complement; spot-check closure.
    const AbelianGroup& G = data.group;
    for (int a : p.fixed)
        for (int b : p.fixed)
            if (data.action.apply(G.mul(a, b)) != G.mul(a, b))
                throw HqtError("fixed set is not closed under multiplication");
    return p;
}

Bicharacter eta(const ExtensionData& data) {
    const AbelianGroup& G = data.group;
    int n = G.size();
    Bicharacter w;
    w.group = G;
    w.table.resize((size_t)n * n, CycNum::zero(data.ambient_order));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            w.table[(size_t)g * n + h] = data.tu(g, h) / data.tu(h, g);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                if (w.at(G.mul(g, h), k) != w.at(g, k) * w.at(h, k))
                    throw NotABicharacter("eta fails multiplicativity in the first argument");
                if (w.at(g, G.mul(h, k)) != w.at(g, h) * w.at(g, k))
                    throw NotABicharacter("eta fails multiplicativity in the second argument");
            }
    return w;
}

ObstructionReport obstruction_check(const ExtensionData& data) {
    ObstructionReport rep;
    const AbelianGroup& G = data.group;
    if (G.size() % 2 == 1)
        rep.failures.push_back({ObstructionTag::OddGroupOrder,
                                "|G| = " + std::to_string(G.size()) + " is odd"});
    STPartition p = st_partition(data);
    if (p.fixed.size() != p.moved.size())
        rep.failures.push_back({ObstructionTag::UnequalParts,
                                "|S| = " + std::to_string(p.fixed.size()) +
                                    " != |T| = " + std::to_string(p.moved.size())});

    // candidate shift from the first moved element, then verified universally
    int t0 = p.moved.front();
    int b = G.mul(G.inv(t0), data.action.apply(t0));
    bool shift_ok = data.action.apply(b) == b && G.mul(b, b) == G.identity();
    std::string shift_reason;
    for (int t : p.moved) {
        int bt = G.mul(G.inv(t), data.action.apply(t));
        if (bt != b) {
            shift_ok = false;
            shift_reason = element_name(G, t0) + "^-1(" + element_name(G, t0) + "<|x) = " + element_name(G, b) +
                           " != " + element_name(G, t) + "^-1(" + element_name(G, t) + "<|x) = " + element_name(G, bt);
            break;
        }
    }
    if (!shift_ok) {
        if (shift_reason.empty())
            shift_reason = "no b in S with b^2 = 1 and t<|x = tb for all t in T";
        rep.failures.push_back({ObstructionTag::NoCommonShift, shift_reason});
    }

    if (rep.failures.empty()) {
        rep.possible = true;
        rep.reason = "b = " + element_name(G, b);
    } else {
        rep.reason = rep.failures.front().second;
    }
    return rep;
}

std::vector<Bicharacter> enumerate_bicharacters(const AbelianGroup& g, int order) {
    int k = (int)g.invariants.size();
    int n = g.size();
    // one value per ordered generator pair, of order dividing gcd(n_i, n_j)
    std::vector<std::vector<CycNum>> choices;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            choices.push_back(roots_of_unity(order, std::gcd(g.invariants[i], g.invariants[j])));

    std::vector<Bicharacter> out;
    std::vector<size_t> pick(choices.size(), 0);
    while (true) {
        Bicharacter w;
        w.group = g;
        w.table.resize((size_t)n * n);
        for (int a = 0; a < n; ++a) {
            std::vector<int> ea = g.exps_of(a);
            for (int b = 0; b < n; ++b) {
                std::vector<int> eb = g.exps_of(b);
                CycNum v = CycNum::one(order);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) {
                        long e = (long)ea[i] * eb[j];
                        if (e)
                            v *= choices[(size_t)i * k + j][pick[(size_t)i * k + j]].pow(e);
                    }
                w.table[(size_t)a * n + b] = v;
            }
        }
        out.push_back(std::move(w));
        int pos = (int)choices.size() - 1;
        while (pos >= 0) {
            if (++pick[pos] < choices[pos].size()) break;
            pick[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

std::optional<int> k8n_shape(const ExtensionData& data) {
    const auto& inv = data.group.invariants;
    if (inv.size() != 2 || inv[1] != 2 || inv[0] % 2 != 0)
        return std::nullopt;
    int n = inv[0] / 2;
    const AbelianGroup& G = data.group;
    int a = G.generator(0), b = G.generator(1);
    if (data.action.apply(a) != G.mul(a, b)) return std::nullopt;
    if (data.action.apply(b) != b) return std::nullopt;
    return n;
}

} // namespace hqt
