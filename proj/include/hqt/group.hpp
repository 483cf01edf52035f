#ifndef HQT_GROUP_HPP
#define HQT_GROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "hqt/cyclotomic.hpp"

namespace hqt {

// Finite abelian group presented by cyclic orders [n_1, ..., n_k]. Elements
// are indexed 0..|G|-1 in lexicographic order on exponent vectors
// (e_1, ..., e_k), 0 <= e_i < n_i, with e_1 most significant.
struct AbelianGroup {
    std::vector<int> invariants;

    int size() const;
    int index_of(const std::vector<int>& exps) const;
    std::vector<int> exps_of(int idx) const;
    int mul(int a, int b) const;
    int inv(int a) const;
    int identity() const { return 0; }
    int generator(int k) const; // index of the k-th generator
    int pow(int a, long e) const;
    int element_order(int a) const;

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
        return a.invariants == b.invariants;
    }
};

// The involution g -> g <| x, given by its images on the generators.
struct Action {
    std::vector<std::vector<int>> generator_images; // exponent vectors

    // element permutation table; empty until compiled against a group
    std::vector<int> table;

    void compile(const AbelianGroup& g); // throws InvalidData if not an order-2 automorphism
    int apply(int a) const { return table[a]; }
};

// Full datum (G, <|, sigma, tau) of a bicrossed product k^G # kZ_2.
// sigma and tau are stored as exhaustive tables of CycNum sharing one
// ambient cyclotomic order.
struct ExtensionData {
    AbelianGroup group;
    Action action;
    std::vector<CycNum> sigma;  // size |G|
    std::vector<CycNum> tau;    // size |G|^2, row-major tau[g*|G|+h]
    int ambient_order = 0;

    const CycNum& sig(int g) const { return sigma[g]; }
    const CycNum& tu(int g, int h) const { return tau[(size_t)g * group.size() + h]; }
};

struct ValidationIssue {
    std::string rule;
    std::string witness;
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;
};

// Checks every defining identity of the extension datum by full enumeration
// (the cocycle identity costs a |G|^3 loop). Failures are reported with
// witnesses, not thrown.
ValidationReport validate_extension(const ExtensionData& data);

struct STPartition {
    std::vector<int> fixed;   // S: g <| x = g, in canonical element order
    std::vector<int> moved;   // T: g <| x != g
};

STPartition st_partition(const ExtensionData& data);

// Multiplicative pairing G x G -> k^x determined by its values on generator
// pairs.
struct Bicharacter {
    AbelianGroup group;
    std::vector<CycNum> table; // |G|^2 row-major
    const CycNum& at(int g, int h) const { return table[(size_t)g * group.size() + h]; }
};

// eta(g,h) = tau(g,h)/tau(h,g). Throws NotABicharacter when the result
// fails the bicharacter laws (which signals an invalid tau).
Bicharacter eta(const ExtensionData& data);

enum class ObstructionTag { Possible, OddGroupOrder, UnequalParts, NoCommonShift };

struct ObstructionReport {
    bool possible = false;
    // every failing necessary condition, in the order odd |G|, |S| != |T|,
    // missing common shift; empty when possible
    std::vector<std::pair<ObstructionTag, std::string>> failures;
    std::string reason; // first failure, or the found shift element

    bool has(ObstructionTag t) const {
        for (const auto& f : failures)
            if (f.first == t) return true;
        return false;
    }
};

// Necessary conditions for a quasitriangular structure outside the
// group-like form: |G| even with |S| = |T|, and one b in S with b^2 = 1 and
// t <| x = t b for every t in T.
ObstructionReport obstruction_check(const ExtensionData& data);

// All bicharacters of G with values in Q(zeta_order); the count is the
// product of gcd(n_i, n_j) over generator pairs.
std::vector<Bicharacter> enumerate_bicharacters(const AbelianGroup& g, int order);

// n with G = Z_2n x Z_2, a <| x = ab, b <| x = b; nullopt otherwise.
std::optional<int> k8n_shape(const ExtensionData& data);

std::string element_name(const AbelianGroup& g, int idx); // "a^i b^j" style

} // namespace hqt

#endif
