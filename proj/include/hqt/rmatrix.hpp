#ifndef HQT_RMATRIX_HPP
#define HQT_RMATRIX_HPP

#include <array>
#include <optional>

#include "hqt/hopf.hpp"
#include "hqt/parallel.hpp"

namespace hqt {

// Candidate universal R-matrix of H = k^G # kZ_2, stored as four |G| x |G|
// coefficient blocks:
//   w1(g,h) on e_g (x) e_h      w2(g,h) on e_g x (x) e_h
//   w3(g,h) on e_g (x) e_h x    w4(g,h) on e_g x (x) e_h x
struct RMatrix {
    const HopfAlgebra* H = nullptr;
    std::vector<CycNum> w1, w2, w3, w4;

    static RMatrix zero(const HopfAlgebra& h);
    static RMatrix from_tensor(const TensorElement& t);
    static RMatrix identity(const HopfAlgebra& h); // 1 (x) 1

    CycNum& blk(int which, int g, int h);
    const CycNum& blk(int which, int g, int h) const;
    TensorElement to_tensor() const;

    // lexicographic order on the concatenated w1 w2 w3 w4 streams
    static int compare(const RMatrix& a, const RMatrix& b);
    friend bool operator==(const RMatrix& a, const RMatrix& b) { return compare(a, b) == 0; }
};

void canonical_sort(std::vector<RMatrix>& rs); // sort + dedup

// coefficient-wise embedding into the same data materialized at a larger
// ambient order
RMatrix change_ambient(const RMatrix& r, const HopfAlgebra& target);

struct VerifyIssue {
    std::string equation;
    std::string witness;
};

struct VerifyReport {
    bool ok = true;
    bool invertible = true;
    std::vector<VerifyIssue> issues;
};

// Direct verification: invertibility of R in H (x) H, the two coproduct
// braiding identities, and the intertwiner identity for every basis element.
VerifyReport verify_quasitriangular(const HopfAlgebra& h, const RMatrix& r,
                                    Exec policy = Exec::Parallel);

// Equivalent blockwise verification for Z_2n x Z_2 shaped data: symmetry of
// tau on the fixed subgroup, the three twist identities tying each w-block
// to its <|x translate, and multiplicativity of the maps l(f) = (f (x) id)R
// and r(f) = (id (x) f)R on all dual basis pairs.
VerifyReport verify_block_criteria(const HopfAlgebra& h, const RMatrix& r);

enum class FormClass { Trivial, NonTrivial, Neither };
FormClass classify_form(const RMatrix& r);
std::string form_name(FormClass f);

struct TrivialOutcome {
    bool accepted = false;
    std::optional<RMatrix> r;
    std::pair<int, int> violation{-1, -1}; // pair failing the twist condition
};

// Builds sum w(g,h) e_g (x) e_h when the bicharacter satisfies
// w(g<|x, h<|x) = w(g,h) eta(g,h); the candidate is then re-verified in
// full (the condition is necessary, sufficiency is decided per candidate).
// Throws VerificationFailed if the condition held but verification did not.
TrivialOutcome construct_trivial(const HopfAlgebra& h, const Bicharacter& w);

std::vector<RMatrix> enumerate_trivial(const HopfAlgebra& h, Exec policy = Exec::Parallel);

// Derived quantities of a Z_2n x Z_2 instance used by the nontrivial
// constructors: partial cocycle products P_i = prod_{k<i} tau(a, a^k),
// their sigma-normalizations, and the ratio h on moved pairs.
struct K8nNotation {
    const HopfAlgebra* H = nullptr;
    int n = 0;
    int a = 0, b = 0; // generator element indices
    std::vector<int> apow;
    std::vector<CycNum> prefix; // P_i for 0 <= i <= 2n

    explicit K8nNotation(const HopfAlgebra& h);
    CycNum lambda(int i, int jexp) const; // P_i^-1 sigma(a^jexp)^(i/2)
    CycNum h_ratio(int t1, int t2) const; // tau(t1,t2)/tau(t2<|x, t1<|x)
    CycNum seed0(int j, const CycNum& alpha, const CycNum& beta) const;
    CycNum seed1(int j, const CycNum& alpha, const CycNum& beta) const;
    CycNum eta_ab() const; // tau(a,b)/tau(b,a)
};

enum class EtaVariant { Minus, Plus };

// The four-block nontrivial candidate R_{alpha,beta}; requires
// (alpha beta)^n lambda(2n,1) = 1 and beta^2/alpha^2 = tau(b,b)/tau(b,a)^2,
// and the variant matching eta(a,b). The result is re-verified before it is
// returned.
RMatrix build_nontrivial(const HopfAlgebra& h, const CycNum& alpha, const CycNum& beta,
                         EtaVariant variant);

// All nontrivial structures, obtained by solving the two parameter
// constraints inside Q(zeta_M) and deduplicating.
std::vector<RMatrix> enumerate_nontrivial(const HopfAlgebra& h, Exec policy = Exec::Parallel);

// Union of the group-like family and, when the obstruction test passes on a
// Z_2n x Z_2 shape, the four-block family. Complete for the catalog shapes;
// throws UnsupportedFamily when neither argument applies.
std::vector<RMatrix> enumerate_all(const HopfAlgebra& h, Exec policy = Exec::Parallel);

// l(beta_i) and r(beta_i) as coefficient vectors in H
std::vector<CycNum> l_map(const RMatrix& r, int dual_idx);
std::vector<CycNum> r_map(const RMatrix& r, int dual_idx);

// l(X_t) = r(X_t), l(E_t) = r(E_{t<|x}), l(E_s) = r(E_s)
std::vector<VerifyIssue> lr_symmetry_issues(const HopfAlgebra& h, const RMatrix& r);

enum class Verdict { Minimal, NotMinimal };

struct MinimalityReport {
    Verdict verdict = Verdict::NotMinimal;
    int span_dim = 0;                             // dim of H_l H_r
    std::optional<std::array<int, 4>> block_ranks; // 2n x 2n interleaved blocks
    std::optional<CycNum> gamma;                  // (sigma(a) alpha beta)^2 sigma(a^2) tau(a,a)^-2
    std::optional<bool> gamma_primitive;
    std::optional<CycNum> omega;                  // sigma(a) alpha beta
    bool coherent = true;                         // the independent computations agree
    std::vector<CycNum> omega_witnesses;          // criterion-level only
    std::vector<RMatrix> minimal_set;             // criterion-level only
    std::string note;
};

// Per-R minimality: the span of {l(beta_i) r(beta_j)} always; for a
// four-block R on a Z_2n x Z_2 instance also the four block ranks, and when
// eta(a,b) = -1 the primitive-root criterion, all cross-checked.
MinimalityReport minimality(const HopfAlgebra& h, const RMatrix& r, Exec policy = Exec::Parallel);

// Algebra-level criterion: witnesses omega with omega^n = P_2n whose
// associated value omega^2 sigma(a^2) tau(a,a)^-2 is a primitive n-th root
// of 1, plus the explicit minimal family they generate.
MinimalityReport minimality_criterion(const HopfAlgebra& h);

} // namespace hqt

#endif
