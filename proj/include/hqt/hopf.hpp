#ifndef HQT_HOPF_HPP
#define HQT_HOPF_HPP

#include <string>
#include <vector>

#include "hqt/group.hpp"
#include "hqt/matrix.hpp"

namespace hqt {

// The bicrossed product k^G # kZ_2 as explicit structure tensors on the
// basis {e_g} u {e_g x}, indexed b = g + |G|*p with p the x-degree.
//
// Products of basis elements are always a scalar times a single basis
// element (x^2 collapses to sum sigma(g) e_g, which meets any e_g
// idempotent), so the multiplication table stores one (index, coefficient)
// pair per basis pair.
struct HopfAlgebra {
    ExtensionData data;
    int gsize = 0;
    int dim = 0;
    int order = 0; // ambient cyclotomic order

    struct Mono {
        int idx = -1; // -1 means the product is zero
        CycNum coeff;
    };

    std::vector<Mono> mult;       // dim*dim, row-major over (left, right)
    struct DeltaTerm {
        int i, j;
        CycNum coeff;
    };
    std::vector<std::vector<DeltaTerm>> comult; // one term list per basis element
    std::vector<CycNum> counit;                 // dim
    std::vector<Mono> antipode;                 // S(b_j) = coeff * b_idx
    std::vector<Mono> dual_mult;                // beta_i beta_j = coeff * beta_idx

    int bidx(int g, int p) const { return g + gsize * p; }
    int bgroup(int b) const { return b % gsize; }
    int bdeg(int b) const { return b / gsize; }
    const Mono& mul(int u, int v) const { return mult[(size_t)u * dim + v]; }
    const Mono& dmul(int i, int j) const { return dual_mult[(size_t)i * dim + j]; }

    std::string basis_name(int b) const;
};

HopfAlgebra build_hopf(const ExtensionData& data);

struct AxiomIssue {
    std::string axiom;
    std::string witness;
};

struct AxiomReport {
    bool ok = true;
    std::vector<AxiomIssue> issues;
};

// Exhaustive basis-level check of the bialgebra and antipode axioms,
// including S o S = id.
AxiomReport verify_hopf_axioms(const HopfAlgebra& h);

// ---- tensor arithmetic -------------------------------------------------

struct TensorElement {
    const HopfAlgebra* H = nullptr;
    std::vector<CycNum> c; // dim^2, coordinate u*dim + v

    static TensorElement zero(const HopfAlgebra& h);
    static TensorElement unit(const HopfAlgebra& h); // 1 (x) 1
    CycNum& at(int u, int v) { return c[(size_t)u * H->dim + v]; }
    const CycNum& at(int u, int v) const { return c[(size_t)u * H->dim + v]; }
    friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.c == b.c; }
};

struct TripleTensor {
    const HopfAlgebra* H = nullptr;
    std::vector<CycNum> c; // dim^3, coordinate (u*dim + v)*dim + w

    static TripleTensor zero(const HopfAlgebra& h);
    friend bool operator==(const TripleTensor& a, const TripleTensor& b) { return a.c == b.c; }
};

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b);
TripleTensor triple_mul(const TripleTensor& a, const TripleTensor& b);

// lifts H (x) H -> H (x) H (x) H inserting the unit (a sum of idempotents)
TripleTensor lift12(const TensorElement& t);
TripleTensor lift13(const TensorElement& t);
TripleTensor lift23(const TensorElement& t);

TensorElement delta_of_basis(const HopfAlgebra& h, int b);
TensorElement deltaop_of_basis(const HopfAlgebra& h, int b);

TripleTensor delta_first(const TensorElement& t);  // (Delta (x) id)
TripleTensor delta_second(const TensorElement& t); // (id (x) Delta)

// The two quasitriangularity products, computed without expanding units:
// R13 R23 = sum R_uv R_u'v' b_u (x) b_u' (x) (b_v b_v'),
// R13 R12 = sum R_uv R_u'v' (b_u b_u') (x) b_v' (x) b_v.
TripleTensor braid_13_23(const TensorElement& r);
TripleTensor braid_13_12(const TensorElement& r);

// ---- dual side ---------------------------------------------------------

struct DualProductReport {
    bool ok = true;
    std::vector<AxiomIssue> issues;
};

// Verifies E_g E_h = E_{gh}, E_g X_h = X_h E_g = 0 and
// X_g X_h = tau(g,h) X_{gh} against the dualized comultiplication.
DualProductReport dual_products(const HopfAlgebra& h);

struct PresentationReport {
    bool ok = true;
    std::vector<AxiomIssue> issues;
    int span_rank = 0;
};

// For Z_2n x Z_2 shaped data: the defining relations of the dual algebra on
// the generators X_a, X_b, E_a, E_b, plus the spanning statement.
PresentationReport dual_presentation_check(const HopfAlgebra& h);

// x is invertible; found by solving x*y = 1 and cross-checking y*x = 1.
std::vector<CycNum> solve_x_inverse(const HopfAlgebra& h);

// products of coefficient vectors in H and in its dual
std::vector<CycNum> algebra_mul(const HopfAlgebra& h, const std::vector<CycNum>& a,
                                const std::vector<CycNum>& b);
std::vector<CycNum> dual_algebra_mul(const HopfAlgebra& h, const std::vector<CycNum>& a,
                                     const std::vector<CycNum>& b);

} // namespace hqt

#endif
