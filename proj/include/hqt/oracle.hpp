#ifndef HQT_ORACLE_HPP
#define HQT_ORACLE_HPP

#include "hqt/rmatrix.hpp"

namespace hqt {

// Exact solution space of the linear constraints on the dim^2 coefficients
// of a candidate R: the intertwiner identities for every e_g and for x.
// Each constraint ties at most two coefficients with unit ratios, so the
// space is described by components with a fixed ratio to a representative.
struct LinearStage {
    const HopfAlgebra* H = nullptr;
    int ncoords = 0;
    std::vector<int> comp;    // coordinate -> component id, -1 when forced zero
    std::vector<CycNum> ratio; // value(coord) = ratio * value(representative)
    std::vector<int> rep;     // component -> representative coordinate

    int param_count() const { return (int)rep.size(); }
    bool contains(const TensorElement& t) const;
};

LinearStage solve_linear_stage(const HopfAlgebra& h);

struct OracleResult {
    std::vector<RMatrix> solutions; // over the caller's algebra
    int ambient_order = 0;          // order the solving ran at
    bool exhaustive = false;
    long branches = 0;
    long candidates = 0;
    std::vector<std::string> notes;
};

// Brute-force enumeration of every universal R-matrix of H whose
// coefficients lie in Q(zeta_M): the linear stage above, then the two
// coproduct braiding identities, which on the surviving components reduce
// to binomial relations among units; each branch of the zero/unit case
// split triangularizes to power equations solved inside mu_M. Every
// candidate is filtered through the full verifier. exhaustive is true only
// when no reduction step failed.
//
// ambient_order = 0 solves at H's own order; a smaller order requires the
// structure constants to descend into Q(zeta_M).
OracleResult solve_all(const HopfAlgebra& h, int ambient_order = 0, Exec policy = Exec::Parallel);

// HQT_DIM_CAP environment override; dim 18 is allowed past the default cap
// when the obstruction test rules out the four-block branch.
int oracle_dim_cap();

struct DiffReport {
    std::vector<RMatrix> only_in_solver;
    std::vector<RMatrix> only_in_constructed;
    bool empty() const { return only_in_solver.empty() && only_in_constructed.empty(); }
};

// Symmetric difference after canonical dedup; both sides must live over the
// same algebra.
DiffReport compare(const OracleResult& oracle, const std::vector<RMatrix>& constructed);

} // namespace hqt

#endif
