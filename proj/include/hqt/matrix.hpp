#ifndef HQT_MATRIX_HPP
#define HQT_MATRIX_HPP

#include <vector>

#include "hqt/cyclotomic.hpp"

namespace hqt {

// Dense matrix over one cyclotomic field Q(zeta_M). All entries share the
// ambient order of the first nonzero entry inserted; elimination is exact
// with first-nonzero pivoting in row-major order, so results are
// deterministic and tolerance-free.
class CycMatrix {
  public:
    CycMatrix() = default;
    CycMatrix(int rows, int cols, int order);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int order() const { return order_; }

    CycNum& at(int i, int j) { return e_[(size_t)i * cols_ + j]; }
    const CycNum& at(int i, int j) const { return e_[(size_t)i * cols_ + j]; }

    static CycMatrix identity(int n, int order);

    friend bool operator==(const CycMatrix& a, const CycMatrix& b);

  private:
    int rows_ = 0, cols_ = 0, order_ = 0;
    std::vector<CycNum> e_;
};

int rank(const CycMatrix& m);
std::vector<std::vector<CycNum>> nullspace(const CycMatrix& m); // basis of the right kernel
CycMatrix inverse(const CycMatrix& m);                          // throws Singular
std::vector<CycNum> solve(const CycMatrix& a, const std::vector<CycNum>& b); // throws Singular

// Incremental row-space rank tracker: feed rows, read off the rank. Lets the
// span computations stop early once the rank saturates.
class RowSpan {
  public:
    RowSpan(int cols, int order) : cols_(cols), order_(order) {}
    // returns true if the row enlarged the span
    bool add(std::vector<CycNum> row);
    int rank() const { return (int)rows_.size(); }

  private:
    int cols_, order_;
    std::vector<std::vector<CycNum>> rows_; // reduced rows
    std::vector<int> lead_;                 // leading column per reduced row
};

} // namespace hqt

#endif
