#include "hqt/matrix.hpp"

#include <algorithm>

#include "hqt/errors.hpp"

namespace hqt {

CycMatrix::CycMatrix(int rows, int cols, int order)
    : rows_(rows), cols_(cols), order_(order), e_((size_t)rows * cols, CycNum::zero(order)) {}

CycMatrix CycMatrix::identity(int n, int order) {
    CycMatrix m(n, n, order);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = CycNum::one(order);
    return m;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

namespace {

struct Echelon {
    std::vector<std::vector<CycNum>> rows; // reduced row echelon form
    std::vector<int> pivot_cols;
};

Echelon rref(const CycMatrix& m) {
    int R = m.rows(), C = m.cols();
    std::vector<std::vector<CycNum>> a(R, std::vector<CycNum>(C, CycNum::zero(m.order())));
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j)
            a[i][j] = m.at(i, j);

    Echelon ech;
    int r = 0;
    for (int c = 0; c < C && r < R; ++c) {
        int pr = -1;
        for (int i = r; i < R; ++i)
            if (!a[i][c].is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(a[pr], a[r]);
        CycNum inv = a[r][c].inv();
        for (int j = c; j < C; ++j)
            if (!a[r][j].is_zero()) a[r][j] = a[r][j] * inv;
        for (int i = 0; i < R; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            CycNum f = a[i][c];
            for (int j = c; j < C; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
        }
        ech.pivot_cols.push_back(c);
        ++r;
    }
    a.resize(r);
    ech.rows = std::move(a);
    return ech;
}

} // namespace

int rank(const CycMatrix& m) {
    return (int)rref(m).pivot_cols.size();
}

std::vector<std::vector<CycNum>> nullspace(const CycMatrix& m) {
    Echelon e = rref(m);
    int C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (int c : e.pivot_cols)
        is_pivot[c] = true;
    std::vector<std::vector<CycNum>> basis;
    for (int fc = 0; fc < C; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<CycNum> v(C, CycNum::zero(m.order()));
        v[fc] = CycNum::one(m.order());
        for (size_t i = 0; i < e.pivot_cols.size(); ++i)
            v[e.pivot_cols[i]] = -e.rows[i][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

CycMatrix inverse(const CycMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("inverse requires a square matrix");
    int n = m.rows();
    CycMatrix aug(n, 2 * n, m.order());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = CycNum::one(m.order());
    }
    Echelon e = rref(aug);
    if ((int)e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1)
        throw Singular();
    CycMatrix inv(n, n, m.order());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv.at(i, j) = e.rows[i][n + j];
    return inv;
}

std::vector<CycNum> solve(const CycMatrix& a, const std::vector<CycNum>& b) {
    if ((int)b.size() != a.rows())
        throw DimensionMismatch("solve: rhs length mismatch");
    CycMatrix aug(a.rows(), a.cols() + 1, a.order());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    Echelon e = rref(aug);
    std::vector<CycNum> x(a.cols(), CycNum::zero(a.order()));
    for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
        if (e.pivot_cols[i] == a.cols())
            throw Singular(); // inconsistent system
        x[e.pivot_cols[i]] = e.rows[i][a.cols()];
    }
    return x;
}

bool RowSpan::add(std::vector<CycNum> row) {
    // stored rows are normalized with pairwise distinct leading columns;
    // reduce the incoming row until its lead is fresh or it vanishes
    while (true) {
        int lead = -1;
        for (int j = 0; j < cols_; ++j)
            if (!row[j].is_zero()) { lead = j; break; }
        if (lead < 0) return false;
        int hit = -1;
        for (size_t i = 0; i < rows_.size(); ++i)
            if (lead_[i] == lead) { hit = (int)i; break; }
        if (hit < 0) {
            CycNum inv = row[lead].inv();
            for (int j = lead; j < cols_; ++j)
                if (!row[j].is_zero()) row[j] = row[j] * inv;
            rows_.push_back(std::move(row));
            lead_.push_back(lead);
            return true;
        }
        CycNum c = row[lead];
        for (int j = lead; j < cols_; ++j)
            if (!rows_[hit][j].is_zero())
                row[j] -= c * rows_[hit][j];
    }
}

} // namespace hqt
