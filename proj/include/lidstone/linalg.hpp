#pragma once

// Exact dense linear algebra over the rationals: Gauss-Jordan reduction with
// a recorded transform (for repeated solves against one matrix), fraction-free
// Bareiss elimination for integer rank computation, and matrix inversion.
// No floating point on any of these paths.

#include <optional>
#include <stdexcept>
#include <vector>

#include "lidstone/rational.hpp"

namespace lidstone {

using RatMatrix = std::vector<std::vector<Rational>>;
using RatVector = std::vector<Rational>;
using IntMatrix = std::vector<std::vector<BigInt>>;

struct RrefResult {
    RatMatrix r;                  // reduced row echelon form of the input
    RatMatrix transform;          // t * input = r
    std::vector<int> pivot_cols;  // column of the pivot in each leading row
    int rank = 0;
};

// Gauss-Jordan with a transform matrix carried along.  Pivot choice within a
// column prefers the entry with the smallest representation to limit growth.
inline RrefResult rref_with_transform(const RatMatrix& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    RrefResult res;
    res.r = a;
    res.transform.assign(rows, RatVector(rows, 0));
    for (int i = 0; i < rows; ++i) res.transform[i][i] = 1;

    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
        int pivot = -1;
        std::size_t best_size = 0;
        for (int i = lead; i < rows; ++i) {
            if (res.r[i][col] == 0) continue;
            std::size_t sz = numerator(res.r[i][col]).str().size() + denominator(res.r[i][col]).str().size();
            if (pivot < 0 || sz < best_size) {
                pivot = i;
                best_size = sz;
            }
        }
        if (pivot < 0) continue;
        std::swap(res.r[pivot], res.r[lead]);
        std::swap(res.transform[pivot], res.transform[lead]);
        Rational inv = Rational(1) / res.r[lead][col];
        for (auto& v : res.r[lead]) v *= inv;
        for (auto& v : res.transform[lead]) v *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == lead || res.r[i][col] == 0) continue;
            Rational f = res.r[i][col];
            for (int j = 0; j < cols; ++j) res.r[i][j] -= f * res.r[lead][j];
            for (int j = 0; j < rows; ++j) res.transform[i][j] -= f * res.transform[lead][j];
        }
        res.pivot_cols.push_back(col);
        ++lead;
    }
    res.rank = lead;
    return res;
}

inline int rational_rank(const RatMatrix& a) {
    // Rank-only elimination without the transform bookkeeping.
    RatMatrix m = a;
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
        int pivot = -1;
        for (int i = lead; i < rows; ++i)
            if (m[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[lead]);
        for (int i = lead + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[lead][col];
            for (int j = col; j < cols; ++j) m[i][j] -= f * m[lead][j];
        }
        ++lead;
    }
    return lead;
}

// Fraction-free elimination (Bareiss): all intermediate values stay integral,
// divisions are exact.  Suited to the integer collocation matrices.
inline int bareiss_rank(IntMatrix m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    BigInt prev = 1;
    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
        int pivot = -1;
        for (int i = lead; i < rows; ++i)
            if (m[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[lead]);
        for (int i = lead + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                m[i][j] = (m[lead][col] * m[i][j] - m[i][col] * m[lead][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[lead][col];
        ++lead;
    }
    return lead;
}

// Repeated exact solves of A x = b for a fixed (possibly overdetermined but
// full-column-rank) matrix A.  The reduction is done once; each solve is a
// transform application plus a consistency check on the zero rows.
class LinearSolver {
public:
    explicit LinearSolver(const RatMatrix& a)
        : rows_(static_cast<int>(a.size())),
          cols_(rows_ == 0 ? 0 : static_cast<int>(a[0].size())),
          rref_(rref_with_transform(a)) {}

    int rank() const { return rref_.rank; }
    bool full_column_rank() const { return rref_.rank == cols_; }

    // Unique solution, or nullopt when the system is inconsistent.
    // Throws when A does not have full column rank (no unique solution).
    std::optional<RatVector> solve(const RatVector& b) const {
        if (static_cast<int>(b.size()) != rows_)
            throw std::invalid_argument("LinearSolver::solve: size mismatch");
        if (!full_column_rank())
            throw std::runtime_error("LinearSolver::solve: matrix is rank deficient");
        RatVector c(rows_, 0);
        for (int i = 0; i < rows_; ++i) {
            Rational s = 0;
            for (int j = 0; j < rows_; ++j)
                if (rref_.transform[i][j] != 0 && b[j] != 0) s += rref_.transform[i][j] * b[j];
            c[i] = s;
        }
        for (int i = rref_.rank; i < rows_; ++i)
            if (c[i] != 0) return std::nullopt;
        RatVector x(cols_, 0);
        for (int i = 0; i < rref_.rank; ++i) x[rref_.pivot_cols[i]] = c[i];
        return x;
    }

private:
    int rows_, cols_;
    RrefResult rref_;
};

inline std::optional<RatMatrix> rational_inverse(const RatMatrix& a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("rational_inverse: matrix not square");
    RrefResult r = rref_with_transform(a);
    if (r.rank != n) return std::nullopt;
    return r.transform;
}

inline RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
    RatVector out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0 && v[j] != 0) s += m[i][j] * v[j];
        out[i] = s;
    }
    return out;
}

}  // namespace lidstone
