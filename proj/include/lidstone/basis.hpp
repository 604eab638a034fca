#pragma once

// The two-point/multi-point Lidstone basis and exact polynomial
// reconstruction from admissible derivative data.
//
// Everything here reduces to one family of exact linear systems: rows are
// the admissible pairs (t, i) up to a degree budget, columns are monomials,
// and the entry is (D^t z^k)(s_i).  Only the zero polynomial has all-zero
// admissible data within a degree bound (kernel triviality), which makes
// basis elements and reconstructions unique.  Reductions are cached per
// (dimension, degree, frame) so families of solves share the elimination.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "lidstone/frame.hpp"
#include "lidstone/linalg.hpp"
#include "lidstone/multiindex.hpp"
#include "lidstone/multipoly.hpp"

namespace lidstone {

struct InconsistentDataError : std::runtime_error {
    explicit InconsistentDataError(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeCapError : std::runtime_error {
    explicit DegreeCapError(const std::string& what) : std::runtime_error(what) {}
};

struct LidstoneBasisElement {
    MultiIndex t;
    int i = 0;
    MultiPoly poly = MultiPoly::zero(1);
    int degree = 0;
};

// Derivative data (t, i) -> value at the frame points (canonical by default).
struct DataSet {
    int n = 1;
    std::map<IndexPair, Rational, IndexPairLess> entries;
    std::optional<AffineFrame> frame;

    explicit DataSet(int n_) : n(n_) {}

    void set(const IndexPair& key, const Rational& value) {
        if (key.t.dim() != n) throw std::invalid_argument("DataSet: key dimension mismatch");
        if (!in_index_set(key)) throw std::invalid_argument("DataSet: key not in the admissible index set");
        entries[key] = value;
    }

    const AffineFrame& effective_frame() const {
        static thread_local std::map<int, AffineFrame> canon;
        if (frame) return *frame;
        auto it = canon.find(n);
        if (it == canon.end()) it = canon.emplace(n, AffineFrame::canonical(n)).first;
        return it->second;
    }
};

// (D^t z^k)(point) for a monomial z^k: falling factorials times a power product.
inline Rational monomial_derivative_at(const MultiIndex& k, const MultiIndex& t,
                                       const std::vector<Rational>& point) {
    if (!t.divides(k)) return 0;
    Rational coef = 1;
    for (int j = 0; j < k.dim(); ++j) coef *= Rational(falling_factorial(k[j], t[j]));
    for (int j = 0; j < k.dim(); ++j) {
        int e = k[j] - t[j];
        if (e > 0) coef *= pow_rational(point[j], e);
        if (coef == 0) return 0;
    }
    return coef;
}

// Rows: admissible (t, i) with |t| <= degree; columns: monomials of total
// degree <= degree, both in canonical order.
struct CollocationSystem {
    int n = 1;
    int degree = 0;
    std::vector<IndexPair> rows;
    std::vector<MultiIndex> cols;
    std::shared_ptr<LinearSolver> solver;

    MultiPoly to_poly(const RatVector& coeffs) const {
        MultiPoly p(n);
        for (std::size_t j = 0; j < cols.size(); ++j) p.add_term(cols[j], coeffs[j]);
        return p;
    }
};

namespace detail {

inline std::string frame_cache_key(const AffineFrame& frame) {
    std::ostringstream os;
    for (const auto& p : frame.points())
        for (const auto& q : p) os << to_string(q) << ',';
    return os.str();
}

inline RatMatrix collocation_matrix(const std::vector<IndexPair>& rows,
                                    const std::vector<MultiIndex>& cols,
                                    const AffineFrame& frame) {
    RatMatrix m(rows.size(), RatVector(cols.size(), 0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& point = frame.point(rows[r].i);
        for (std::size_t c = 0; c < cols.size(); ++c)
            m[r][c] = monomial_derivative_at(cols[c], rows[r].t, point);
    }
    return m;
}

// Write-once cache of reduced systems; all writers would compute the same
// value, so last-writer-irrelevant semantics are fine.
inline const CollocationSystem& cached_system(int n, int degree, const AffineFrame& frame) {
    static std::mutex mutex;
    static std::map<std::string, std::unique_ptr<CollocationSystem>> cache;
    std::ostringstream key;
    key << n << '|' << degree << '|' << frame_cache_key(frame);
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key.str());
    if (it != cache.end()) return *it->second;
    auto sys = std::make_unique<CollocationSystem>();
    sys->n = n;
    sys->degree = degree;
    sys->rows = enumerate_index_set(n, degree);
    sys->cols = multi_indices_up_to(n, degree);
    sys->solver = std::make_shared<LinearSolver>(collocation_matrix(sys->rows, sys->cols, frame));
    return *cache.emplace(key.str(), std::move(sys)).first->second;
}

}  // namespace detail

// Only the zero polynomial of total degree <= degree has all-zero admissible
// data at the canonical points: exact nullspace-triviality check.
inline bool kernel_rank_check(int n, int degree) {
    if (degree < 0) throw std::invalid_argument("kernel_rank_check: negative degree");
    auto rows = enumerate_index_set(n, degree);
    auto cols = multi_indices_up_to(n, degree);
    AffineFrame frame = AffineFrame::canonical(n);
    IntMatrix m(rows.size(), std::vector<BigInt>(cols.size(), 0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& point = frame.point(rows[r].i);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            Rational v = monomial_derivative_at(cols[c], rows[r].t, point);
            m[r][c] = numerator(v);  // canonical points give integer entries
        }
    }
    return bareiss_rank(std::move(m)) == static_cast<int>(cols.size());
}

// Classical univariate basis: L_0 = z, L_k'' = L_{k-1}, L_k(0) = L_k(1) = 0.
inline MultiPoly univariate_lidstone(int k) {
    if (k < 0) throw std::invalid_argument("univariate_lidstone: negative index");
    MultiPoly z = MultiPoly::variable(1, 0);
    MultiPoly cur = z;
    for (int step = 1; step <= k; ++step) {
        // Double antiderivative with zero linear terms, then fix L(1) = 0.
        MultiPoly integrated(1);
        for (const auto& [mono, c] : cur.terms()) {
            int d = mono[0];
            integrated.add_term(MultiIndex({d + 2}), c / Rational(BigInt(d + 1) * (d + 2)));
        }
        Rational at_one = integrated.evaluate(std::vector<Rational>{1});
        integrated += z.scaled(-at_one);
        cur = std::move(integrated);
    }
    return cur;
}

// Solves for the basis polynomial dual to (t, i): all admissible data within
// the degree budget is the Kronecker delta at (t, i).  The degree search
// starts at |t| + 1 and stops at the first solvable budget.
inline LidstoneBasisElement lidstone_basis(int n, const MultiIndex& t, int i, int degree_cap) {
    IndexPair target(t, i);
    if (!in_index_set(target))
        throw std::invalid_argument("lidstone_basis: (t, i) is not an admissible pair");
    if (degree_cap < t.norm() + 1)
        throw std::invalid_argument("lidstone_basis: degree_cap below |t| + 1");
    AffineFrame frame = AffineFrame::canonical(n);
    for (int d = t.norm() + 1; d <= degree_cap; ++d) {
        const auto& sys = detail::cached_system(n, d, frame);
        RatVector rhs(sys.rows.size(), 0);
        for (std::size_t r = 0; r < sys.rows.size(); ++r)
            if (sys.rows[r] == target) rhs[r] = 1;
        auto sol = sys.solver->solve(rhs);
        if (!sol) continue;
        LidstoneBasisElement el{t, i, sys.to_poly(*sol), 0};
        el.degree = el.poly.total_degree().value_or(0);
        return el;
    }
    throw DegreeCapError("lidstone_basis: no solution within degree cap");
}

// Unique polynomial of total degree <= degree_bound whose admissible data
// matches the set (keyed pairs take their value, all other admissible pairs
// within the budget are zero).  Works at any valid rational frame; with
// integer data and rational points the output is exactly rational.
inline MultiPoly reconstruct(const DataSet& data, int degree_bound) {
    for (const auto& [key, value] : data.entries)
        if (key.t.norm() > degree_bound)
            throw std::invalid_argument("reconstruct: data key exceeds degree bound");
    const AffineFrame& frame = data.effective_frame();
    if (frame.dim() != data.n) throw std::invalid_argument("reconstruct: frame dimension mismatch");
    if (!frame.is_valid()) throw SingularFrameError();
    const auto& sys = detail::cached_system(data.n, degree_bound, frame);
    RatVector rhs(sys.rows.size(), 0);
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        auto it = data.entries.find(sys.rows[r]);
        if (it != data.entries.end()) rhs[r] = it->second;
    }
    auto sol = sys.solver->solve(rhs);
    if (!sol)
        throw InconsistentDataError("reconstruct: no polynomial of degree <= " +
                                    std::to_string(degree_bound) + " matches the data");
    return sys.to_poly(*sol);
}

// Explicit general-frame entry point (the frame travels with the data).
inline MultiPoly reconstruct_general(const DataSet& data, int degree_bound) {
    return reconstruct(data, degree_bound);
}

// Admissible data of a polynomial, the extraction inverse of reconstruct.
inline DataSet extract_data(const MultiPoly& p, const AffineFrame& frame, int max_norm) {
    DataSet data(p.dim());
    if (!frame.is_canonical()) data.frame = frame;
    for (const auto& pair : enumerate_index_set(p.dim(), max_norm)) {
        Rational v = p.differentiate(pair.t).evaluate(frame.point(pair.i));
        if (v != 0) data.entries[pair] = v;
    }
    return data;
}

}  // namespace lidstone
