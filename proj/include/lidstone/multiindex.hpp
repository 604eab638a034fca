#pragma once

// Multi-indices (derivative orders), the admissible derivative/point index
// set, and its canonical bounded enumeration.
//
// The index set collects the pairs (t, i) with t a multi-index of dimension
// n and i a point index in 0..n, subject to: the total order |t| is even,
// and the first i entries of t are even (vacuous for i = 0).  This is the
// combinatorial backbone of the interpolation scheme: for n = 1 it reduces
// to even-order derivatives at both endpoints.

#include <stdexcept>
#include <vector>

#include "lidstone/rational.hpp"

namespace lidstone {

class MultiIndex {
public:
    MultiIndex() = default;

    explicit MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
        if (e_.empty()) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
        for (int v : e_)
            if (v < 0) throw std::invalid_argument("MultiIndex: negative entry");
    }

    static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(n, 0)); }

    static MultiIndex unit(int n, int j) {
        std::vector<int> e(n, 0);
        e.at(j) = 1;
        return MultiIndex(std::move(e));
    }

    int dim() const { return static_cast<int>(e_.size()); }
    int operator[](int j) const { return e_[j]; }
    const std::vector<int>& exponents() const { return e_; }

    // |t| = t_1 + ... + t_n
    int norm() const {
        int s = 0;
        for (int v : e_) s += v;
        return s;
    }

    // t! = t_1! ... t_n!
    BigInt factorial() const {
        BigInt f = 1;
        for (int v : e_) f *= lidstone::factorial(v);
        return f;
    }

    bool is_zero() const { return norm() == 0; }

    bool all_even() const {
        for (int v : e_)
            if (v % 2 != 0) return false;
        return true;
    }

    // True when the first `count` entries are all even.
    bool prefix_even(int count) const {
        for (int j = 0; j < count; ++j)
            if (e_[j] % 2 != 0) return false;
        return true;
    }

    // Componentwise t <= other (i.e. D^t does not annihilate z^other).
    bool divides(const MultiIndex& other) const {
        for (int j = 0; j < dim(); ++j)
            if (e_[j] > other.e_[j]) return false;
        return true;
    }

    MultiIndex plus(const MultiIndex& o) const {
        std::vector<int> r(e_);
        for (int j = 0; j < dim(); ++j) r[j] += o.e_[j];
        return MultiIndex(std::move(r));
    }

    // Requires o.divides(*this).
    MultiIndex minus(const MultiIndex& o) const {
        std::vector<int> r(e_);
        for (int j = 0; j < dim(); ++j) {
            r[j] -= o.e_[j];
            if (r[j] < 0) throw std::invalid_argument("MultiIndex::minus: would go negative");
        }
        return MultiIndex(std::move(r));
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }

private:
    std::vector<int> e_;
};

// Canonical term order: total degree ascending, then leading-variable-major
// within a degree class, so degree 2 in two variables reads (2,0), (1,1),
// (0,2).  Used for map keys, matrix column order and JSON output.
struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        int na = a.norm(), nb = b.norm();
        if (na != nb) return na < nb;
        for (int j = 0; j < a.dim(); ++j)
            if (a[j] != b[j]) return a[j] > b[j];
        return false;
    }
};

struct IndexPair {
    MultiIndex t;
    int i = 0;  // point index in 0..n

    IndexPair() = default;
    IndexPair(MultiIndex t_, int i_) : t(std::move(t_)), i(i_) {
        if (i < 0 || i > t.dim()) throw std::invalid_argument("IndexPair: point index out of range");
    }

    friend bool operator==(const IndexPair& a, const IndexPair& b) { return a.i == b.i && a.t == b.t; }
};

struct IndexPairLess {
    bool operator()(const IndexPair& a, const IndexPair& b) const {
        GradedLexLess less;
        if (less(a.t, b.t)) return true;
        if (less(b.t, a.t)) return false;
        return a.i < b.i;
    }
};

// Membership: |t| even and the first i entries of t even.
inline bool in_index_set(const IndexPair& p) {
    return p.t.norm() % 2 == 0 && p.t.prefix_even(p.i);
}

namespace detail {

// All multi-indices of dimension n with norm exactly m, leading-variable-major.
inline void indices_of_norm(int n, int m, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
    if (n == 1) {
        prefix.push_back(m);
        out.push_back(MultiIndex(prefix));
        prefix.pop_back();
        return;
    }
    for (int v = m; v >= 0; --v) {
        prefix.push_back(v);
        indices_of_norm(n - 1, m - v, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

inline std::vector<MultiIndex> multi_indices_of_norm(int n, int m) {
    if (n < 1) throw std::invalid_argument("multi_indices_of_norm: dimension must be >= 1");
    std::vector<MultiIndex> out;
    std::vector<int> prefix;
    detail::indices_of_norm(n, m, prefix, out);
    return out;
}

inline std::vector<MultiIndex> multi_indices_up_to(int n, int max_norm) {
    std::vector<MultiIndex> out;
    for (int m = 0; m <= max_norm; ++m) {
        auto block = multi_indices_of_norm(n, m);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

// All admissible (t, i) with |t| <= max_norm, sorted by (|t|, graded-lex, i).
inline std::vector<IndexPair> enumerate_index_set(int n, int max_norm) {
    if (n < 1) throw std::invalid_argument("enumerate_index_set: dimension must be >= 1");
    std::vector<IndexPair> out;
    for (int m = 0; m <= max_norm; m += 2)
        for (const auto& t : multi_indices_of_norm(n, m))
            for (int i = 0; i <= n; ++i) {
                IndexPair p(t, i);
                if (in_index_set(p)) out.push_back(std::move(p));
            }
    return out;
}

}  // namespace lidstone
