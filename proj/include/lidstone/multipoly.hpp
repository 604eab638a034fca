#pragma once

// Exact multivariate polynomials over the rationals: the algebraic workhorse.
//
// Terms are kept in a map ordered by the canonical graded-lex order with no
// zero coefficients stored; the zero polynomial is the empty map and reports
// no total degree.  All ring operations, differentiation and evaluation at
// rational points are exact.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lidstone/multiindex.hpp"
#include "lidstone/rational.hpp"

namespace lidstone {

class MultiPoly {
public:
    using TermMap = std::map<MultiIndex, Rational, GradedLexLess>;

    explicit MultiPoly(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("MultiPoly: dimension must be >= 1");
    }

    static MultiPoly zero(int n) { return MultiPoly(n); }

    static MultiPoly constant(int n, const Rational& c) {
        MultiPoly p(n);
        p.add_term(MultiIndex::zero(n), c);
        return p;
    }

    static MultiPoly monomial(int n, const MultiIndex& k, const Rational& c) {
        if (k.dim() != n) throw std::invalid_argument("MultiPoly::monomial: dimension mismatch");
        MultiPoly p(n);
        p.add_term(k, c);
        return p;
    }

    // The j-th coordinate as a polynomial, j in 0..n-1.
    static MultiPoly variable(int n, int j) {
        return monomial(n, MultiIndex::unit(n, j), 1);
    }

    int dim() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Total degree; empty for the zero polynomial.
    std::optional<int> total_degree() const {
        std::optional<int> d;
        for (const auto& [k, c] : terms_) d = d ? std::max(*d, k.norm()) : k.norm();
        return d;
    }

    Rational coefficient(const MultiIndex& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const MultiIndex& k, const Rational& c) {
        if (k.dim() != n_) throw std::invalid_argument("MultiPoly::add_term: dimension mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r(n_);
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_dim(o);
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& o) {
        check_dim(o);
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_dim(b);
        MultiPoly r(a.n_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add_term(ka.plus(kb), ca * cb);
        return r;
    }

    MultiPoly scaled(const Rational& c) const {
        MultiPoly r(n_);
        if (c == 0) return r;
        for (const auto& [k, coef] : terms_) r.terms_.emplace(k, coef * c);
        return r;
    }

    MultiPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
        MultiPoly r = constant(n_, 1);
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    // Exact iterated partial derivative D^t.
    MultiPoly differentiate(const MultiIndex& t) const {
        if (t.dim() != n_) throw std::invalid_argument("MultiPoly::differentiate: dimension mismatch");
        MultiPoly r(n_);
        for (const auto& [k, c] : terms_) {
            if (!t.divides(k)) continue;
            Rational coef = c;
            for (int j = 0; j < n_; ++j) coef *= Rational(falling_factorial(k[j], t[j]));
            r.add_term(k.minus(t), coef);
        }
        return r;
    }

    MultiPoly differentiate(int j) const { return differentiate(MultiIndex::unit(n_, j)); }

    // Evaluation over any commutative ring with 0/1 conversions from Rational.
    template <typename T>
    T evaluate_in(const std::vector<T>& point) const {
        if (static_cast<int>(point.size()) != n_)
            throw std::invalid_argument("MultiPoly::evaluate: dimension mismatch");
        // Per-variable power cache.
        std::vector<std::vector<T>> powers(n_);
        for (int j = 0; j < n_; ++j) powers[j].push_back(T(1));
        auto power = [&](int j, int e) -> const T& {
            auto& col = powers[j];
            while (static_cast<int>(col.size()) <= e) col.push_back(col.back() * point[j]);
            return col[e];
        };
        T acc(0);
        for (const auto& [k, c] : terms_) {
            T term(ring_cast<T>(c));
            for (int j = 0; j < n_; ++j)
                if (k[j] > 0) term = term * power(j, k[j]);
            acc = acc + term;
        }
        return acc;
    }

    Rational evaluate(const std::vector<Rational>& point) const { return evaluate_in<Rational>(point); }

    Complex evaluate(const std::vector<Complex>& point) const { return evaluate_in<Complex>(point); }

    // P(c + M w): exact affine substitution; columns of M are the images of
    // the new coordinate directions.
    MultiPoly substitute_affine(const std::vector<Rational>& c,
                                const std::vector<std::vector<Rational>>& m) const {
        if (static_cast<int>(c.size()) != n_ || static_cast<int>(m.size()) != n_)
            throw std::invalid_argument("MultiPoly::substitute_affine: dimension mismatch");
        std::vector<MultiPoly> images;
        images.reserve(n_);
        for (int j = 0; j < n_; ++j) {
            MultiPoly l = constant(n_, c[j]);
            for (int i = 0; i < n_; ++i) l += variable(n_, i).scaled(m[j][i]);
            images.push_back(std::move(l));
        }
        std::vector<std::vector<MultiPoly>> powers(n_, std::vector<MultiPoly>{constant(n_, 1)});
        auto power = [&](int j, int e) -> const MultiPoly& {
            auto& col = powers[j];
            while (static_cast<int>(col.size()) <= e) col.push_back(col.back() * images[j]);
            return col[e];
        };
        MultiPoly acc(n_);
        for (const auto& [k, coef] : terms_) {
            MultiPoly term = constant(n_, coef);
            for (int j = 0; j < n_; ++j)
                if (k[j] > 0) term = term * power(j, k[j]);
            acc += term;
        }
        return acc;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

private:
    template <typename T>
    static T ring_cast(const Rational& q) {
        if constexpr (std::is_same_v<T, Rational>) return q;
        else if constexpr (std::is_same_v<T, Complex>) return Complex(to_double(q), 0.0);
        else return T(q);
    }

    void check_dim(const MultiPoly& o) const {
        if (o.n_ != n_) throw std::invalid_argument("MultiPoly: dimension mismatch");
    }

    int n_;
    TermMap terms_;
};

// g(args[0], ..., args[m-1]) with polynomial arguments, all of one ambient
// dimension.  Exact monomial expansion with per-argument power caching.
inline MultiPoly compose(const MultiPoly& g, const std::vector<MultiPoly>& args) {
    if (args.size() != static_cast<std::size_t>(g.dim()))
        throw std::invalid_argument("compose: argument count must match polynomial dimension");
    if (args.empty()) throw std::invalid_argument("compose: no arguments");
    const int n = args[0].dim();
    for (const auto& a : args)
        if (a.dim() != n) throw std::invalid_argument("compose: mixed argument dimensions");
    std::vector<std::vector<MultiPoly>> powers(args.size(), std::vector<MultiPoly>{MultiPoly::constant(n, 1)});
    auto power = [&](std::size_t j, int e) -> const MultiPoly& {
        auto& col = powers[j];
        while (static_cast<int>(col.size()) <= e) col.push_back(col.back() * args[j]);
        return col[e];
    };
    MultiPoly acc(n);
    for (const auto& [k, c] : g.terms()) {
        MultiPoly term = MultiPoly::constant(n, c);
        for (int j = 0; j < g.dim(); ++j)
            if (k[j] > 0) term = term * power(j, k[j]);
        acc += term;
    }
    return acc;
}

// True iff D^t P = 0 for every t with all entries even and |t| = order.
// For polynomials this holds iff no monomial of P dominates such a t, which
// in turn forces total degree < order + n when order is even.
inline bool even_slice_vanishes(const MultiPoly& p, int order) {
    if (order < 1) throw std::invalid_argument("even_slice_vanishes: order must be >= 1");
    if (order % 2 != 0) return true;  // no all-even t has odd norm
    for (const auto& t : multi_indices_of_norm(p.dim(), order)) {
        if (!t.all_even()) continue;
        if (!p.differentiate(t).is_zero()) return false;
    }
    return true;
}

}  // namespace lidstone
