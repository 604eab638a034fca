#pragma once

// A uniform handle on "a function we can evaluate and differentiate at the
// frame points": exact polynomials, symbolic expressions, or black-box
// evaluation callables (differentiated by contour quadrature).  Growth
// diagnostics, exception scans and series expansion all consume this.

#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "lidstone/contour.hpp"
#include "lidstone/expr.hpp"
#include "lidstone/frame.hpp"
#include "lidstone/multipoly.hpp"
#include "lidstone/verify.hpp"

namespace lidstone {

struct Fixture {
    int n = 1;
    AffineFrame frame = AffineFrame::canonical(1);
    EvalFn eval;
    // Exact derivative value at frame point i, when exactly computable.
    std::function<std::optional<Rational>(const IndexPair&)> exact_derivative;
    // Numeric derivative value at frame point i (always available).
    std::function<Complex(const IndexPair&)> numeric_derivative;
    std::optional<MultiPoly> poly;  // set when the source is a polynomial
};

inline Fixture make_fixture(const MultiPoly& p, AffineFrame frame) {
    if (p.dim() != frame.dim()) throw std::invalid_argument("make_fixture: dimension mismatch");
    Fixture f;
    f.n = p.dim();
    f.frame = frame;
    f.poly = p;
    auto poly = std::make_shared<MultiPoly>(p);
    auto fr = std::make_shared<AffineFrame>(std::move(frame));
    f.eval = [poly](const std::vector<Complex>& z) { return poly->evaluate(z); };
    f.exact_derivative = [poly, fr](const IndexPair& pair) -> std::optional<Rational> {
        return poly->differentiate(pair.t).evaluate(fr->point(pair.i));
    };
    f.numeric_derivative = [poly, fr](const IndexPair& pair) {
        return Complex(to_double(poly->differentiate(pair.t).evaluate(fr->point(pair.i))), 0.0);
    };
    return f;
}

inline Fixture make_fixture(const Expr& e, AffineFrame frame) {
    Fixture f;
    f.n = frame.dim();
    f.frame = frame;
    auto fr = std::make_shared<AffineFrame>(std::move(frame));
    auto table = std::make_shared<DerivativeTable>(e, f.n);
    f.eval = [e](const std::vector<Complex>& z) { return eval_numeric(e, z); };
    f.exact_derivative = [table, fr](const IndexPair& pair) -> std::optional<Rational> {
        auto v = eval_exact(table->derivative(pair.t), fr->point(pair.i));
        if (!v) return std::nullopt;
        return v->as_rational();
    };
    f.numeric_derivative = [table, fr](const IndexPair& pair) {
        const Expr& dt = table->derivative(pair.t);
        if (auto v = eval_exact(dt, fr->point(pair.i))) return Complex(v->to_double(), 0.0);
        return eval_numeric(dt, fr->point_complex(pair.i));
    };
    return f;
}

inline Fixture make_fixture(EvalFn eval, AffineFrame frame, ContourOptions opt = {}) {
    Fixture f;
    f.n = frame.dim();
    f.frame = frame;
    f.eval = eval;
    auto fr = std::make_shared<AffineFrame>(std::move(frame));
    // One cached contour grid per frame point, built on first use.
    auto extractors = std::make_shared<std::map<int, std::unique_ptr<ContourExtractor>>>();
    auto get = [eval, fr, opt, extractors](int i) -> const ContourExtractor& {
        auto it = extractors->find(i);
        if (it == extractors->end()) {
            it = extractors
                     ->emplace(i, std::make_unique<ContourExtractor>(eval, fr->point_complex(i), opt))
                     .first;
        }
        return *it->second;
    };
    f.exact_derivative = [](const IndexPair&) -> std::optional<Rational> { return std::nullopt; };
    f.numeric_derivative = [get](const IndexPair& pair) { return get(pair.i).derivative(pair.t); };
    return f;
}

}  // namespace lidstone
