#pragma once

// Truncated series expansion in the basis dual to admissible derivative
// data at the canonical points: f ~ sum (D^t f)(e_i) * basis_{t,i}.
// Coefficients are exact when the source allows; the residual is measured
// numerically on a sample grid in the unit polydisc (the real unit cube
// lattice by default, optionally augmented with seeded random complex
// samples from the polydisc).

#include <optional>
#include <random>
#include <vector>

#include "lidstone/basis.hpp"
#include "lidstone/fixture.hpp"

namespace lidstone {

struct ExpansionTerm {
    IndexPair pair;
    bool exact = false;
    Rational coef_exact;       // meaningful when exact
    Complex coef{0.0, 0.0};    // always filled
    LidstoneBasisElement basis;
};

struct Expansion {
    int n = 1;
    int truncation = 0;
    int pairs_scanned = 0;
    std::vector<ExpansionTerm> terms;  // zero coefficients are dropped
    bool all_exact = true;
    std::optional<MultiPoly> partial_sum;  // exact partial sum when all_exact
    double residual_max = 0;
    bool residual_exact_zero = false;
    int residual_grid = 0;
    int residual_samples = 0;
};

struct ExpandOptions {
    int degree_cap_slack = 4;   // basis degree search cap: |t| + 1 + slack
    int residual_grid = 0;      // per-axis lattice points; 0 picks by dimension
    int random_samples = 0;     // extra complex samples in the unit polydisc
    std::uint64_t seed = 1;
};

namespace expanddetail {

inline int default_residual_grid(int n) { return n == 1 ? 33 : (n == 2 ? 17 : 7); }

inline Complex partial_sum_value(const std::vector<ExpansionTerm>& terms,
                                 const std::vector<Complex>& z) {
    Complex acc{0.0, 0.0};
    for (const auto& term : terms) acc += term.coef * term.basis.poly.evaluate(z);
    return acc;
}

}  // namespace expanddetail

inline Expansion expand(const Fixture& fixture, int truncation, ExpandOptions opt = {}) {
    if (truncation < 0) throw std::invalid_argument("expand: negative truncation");
    if (!fixture.frame.is_canonical())
        throw std::invalid_argument("expand: expansion coefficients live at the canonical points");
    Expansion out;
    out.n = fixture.n;
    out.truncation = truncation;

    for (const auto& pair : enumerate_index_set(fixture.n, truncation)) {
        out.pairs_scanned += 1;
        ExpansionTerm term;
        term.pair = pair;
        if (auto q = fixture.exact_derivative(pair)) {
            term.exact = true;
            term.coef_exact = *q;
            term.coef = Complex(to_double(*q), 0.0);
        } else {
            out.all_exact = false;
            term.coef = fixture.numeric_derivative(pair);
        }
        if (term.exact ? term.coef_exact == 0 : std::abs(term.coef) == 0.0) continue;
        term.basis = lidstone_basis(fixture.n, pair.t, pair.i, pair.t.norm() + 1 + opt.degree_cap_slack);
        out.terms.push_back(std::move(term));
    }

    if (out.all_exact) {
        MultiPoly sum(fixture.n);
        for (const auto& term : out.terms) sum += term.basis.poly.scaled(term.coef_exact);
        out.partial_sum = std::move(sum);
    }

    // Exact zero residual for polynomial sources that the expansion reproduces.
    if (fixture.poly && out.partial_sum && *fixture.poly == *out.partial_sum) {
        out.residual_exact_zero = true;
        out.residual_max = 0.0;
        return out;
    }

    const int grid = opt.residual_grid > 0 ? opt.residual_grid
                                           : expanddetail::default_residual_grid(fixture.n);
    out.residual_grid = grid;
    std::vector<Complex> z(fixture.n);
    std::vector<int> idx(fixture.n, 0);
    double worst = 0;
    while (true) {
        for (int j = 0; j < fixture.n; ++j) z[j] = Complex(static_cast<double>(idx[j]) / (grid - 1), 0.0);
        worst = std::max(worst,
                         std::abs(fixture.eval(z) - expanddetail::partial_sum_value(out.terms, z)));
        int j = 0;
        while (j < fixture.n && ++idx[j] == grid) idx[j++] = 0;
        if (j == fixture.n) break;
    }
    if (opt.random_samples > 0) {
        std::mt19937_64 rng(opt.seed);
        std::uniform_real_distribution<double> radius(0.0, 1.0), angle(0.0, 2.0 * M_PI);
        for (int s = 0; s < opt.random_samples; ++s) {
            for (int j = 0; j < fixture.n; ++j) {
                double r = radius(rng), th = angle(rng);
                z[j] = Complex(r * std::cos(th), r * std::sin(th));
            }
            worst = std::max(worst,
                             std::abs(fixture.eval(z) - expanddetail::partial_sum_value(out.terms, z)));
        }
        out.residual_samples = opt.random_samples;
    }
    out.residual_max = worst;
    return out;
}

}  // namespace lidstone
