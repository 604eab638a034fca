#pragma once

// Checks derivative data of a symbolic expression at the frame points
// against a predicate (all zero / all integer), exactly where the engine
// can evaluate exactly and numerically otherwise.  Symbolic derivatives are
// built incrementally in graded order so each D^t is one differentiation
// step away from a cached predecessor.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lidstone/expr.hpp"
#include "lidstone/frame.hpp"
#include "lidstone/multiindex.hpp"
#include "lidstone/pipoly.hpp"

namespace lidstone {

enum class Predicate { Zero, Integer };

struct VerifyOptions {
    int max_norm = 8;
    Predicate predicate = Predicate::Zero;
    double tol = 1e-9;
    bool restrict_to_index_set = true;   // false: every pair with |t| even
    bool scale_tol_by_factorial = true;  // numeric tolerance grows with t!
};

struct VerifyEntry {
    MultiIndex t;
    int i = 0;
    bool exact = false;
    std::optional<PiPoly> exact_value;
    Complex numeric_value{0.0, 0.0};
    double tol_used = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<VerifyEntry> entries;
    int total = 0;
    int passed = 0;
    int exact_count = 0;
    bool all_pass = true;

    // Entries that failed the predicate (for sharpness scans these are the
    // interesting witnesses).
    std::vector<const VerifyEntry*> failures() const {
        std::vector<const VerifyEntry*> out;
        for (const auto& e : entries)
            if (!e.pass) out.push_back(&e);
        return out;
    }
};

// Incrementally differentiated D^t cache over all t up to a norm budget.
class DerivativeTable {
public:
    DerivativeTable(Expr root, int n) : n_(n) { cache_.emplace(MultiIndex::zero(n), std::move(root)); }

    const Expr& derivative(const MultiIndex& t) {
        auto it = cache_.find(t);
        if (it != cache_.end()) return it->second;
        for (int j = 0; j < n_; ++j) {
            if (t[j] == 0) continue;
            auto prev = t.exponents();
            prev[j] -= 1;
            const Expr& below = derivative(MultiIndex(prev));
            return cache_.emplace(t, differentiate(below, j + 1)).first->second;
        }
        return cache_.begin()->second;  // unreachable: t = 0 is seeded
    }

private:
    int n_;
    std::map<MultiIndex, Expr, GradedLexLess> cache_;
};

inline bool is_near_integer(const Complex& v, double tol) {
    return std::abs(v.real() - std::round(v.real())) <= tol && std::abs(v.imag()) <= tol;
}

inline VerifyReport verify_data_property(const Expr& expr, const AffineFrame& frame,
                                         const VerifyOptions& opt = {}) {
    const int n = frame.dim();
    VerifyReport report;
    DerivativeTable table(expr, n);

    std::vector<std::vector<Complex>> numeric_points;
    for (int i = 0; i <= n; ++i) numeric_points.push_back(frame.point_complex(i));

    for (int m = 0; m <= opt.max_norm; m += 2) {
        for (const auto& t : multi_indices_of_norm(n, m)) {
            const Expr& dt = table.derivative(t);
            for (int i = 0; i <= n; ++i) {
                if (opt.restrict_to_index_set && !in_index_set(IndexPair(t, i))) continue;
                VerifyEntry entry;
                entry.t = t;
                entry.i = i;
                entry.tol_used =
                    opt.scale_tol_by_factorial
                        ? opt.tol * std::max(1.0, to_double(t.factorial()))
                        : opt.tol;
                auto exact = eval_exact(dt, frame.point(i));
                if (exact) {
                    entry.exact = true;
                    entry.exact_value = *exact;
                    entry.numeric_value = Complex(exact->to_double(), 0.0);
                    if (opt.predicate == Predicate::Zero) {
                        entry.pass = exact->is_zero();
                    } else {
                        auto q = exact->as_rational();
                        entry.pass = q && is_integer(*q);
                    }
                } else {
                    entry.numeric_value = eval_numeric(dt, numeric_points[i]);
                    entry.pass = opt.predicate == Predicate::Zero
                                     ? std::abs(entry.numeric_value) <= entry.tol_used
                                     : is_near_integer(entry.numeric_value, entry.tol_used);
                }
                report.total += 1;
                if (entry.exact) report.exact_count += 1;
                if (entry.pass)
                    report.passed += 1;
                else
                    report.all_pass = false;
                report.entries.push_back(std::move(entry));
            }
        }
    }
    return report;
}

}  // namespace lidstone
