#pragma once

// Numeric growth analysis for entire functions: sup norms on polydiscs
// (distinguished-boundary sampling), order and directional exponential type
// estimates, the quantitative growth condition with its tri-state verdict,
// factorial/Cauchy bounds, the threshold order beyond which derivative
// bounds force integer data to vanish, and a combined diagnostic run.
//
// Everything here is an estimate from finite data and is labeled as such;
// exact certificates come only from the polynomial side of the library.

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lidstone/fixture.hpp"
#include "lidstone/frame.hpp"
#include "lidstone/multiindex.hpp"
#include "lidstone/multipoly.hpp"

namespace lidstone {

enum class Verdict { Satisfied, Violated, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Satisfied:
            return "satisfied";
        case Verdict::Violated:
            return "violated";
        default:
            return "inconclusive";
    }
}

// ---- factorial bounds ------------------------------------------------------

struct StirlingBounds {
    double lower = 0, upper = 0;
    double log_lower = 0, log_upper = 0;  // log-space values, safe for large N
};

// N^N e^{-N} sqrt(2 pi N) < N! < N^N e^{-N} sqrt(2 pi N) e^{1/(12N)}, N >= 1.
inline StirlingBounds stirling_bounds(int n) {
    if (n < 1) throw std::invalid_argument("stirling_bounds: N must be >= 1");
    StirlingBounds b;
    b.log_lower = n * std::log(static_cast<double>(n)) - n + 0.5 * std::log(2.0 * M_PI * n);
    b.log_upper = b.log_lower + 1.0 / (12.0 * n);
    b.lower = std::exp(b.log_lower);
    b.upper = std::exp(b.log_upper);
    return b;
}

// Upper bound t! M / r^|t| for |(D^t f)(z0)|, valid whenever M >= |f|_{r+|z0|}.
inline double cauchy_derivative_bound(const MultiIndex& t, double z0_norm, double r, double m) {
    if (r <= 0) throw std::invalid_argument("cauchy_derivative_bound: radius must be positive");
    if (m < 0) throw std::invalid_argument("cauchy_derivative_bound: negative sup-norm bound");
    (void)z0_norm;  // part of the contract on m, not of the formula
    return to_double(t.factorial()) * m * std::pow(r, -t.norm());
}

// ---- threshold order -------------------------------------------------------

struct GrowthParams {
    double a = 1.0;    // polydisc radius containing the frame points
    double eta = 0.1;  // slack in (0, 1)

    void validate() const {
        if (a < 0) throw std::invalid_argument("GrowthParams: A must be >= 0");
        if (eta <= 0 || eta >= 1) throw std::invalid_argument("GrowthParams: eta must be in (0,1)");
    }
};

// (1 - eta) e^{-A + 1/(12T)} (1 - A/T)^{-T}: once this falls below 1 the
// derivative bound |D^t f|_A < 1 holds for all orders |t| = T.
inline double threshold_bound_value(const GrowthParams& p, int t) {
    return (1.0 - p.eta) * std::exp(-p.a + 1.0 / (12.0 * t)) * std::pow(1.0 - p.a / t, -t);
}

// Smallest integer T0 > A with the bound < 1 from T0 on.  The bound
// decreases to 1 - eta < 1, so T0 exists; a safety window is still scanned.
inline int polya_threshold(const GrowthParams& p) {
    p.validate();
    int t = static_cast<int>(std::floor(p.a)) + 1;
    while (threshold_bound_value(p, t) >= 1.0) {
        ++t;
        if (t > 100000000) throw std::runtime_error("polya_threshold: no threshold below 1e8");
    }
    int window = std::max(64, 10 * t);
    for (int s = t; s <= t + window; ++s)
        if (threshold_bound_value(p, s) >= 1.0)
            throw std::runtime_error("polya_threshold: bound not monotone past candidate");
    return t;
}

// ---- sup norms -------------------------------------------------------------

struct SupNormEstimate {
    double value = 0;             // max |f| over the sampled torus
    double refinement_delta = 0;  // change from the previous (halved) grid
    int grid = 0;
};

// Lower estimate of sup |f| on |z_j| = r via the distinguished boundary,
// where the maximum modulus lives.  Estimates are monotone in the grid for
// nested (power of two) grids.
inline SupNormEstimate sup_norm(const EvalFn& f, int n, double r, int grid = 128) {
    if (grid < 8) throw std::invalid_argument("sup_norm: need at least 8 grid points");
    if (r <= 0) throw std::invalid_argument("sup_norm: radius must be positive");
    auto scan = [&](int g) {
        double best = 0;
        std::vector<Complex> z(n);
        std::vector<int> idx(n, 0);
        while (true) {
            for (int j = 0; j < n; ++j) {
                double th = 2.0 * M_PI * idx[j] / g;
                z[j] = Complex(r * std::cos(th), r * std::sin(th));
            }
            Complex v = f(z);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw std::runtime_error("sup_norm: non-finite value");
            best = std::max(best, std::abs(v));
            int j = 0;
            while (j < n && ++idx[j] == g) idx[j++] = 0;
            if (j == n) break;
        }
        return best;
    };
    SupNormEstimate est;
    est.grid = grid;
    est.value = scan(grid);
    est.refinement_delta = est.value - scan(std::max(8, grid / 2));
    return est;
}

// Doubles the grid until the relative change drops below `rel_tol`.
inline SupNormEstimate sup_norm_refined(const EvalFn& f, int n, double r, int grid = 128,
                                        double rel_tol = 1e-4, int max_grid = 2048) {
    SupNormEstimate est = sup_norm(f, n, r, grid);
    while (est.grid * 2 <= max_grid) {
        SupNormEstimate next = sup_norm(f, n, r, est.grid * 2);
        bool settled = next.value <= est.value * (1.0 + rel_tol);
        est = next;
        if (settled) break;
    }
    return est;
}

inline std::vector<double> geometric_grid(double r_min, double r_max, int points) {
    if (points < 2 || r_min <= 0 || r_max <= r_min)
        throw std::invalid_argument("geometric_grid: bad parameters");
    std::vector<double> g(points);
    double ratio = std::pow(r_max / r_min, 1.0 / (points - 1));
    double r = r_min;
    for (int i = 0; i < points; ++i, r *= ratio) g[i] = r;
    return g;
}

// ---- directional type ------------------------------------------------------

struct TypeEstimate {
    double type = 0;        // max tail-window slope of log sup vs r
    double type_window_min = 0;  // min tail-window slope
    double order = 0;       // tail slope of log log sup vs log r
    double window_spread = 0;
    std::vector<double> log_sup;  // per radius, -inf when the restriction vanishes
};

namespace growthdetail {

inline double window_slope(const std::vector<double>& x, const std::vector<double>& y, int from,
                           int len) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int used = 0;
    for (int i = from; i < from + len; ++i) {
        if (!std::isfinite(y[i])) continue;
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
        ++used;
    }
    if (used < 2) return 0;
    double denom = used * sxx - sx * sx;
    return denom == 0 ? 0 : (used * sxy - sx * sy) / denom;
}

// Max of least-squares slopes over sliding windows covering the tail half;
// a finite-data stand-in for the limsup slope.
struct TailSlopes {
    double max_slope = 0;
    double min_slope = 0;
    double spread = 0;
};

inline TailSlopes tail_slopes(const std::vector<double>& x, const std::vector<double>& y) {
    const int total = static_cast<int>(x.size());
    const int tail_start = total / 2;
    const int tail_len = total - tail_start;
    const int window = std::max(4, tail_len / 2);
    TailSlopes out;
    double mn = 0, mx = 0;
    bool first = true;
    for (int from = tail_start; from + window <= total; ++from) {
        double s = window_slope(x, y, from, window);
        if (first) {
            mn = mx = s;
            first = false;
        } else {
            mn = std::min(mn, s);
            mx = std::max(mx, s);
        }
    }
    out.max_slope = mx;
    out.min_slope = mn;
    out.spread = std::abs(mx) > 0 ? (mx - mn) / std::abs(mx) : 0;
    return out;
}

}  // namespace growthdetail

// Type/order of the single-variable restriction z -> f(z w).  The scalar-line
// reading applies literally: the direction vector's length matters.
inline TypeEstimate estimate_directional_type(const EvalFn& f, int n, const std::vector<Complex>& w,
                                              const std::vector<double>& r_grid, int circle_grid = 128) {
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("estimate_directional_type: direction dimension mismatch");
    if (r_grid.size() < 4) throw std::invalid_argument("estimate_directional_type: need >= 4 radii");
    EvalFn restricted = [&f, &w, n](const std::vector<Complex>& zeta) {
        std::vector<Complex> z(n);
        for (int j = 0; j < n; ++j) z[j] = zeta[0] * w[j];
        return f(z);
    };
    TypeEstimate est;
    est.log_sup.reserve(r_grid.size());
    bool any_nonzero = false;
    for (double r : r_grid) {
        double s = sup_norm_refined(restricted, 1, r, circle_grid).value;
        any_nonzero = any_nonzero || s > 0;
        est.log_sup.push_back(s > 0 ? std::log(s) : -std::numeric_limits<double>::infinity());
    }
    if (!any_nonzero) return est;  // vanishing restriction: type 0, order 0
    auto ts = growthdetail::tail_slopes(r_grid, est.log_sup);
    est.type = ts.max_slope;
    est.type_window_min = ts.min_slope;
    est.window_spread = ts.spread;
    // Order: slope of log(log sup) against log r where log sup > 0.
    std::vector<double> log_r(r_grid.size()), loglog(r_grid.size());
    for (std::size_t i = 0; i < r_grid.size(); ++i) {
        log_r[i] = std::log(r_grid[i]);
        loglog[i] = est.log_sup[i] > 0 ? std::log(est.log_sup[i])
                                       : -std::numeric_limits<double>::infinity();
    }
    est.order = growthdetail::tail_slopes(log_r, loglog).max_slope;
    return est;
}

// ---- the quantitative growth condition --------------------------------------

struct GrowthConditionResult {
    Verdict verdict = Verdict::Inconclusive;
    double tail_max_log = 0;    // max over tail of log(e^{-r} sqrt(r) |f|_r)
    double threshold_log = 0;   // log((2 pi)^{-1/2} e^{-max|s_i|})
    double margin_log = 0;      // threshold - tail max (positive is good)
    std::vector<double> lhs_log;  // per radius, log scale
    std::vector<double> sup_norms;
};

// limsup e^{-r} sqrt(r) |f|_r  vs  (2 pi)^{-1/2} e^{-max_i |s_i|}, evaluated
// along the radius grid in log space.  Inconclusive when the tail is still
// rising while below the threshold.
inline GrowthConditionResult check_growth_condition(const EvalFn& f, int n, double max_point_norm,
                                                    const std::vector<double>& r_grid,
                                                    int grid = 128) {
    GrowthConditionResult res;
    res.threshold_log = -0.5 * std::log(2.0 * M_PI) - max_point_norm;
    for (double r : r_grid) {
        double s = sup_norm(f, n, r, grid).value;
        res.sup_norms.push_back(s);
        double lhs = s > 0 ? std::log(s) - r + 0.5 * std::log(r)
                           : -std::numeric_limits<double>::infinity();
        res.lhs_log.push_back(lhs);
    }
    const int total = static_cast<int>(r_grid.size());
    const int tail_start = total / 2;
    double tail_max = -std::numeric_limits<double>::infinity();
    for (int i = tail_start; i < total; ++i) tail_max = std::max(tail_max, res.lhs_log[i]);
    const int mid = tail_start + (total - tail_start) / 2;
    double first_half = -std::numeric_limits<double>::infinity();
    double second_half = -std::numeric_limits<double>::infinity();
    for (int i = tail_start; i < mid; ++i) first_half = std::max(first_half, res.lhs_log[i]);
    for (int i = mid; i < total; ++i) second_half = std::max(second_half, res.lhs_log[i]);
    res.tail_max_log = tail_max;
    res.margin_log = res.threshold_log - tail_max;
    bool rising = second_half > first_half + std::log(1.1);
    if (tail_max >= res.threshold_log)
        res.verdict = Verdict::Violated;  // a rising tail can only get worse
    else
        res.verdict = rising ? Verdict::Inconclusive : Verdict::Satisfied;
    return res;
}

// ---- exception scan ---------------------------------------------------------

struct ScanHit {
    IndexPair pair;
    Complex value;
    bool exact = false;
};

// Candidate nonzero integer data: admissible pairs below the threshold order
// whose derivative magnitude reaches 1 - tol.  Above the threshold the
// derivative bound certifies |D^t f| < 1, so integer values there are zero.
inline std::vector<ScanHit> finite_exception_scan(const Fixture& fixture, int threshold_order,
                                                  double tol = 1e-9) {
    if (threshold_order < 0) throw std::invalid_argument("finite_exception_scan: negative threshold");
    std::vector<ScanHit> hits;
    if (threshold_order == 0) return hits;
    for (const auto& pair : enumerate_index_set(fixture.n, threshold_order - 1)) {
        ScanHit hit;
        hit.pair = pair;
        if (auto q = fixture.exact_derivative(pair)) {
            hit.exact = true;
            hit.value = Complex(to_double(*q), 0.0);
        } else {
            hit.value = fixture.numeric_derivative(pair);
        }
        if (std::abs(hit.value) >= 1.0 - tol) hits.push_back(std::move(hit));
    }
    return hits;
}

// ---- combined diagnostics ---------------------------------------------------

struct DirectionalTypeReport {
    int direction = 1;  // i for s_i - s_0
    TypeEstimate estimate;
    bool at_pi_boundary = false;  // within 5% of pi
};

struct DegreeCertificate {
    int degree = 0;
    int bound = 0;  // threshold order + dimension
    bool pass = false;
};

struct GrowthDiagnostics {
    std::vector<double> r_grid;
    GrowthConditionResult growth_condition;
    std::vector<DirectionalTypeReport> directional_types;
    Verdict type_condition = Verdict::Inconclusive;  // all directional types < pi
    double order_estimate = 0;
    GrowthParams params;
    int threshold_order = 0;
    std::vector<ScanHit> exception_scan;
    std::optional<DegreeCertificate> degree_certificate;
    std::vector<std::string> notes;
};

struct DiagnosticsOptions {
    std::vector<double> r_grid;  // default: geometric 1..200 with 40 points
    int sup_grid = 128;
    double eta = 0.1;
    double scan_tol = 1e-9;
    double pi_band = 0.05;
};

inline GrowthDiagnostics run_growth_diagnostics(const Fixture& fixture,
                                                DiagnosticsOptions opt = {}) {
    GrowthDiagnostics diag;
    diag.r_grid = opt.r_grid.empty() ? geometric_grid(1.0, 200.0, 40) : opt.r_grid;
    const int n = fixture.n;
    double a = fixture.frame.max_point_norm();

    diag.growth_condition = check_growth_condition(fixture.eval, n, a, diag.r_grid, opt.sup_grid);

    // Per direction: satisfied when every window slope is safely below pi,
    // violated when every one is safely above, inconclusive when the window
    // estimates reach into the pi decision band.
    bool any_boundary = false, all_below = true, all_above = true;
    double max_order = 0;
    const double lo = M_PI * (1.0 - opt.pi_band), hi = M_PI * (1.0 + opt.pi_band);
    for (int i = 1; i <= n; ++i) {
        std::vector<Complex> w(n);
        for (int j = 0; j < n; ++j)
            w[j] = Complex(to_double(fixture.frame.point(i)[j] - fixture.frame.point(0)[j]), 0.0);
        DirectionalTypeReport rep;
        rep.direction = i;
        rep.estimate = estimate_directional_type(fixture.eval, n, w, diag.r_grid, opt.sup_grid);
        rep.at_pi_boundary = std::abs(rep.estimate.type - M_PI) <= opt.pi_band * M_PI;
        any_boundary = any_boundary || rep.at_pi_boundary;
        all_below = all_below && rep.estimate.type < lo;
        all_above = all_above && rep.estimate.type_window_min > hi;
        max_order = std::max(max_order, rep.estimate.order);
        diag.directional_types.push_back(std::move(rep));
    }
    diag.order_estimate = max_order;
    if (all_below)
        diag.type_condition = Verdict::Satisfied;
    else if (all_above)
        diag.type_condition = Verdict::Violated;
    else
        diag.type_condition = Verdict::Inconclusive;
    if (any_boundary)
        diag.notes.push_back(
            "directional type at the pi boundary: the polynomial conclusion is not forced");

    diag.params = GrowthParams{a, opt.eta};
    diag.threshold_order = polya_threshold(diag.params);
    diag.exception_scan = finite_exception_scan(fixture, diag.threshold_order, opt.scan_tol);

    if (fixture.poly) {
        DegreeCertificate cert;
        cert.degree = fixture.poly->total_degree().value_or(0);
        cert.bound = diag.threshold_order + n;
        cert.pass = cert.degree < cert.bound;
        diag.degree_certificate = cert;
    }
    if (diag.growth_condition.verdict == Verdict::Violated)
        diag.notes.push_back("growth condition violated: finiteness of nonzero data is not guaranteed");
    return diag;
}

}  // namespace lidstone
