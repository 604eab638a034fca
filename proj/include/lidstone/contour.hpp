#pragma once

// Numeric mixed derivatives via the Cauchy integral: tensorized trapezoid
// quadrature on the torus |z_j - c_j| = radius.  For entire functions the
// error decays geometrically in the node count.  Grid values are computed
// once per center and reused for every derivative order requested there.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "lidstone/multiindex.hpp"
#include "lidstone/rational.hpp"

namespace lidstone {

using EvalFn = std::function<Complex(const std::vector<Complex>&)>;

struct ContourOptions {
    double radius = 1.0;
    int nodes = 64;  // per variable
};

class ContourExtractor {
public:
    ContourExtractor(const EvalFn& f, std::vector<Complex> center, ContourOptions opt = {})
        : n_(static_cast<int>(center.size())), opt_(opt), center_(std::move(center)) {
        if (n_ < 1) throw std::invalid_argument("ContourExtractor: empty center");
        if (opt_.nodes < 8) throw std::invalid_argument("ContourExtractor: need at least 8 nodes");
        if (opt_.radius <= 0) throw std::invalid_argument("ContourExtractor: radius must be positive");
        roots_.resize(opt_.nodes);
        for (int a = 0; a < opt_.nodes; ++a) {
            double th = 2.0 * M_PI * a / opt_.nodes;
            roots_[a] = Complex(std::cos(th), std::sin(th));
        }
        std::size_t total = 1;
        for (int j = 0; j < n_; ++j) total *= static_cast<std::size_t>(opt_.nodes);
        grid_.resize(total);
        std::vector<Complex> z(n_);
        std::vector<int> idx(n_, 0);
        for (std::size_t flat = 0; flat < total; ++flat) {
            std::size_t rem = flat;
            for (int j = 0; j < n_; ++j) {
                idx[j] = static_cast<int>(rem % opt_.nodes);
                rem /= opt_.nodes;
                z[j] = center_[j] + opt_.radius * roots_[idx[j]];
            }
            Complex v = f(z);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw std::runtime_error("ContourExtractor: non-finite value on the contour");
            grid_[flat] = v;
        }
    }

    int dim() const { return n_; }
    const ContourOptions& options() const { return opt_; }

    // (D^t f)(center), approximated as t! R^{-|t|} * mean(F * e^{-i t.theta}).
    Complex derivative(const MultiIndex& t) const {
        if (t.dim() != n_) throw std::invalid_argument("ContourExtractor::derivative: dimension mismatch");
        const int N = opt_.nodes;
        std::vector<std::vector<Complex>> twiddle(n_, std::vector<Complex>(N));
        for (int j = 0; j < n_; ++j)
            for (int a = 0; a < N; ++a)
                twiddle[j][a] = roots_[(N - (static_cast<long long>(t[j]) * a) % N) % N];
        Complex acc{0.0, 0.0};
        for (std::size_t flat = 0; flat < grid_.size(); ++flat) {
            std::size_t rem = flat;
            Complex w{1.0, 0.0};
            for (int j = 0; j < n_; ++j) {
                w *= twiddle[j][rem % N];
                rem /= N;
            }
            acc += grid_[flat] * w;
        }
        double cells = std::pow(static_cast<double>(N), n_);
        double scale = to_double(t.factorial()) * std::pow(opt_.radius, -t.norm());
        return acc * (scale / cells);
    }

private:
    int n_;
    ContourOptions opt_;
    std::vector<Complex> center_;
    std::vector<Complex> roots_;
    std::vector<Complex> grid_;
};

inline Complex contour_derivative(const EvalFn& f, const MultiIndex& t, const std::vector<Complex>& z0,
                                  double radius = 1.0, int nodes = 64) {
    return ContourExtractor(f, z0, ContourOptions{radius, nodes}).derivative(t);
}

// Node-doubling error estimate alongside the refined value.
struct ContourResult {
    Complex value;
    double error_estimate;
};

inline ContourResult contour_derivative_with_error(const EvalFn& f, const MultiIndex& t,
                                                   const std::vector<Complex>& z0, double radius = 1.0,
                                                   int nodes = 64) {
    Complex coarse = contour_derivative(f, t, z0, radius, nodes);
    Complex fine = contour_derivative(f, t, z0, radius, 2 * nodes);
    return {fine, std::abs(fine - coarse)};
}

}  // namespace lidstone
