#pragma once

// Interpolation point frames s_0, ..., s_n and the affine change of
// coordinates z = s_0 + sum_i (s_i - s_0) w_i that carries them to the
// canonical points e_0 = 0, e_1, ..., e_n.

#include <optional>
#include <stdexcept>
#include <vector>

#include "lidstone/linalg.hpp"
#include "lidstone/multipoly.hpp"

namespace lidstone {

struct SingularFrameError : std::runtime_error {
    SingularFrameError() : std::runtime_error("frame is singular: point differences do not span") {}
};

class AffineFrame {
public:
    // points: n+1 vectors of length n.
    explicit AffineFrame(std::vector<std::vector<Rational>> points) : points_(std::move(points)) {
        if (points_.empty()) throw std::invalid_argument("AffineFrame: no points");
        n_ = static_cast<int>(points_.size()) - 1;
        if (n_ < 1) throw std::invalid_argument("AffineFrame: need at least 2 points");
        for (const auto& p : points_)
            if (static_cast<int>(p.size()) != n_)
                throw std::invalid_argument("AffineFrame: point dimension mismatch");
    }

    // e_0 = 0 together with the canonical basis vectors.
    static AffineFrame canonical(int n) {
        std::vector<std::vector<Rational>> pts(n + 1, std::vector<Rational>(n, 0));
        for (int i = 1; i <= n; ++i) pts[i][i - 1] = 1;
        return AffineFrame(std::move(pts));
    }

    int dim() const { return n_; }
    const std::vector<std::vector<Rational>>& points() const { return points_; }
    const std::vector<Rational>& point(int i) const { return points_.at(i); }

    bool is_canonical() const {
        for (int j = 0; j < n_; ++j)
            if (points_[0][j] != 0) return false;
        for (int i = 1; i <= n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (points_[i][j] != Rational(i - 1 == j ? 1 : 0)) return false;
        return true;
    }

    // Column i is s_{i+1} - s_0.
    RatMatrix difference_matrix() const {
        RatMatrix m(n_, RatVector(n_, 0));
        for (int i = 1; i <= n_; ++i)
            for (int j = 0; j < n_; ++j) m[j][i - 1] = points_[i][j] - points_[0][j];
        return m;
    }

    // The frame invariant: the n difference vectors form a basis (exact rank).
    bool is_valid() const { return rational_rank(difference_matrix()) == n_; }

    std::vector<Complex> point_complex(int i) const {
        std::vector<Complex> out;
        out.reserve(n_);
        for (const auto& q : point(i)) out.emplace_back(to_double(q), 0.0);
        return out;
    }

    // max_i |s_i| in the sup norm on coordinates.
    double max_point_norm() const {
        double m = 0;
        for (const auto& p : points_)
            for (const auto& q : p) m = std::max(m, std::abs(to_double(q)));
        return m;
    }

    friend bool operator==(const AffineFrame& a, const AffineFrame& b) { return a.points_ == b.points_; }

private:
    int n_;
    std::vector<std::vector<Rational>> points_;
};

// P~(w) = P(s_0 + sum_i (s_i - s_0) w_i), exact.
inline MultiPoly precompose_affine(const MultiPoly& p, const AffineFrame& frame) {
    if (p.dim() != frame.dim()) throw std::invalid_argument("precompose_affine: dimension mismatch");
    if (!frame.is_valid()) throw SingularFrameError();
    return p.substitute_affine(frame.point(0), frame.difference_matrix());
}

// Inverse substitution: recovers P from P~ = precompose_affine(P, frame).
inline MultiPoly inverse_precompose(const MultiPoly& p, const AffineFrame& frame) {
    if (p.dim() != frame.dim()) throw std::invalid_argument("inverse_precompose: dimension mismatch");
    auto inv = rational_inverse(frame.difference_matrix());
    if (!inv) throw SingularFrameError();
    // w = M^{-1}(z - s_0)
    RatVector origin = mat_vec(*inv, frame.point(0));
    for (auto& v : origin) v = -v;
    return p.substitute_affine(origin, *inv);
}

}  // namespace lidstone
