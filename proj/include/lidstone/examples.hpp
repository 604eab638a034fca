#pragma once

// The three boundary-case function families that show the interpolation
// theorem's hypotheses are sharp, built verbatim from their defining
// formulas together with the point frame s_0 = a, s_i = a + (b_i - a_i) e_i.
//
//   kind 1:  sin(pi (theta_1 + ... + theta_n)),  theta_i = (z_i - a_i)/(b_i - a_i)
//   kind 2:  sum_i sin(pi w_i) g_i(w_{i+1}^2, ..., w_n^2)  +  sin(pi w_n) g_n(w_{n-1}^2)
//            with w = theta(z)
//   kind 3:  as kind 2 with sinh(w_i - b_i)/sinh(a_i - b_i) in place of sin(pi w_i);
//            integer coefficients required for the g_i
//
// The formulas are built exactly as written (the kind 2/3 last term takes
// w_{n-1}, and for n = 1 that argument is taken to be the constant 0); which
// of the vanishing/integrality claims hold is left to the verification
// report rather than corrected here.

#include <optional>
#include <stdexcept>
#include <vector>

#include "lidstone/expr.hpp"
#include "lidstone/frame.hpp"
#include "lidstone/multipoly.hpp"

namespace lidstone {

struct ExampleSpec {
    int kind = 1;  // 1, 2 or 3
    int n = 1;
    std::vector<Rational> a;
    std::vector<Rational> b;
    // g[i-1] is g_i: for i < n a polynomial in n-i variables, g_n univariate.
    // Empty means every g_i = 1.
    std::vector<MultiPoly> g;

    void validate() const {
        if (kind < 1 || kind > 3) throw std::invalid_argument("ExampleSpec: kind must be 1, 2 or 3");
        if (n < 1) throw std::invalid_argument("ExampleSpec: dimension must be >= 1");
        if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
            throw std::invalid_argument("ExampleSpec: a and b must have length n");
        for (int i = 0; i < n; ++i)
            if (a[i] == b[i]) throw std::invalid_argument("ExampleSpec: requires a_i != b_i");
        if (kind >= 2 && !g.empty()) {
            if (static_cast<int>(g.size()) != n)
                throw std::invalid_argument("ExampleSpec: need g_1..g_n");
            for (int i = 1; i <= n; ++i) {
                int want = i < n ? n - i : 1;
                if (g[i - 1].dim() != want)
                    throw std::invalid_argument("ExampleSpec: g_" + std::to_string(i) + " must have " +
                                                std::to_string(want) + " variable(s)");
            }
        }
        if (kind == 3)
            for (const auto& gi : g)
                for (const auto& [k, c] : gi.terms())
                    if (!is_integer(c))
                        throw std::invalid_argument("ExampleSpec: kind 3 needs integer coefficients in g");
    }
};

// s_0 = a, s_i = a + (b_i - a_i) e_i.
inline AffineFrame example_frame(const ExampleSpec& spec) {
    spec.validate();
    std::vector<std::vector<Rational>> pts(spec.n + 1, spec.a);
    for (int i = 1; i <= spec.n; ++i) pts[i][i - 1] = spec.b[i - 1];
    return AffineFrame(std::move(pts));
}

namespace exampledetail {

// theta_i as an exact polynomial of z (ambient dimension n).
inline MultiPoly theta_component(const ExampleSpec& spec, int i) {
    Rational scale = Rational(1) / (spec.b[i] - spec.a[i]);
    MultiPoly t = MultiPoly::variable(spec.n, i).scaled(scale);
    t += MultiPoly::constant(spec.n, -spec.a[i] * scale);
    return t;
}

inline MultiPoly g_or_one(const ExampleSpec& spec, int i, int vars) {
    if (spec.g.empty()) return MultiPoly::constant(vars, 1);
    return spec.g[i];
}

// g_i with each argument replaced by the square of a theta component.
// `arg_vars` lists the theta indices feeding the arguments.
inline MultiPoly g_of_squared_thetas(const ExampleSpec& spec, const MultiPoly& gi,
                                     const std::vector<int>& arg_vars) {
    std::vector<MultiPoly> args;
    args.reserve(arg_vars.size());
    for (int v : arg_vars) {
        if (v < 0) {
            args.push_back(MultiPoly::zero(spec.n));  // the n = 1 reading: w_0 = 0
        } else {
            MultiPoly t = theta_component(spec, v);
            args.push_back(t * t);
        }
    }
    return compose(gi, args);
}

}  // namespace exampledetail

inline Expr build_example(const ExampleSpec& spec) {
    spec.validate();
    using namespace exampledetail;
    const int n = spec.n;

    if (spec.kind == 1) {
        MultiPoly arg(n);
        for (int i = 0; i < n; ++i) arg += theta_component(spec, i);
        return make_sin(make_product({make_pi_multiple(1), make_poly_of_vars(arg)}));
    }

    std::vector<Expr> terms;
    for (int i = 1; i <= n; ++i) {
        // Argument list of g_i: thetas i+1..n, except the last term's w_{n-1}.
        std::vector<int> arg_vars;
        if (i < n) {
            for (int v = i; v < n; ++v) arg_vars.push_back(v);
        } else {
            arg_vars.push_back(n - 2);  // -1 when n == 1
        }
        MultiPoly gi = g_or_one(spec, i - 1, static_cast<int>(arg_vars.size()));
        MultiPoly g_poly = g_of_squared_thetas(spec, gi, arg_vars);
        if (g_poly.is_zero()) continue;

        Expr trig;
        if (spec.kind == 2) {
            trig = make_sin(make_product(
                {make_pi_multiple(1), make_poly_of_vars(theta_component(spec, i - 1))}));
        } else {
            MultiPoly arg = theta_component(spec, i - 1);
            arg += MultiPoly::constant(n, -spec.b[i - 1]);
            double denom = std::sinh(to_double(spec.a[i - 1] - spec.b[i - 1]));
            trig = make_product({make_complex(Complex(1.0 / denom, 0.0)),
                                 make_sinh(make_poly_of_vars(arg))});
        }
        terms.push_back(make_product({trig, make_poly_of_vars(g_poly)}));
    }
    return make_sum(std::move(terms));
}

}  // namespace lidstone
