#pragma once

// Default g polynomials for the kind 2/3 families: small integer choices
// whose verification reports show both the vanishing/integrality claims and
// a sharpness witness outside the admissible set.
//
//   g_i = 1 + u_1 + ... + u_{n-i}   (i < n)
//   g_n = u                          (identity; constant 1 when n = 1)

#include "lidstone/examples.hpp"

namespace lidstone {

inline std::vector<MultiPoly> default_example_polynomials(int n) {
    if (n < 1) throw std::invalid_argument("default_example_polynomials: dimension must be >= 1");
    std::vector<MultiPoly> g;
    for (int i = 1; i < n; ++i) {
        int vars = n - i;
        MultiPoly gi = MultiPoly::constant(vars, 1);
        for (int j = 0; j < vars; ++j) gi += MultiPoly::variable(vars, j);
        g.push_back(std::move(gi));
    }
    if (n == 1)
        g.push_back(MultiPoly::constant(1, 1));
    else
        g.push_back(MultiPoly::variable(1, 0));
    return g;
}

}  // namespace lidstone
