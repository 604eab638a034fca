#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "lidstone/frame.hpp"
#include "lidstone/multipoly.hpp"

using namespace lidstone;

namespace {

MultiPoly random_poly(std::mt19937_64& rng, int n, int max_deg, int max_coef = 9,
                      double keep_prob = 0.6) {
    std::uniform_int_distribution<int> coef(-max_coef, max_coef);
    std::uniform_real_distribution<double> keep(0.0, 1.0);
    MultiPoly p(n);
    for (const auto& k : multi_indices_up_to(n, max_deg))
        if (keep(rng) < keep_prob) p.add_term(k, coef(rng));
    return p;
}

std::vector<Rational> random_rational_point(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> pt;
    for (int j = 0; j < n; ++j) pt.emplace_back(num(rng), den(rng));
    return pt;
}

}  // namespace

TEST_CASE("polynomial ring basics") {
    MultiPoly z1 = MultiPoly::variable(2, 0);
    MultiPoly z2 = MultiPoly::variable(2, 1);

    MultiPoly sum = z1 + z2;
    CHECK(sum.term_count() == 2);
    CHECK(sum.coefficient(MultiIndex({1, 0})) == 1);

    CHECK((sum * MultiPoly::zero(2)).is_zero());

    MultiPoly sq = sum * sum;
    CHECK(sq.coefficient(MultiIndex({2, 0})) == 1);
    CHECK(sq.coefficient(MultiIndex({1, 1})) == 2);
    CHECK(sq.coefficient(MultiIndex({0, 2})) == 1);

    CHECK(MultiPoly::zero(2).total_degree() == std::nullopt);
    CHECK(sq.total_degree() == 2);
    CHECK_THROWS_AS(z1 + MultiPoly::variable(3, 0), std::invalid_argument);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(101);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 1 + rep % 3;
        MultiPoly a = random_poly(rng, n, 3), b = random_poly(rng, n, 3), c = random_poly(rng, n, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("differentiation") {
    MultiPoly z = MultiPoly::variable(1, 0);
    MultiPoly z3 = z.pow(3);
    CHECK(z3.differentiate(MultiIndex({2})) == z.scaled(6));

    MultiPoly z1z2 = MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1);
    CHECK(z1z2.differentiate(MultiIndex({1, 1})) == MultiPoly::constant(2, 1));

    std::mt19937_64 rng(7);
    MultiPoly p = random_poly(rng, 2, 4);
    CHECK(p.differentiate(MultiIndex::zero(2)) == p);
}

TEST_CASE("evaluation") {
    MultiPoly p = MultiPoly::constant(2, 1) - MultiPoly::variable(2, 0) - MultiPoly::variable(2, 1);
    CHECK(p.evaluate(std::vector<Rational>{0, 0}) == 1);

    MultiPoly z1sq = MultiPoly::variable(2, 0).pow(2);
    CHECK(z1sq.evaluate(std::vector<Rational>{Rational(3, 2), Rational(0)}) == Rational(9, 4));

    SECTION("exact and numeric paths agree on random inputs") {
        std::mt19937_64 rng(42);
        for (int rep = 0; rep < 30; ++rep) {
            int n = 1 + rep % 3;
            MultiPoly p2 = random_poly(rng, n, rep < 15 ? 6 : 8);
            auto pt = random_rational_point(rng, n);
            std::vector<Complex> cpt;
            for (const auto& q : pt) cpt.emplace_back(to_double(q), 0.0);
            double exact = to_double(p2.evaluate(pt));
            double numeric = p2.evaluate(cpt).real();
            double scale = std::max(1.0, std::abs(exact));
            CHECK(std::abs(exact - numeric) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("affine precomposition") {
    SECTION("univariate line through two points") {
        AffineFrame f({{Rational(2)}, {Rational(5)}});  // a=2, b=5
        MultiPoly z = MultiPoly::variable(1, 0);
        MultiPoly composed = precompose_affine(z, f);
        MultiPoly expected = MultiPoly::constant(1, 2) + z.scaled(3);
        CHECK(composed == expected);
    }

    SECTION("canonical frame is the identity substitution") {
        std::mt19937_64 rng(5);
        MultiPoly p = random_poly(rng, 2, 4);
        CHECK(precompose_affine(p, AffineFrame::canonical(2)) == p);
    }

    SECTION("evaluation oracle at random rational points") {
        std::mt19937_64 rng(17);
        AffineFrame f({{Rational(1, 2), Rational(-1)},
                       {Rational(2), Rational(0)},
                       {Rational(1, 2), Rational(1, 3)}});
        REQUIRE(f.is_valid());
        MultiPoly p = random_poly(rng, 2, 4);
        MultiPoly composed = precompose_affine(p, f);
        auto m = f.difference_matrix();
        for (int rep = 0; rep < 20; ++rep) {
            auto w = random_rational_point(rng, 2);
            std::vector<Rational> z = f.point(0);
            for (int row = 0; row < 2; ++row)
                for (int col = 0; col < 2; ++col) z[row] += m[row][col] * w[col];
            CHECK(composed.evaluate(w) == p.evaluate(z));
        }
    }

    SECTION("inverse substitution round trip") {
        std::mt19937_64 rng(23);
        AffineFrame f({{Rational(1), Rational(1, 3)},
                       {Rational(0), Rational(2)},
                       {Rational(-1), Rational(1)}});
        REQUIRE(f.is_valid());
        for (int rep = 0; rep < 10; ++rep) {
            MultiPoly p = random_poly(rng, 2, 4);
            CHECK(inverse_precompose(precompose_affine(p, f), f) == p);
        }
        CHECK(inverse_precompose(MultiPoly::zero(2), f).is_zero());
        CHECK(inverse_precompose(random_poly(rng, 2, 3), AffineFrame::canonical(2)) ==
              precompose_affine(inverse_precompose(random_poly(rng, 2, 0), AffineFrame::canonical(2)),
                                AffineFrame::canonical(2)));
    }

    SECTION("chain rule for first derivatives, exactly") {
        std::mt19937_64 rng(31);
        AffineFrame f({{Rational(0), Rational(1)},
                       {Rational(1), Rational(1)},
                       {Rational(1), Rational(3)}});
        auto m = f.difference_matrix();
        MultiPoly p = random_poly(rng, 2, 4);
        MultiPoly composed = precompose_affine(p, f);
        for (int j = 0; j < 2; ++j) {
            MultiPoly lhs = composed.differentiate(j);
            MultiPoly rhs(2);
            for (int i = 0; i < 2; ++i)
                rhs += precompose_affine(p.differentiate(i), f).scaled(m[i][j]);
            CHECK(lhs == rhs);
        }
    }

    SECTION("singular frames are rejected") {
        AffineFrame bad({{Rational(0), Rational(0)},
                         {Rational(1), Rational(1)},
                         {Rational(2), Rational(2)}});
        CHECK_FALSE(bad.is_valid());
        CHECK_THROWS_AS(precompose_affine(MultiPoly::variable(2, 0), bad), SingularFrameError);
        CHECK_THROWS_AS(inverse_precompose(MultiPoly::variable(2, 0), bad), SingularFrameError);
    }
}

TEST_CASE("vanishing even derivative slices") {
    MultiPoly z1z2 = MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1);
    CHECK(even_slice_vanishes(z1z2, 2));

    MultiPoly zsq = MultiPoly::variable(1, 0).pow(2);
    CHECK_FALSE(even_slice_vanishes(zsq, 2));

    // Derivatives of order above the degree annihilate everything.
    std::mt19937_64 rng(3);
    MultiPoly low = random_poly(rng, 2, 3);
    CHECK(even_slice_vanishes(low, 4));

    // Odd orders are vacuous: no all-even multi-index has odd norm.
    CHECK(even_slice_vanishes(zsq, 3));

    SECTION("degree bound property on a seeded corpus") {
        std::mt19937_64 corpus_rng(listed_seed());
        for (int rep = 0; rep < 60; ++rep) {
            int n = 1 + rep % 3;
            int deg = rep % 9;
            MultiPoly p = random_poly(corpus_rng, n, deg, 9, 0.4);
            for (int order : {2, 4, 6})
                if (even_slice_vanishes(p, order) && !p.is_zero())
                    CHECK(*p.total_degree() < order + n);
        }
    }

    SECTION("monomials at the degree bound fail the predicate") {
        for (int n = 1; n <= 3; ++n)
            for (int order : {2, 4, 6})
                for (const auto& k : multi_indices_of_norm(n, order + n))
                    CHECK_FALSE(even_slice_vanishes(MultiPoly::monomial(n, k, 1), order));
    }
}
