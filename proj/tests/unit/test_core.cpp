// Copyright (c) maxplus contributors.
// SPDX-License-Identifier: Apache-2.0
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "maxplus/errors.hpp"
#include "maxplus/linalg.hpp"
#include "test_support.hpp"

using namespace maxplus;
using maxplus::testing::example_basis;
using maxplus::testing::example_matrix;

namespace {
const ExtReal ninf = kNegInf;
}

TEST_CASE("ExtReal ordering and arithmetic", "[core]") {
    CHECK(ninf < ExtReal(-1000));
    CHECK(ExtReal(mpq_class(1, 2)) < ExtReal(1));
    CHECK(ninf == ExtReal::neg_inf());
    CHECK(oplus(ninf, ExtReal(3)) == ExtReal(3));
    CHECK(otimes(ninf, ExtReal(3)).is_neg_inf());
    CHECK(otimes(ExtReal(0), ExtReal(mpq_class(5, 4))) == ExtReal(mpq_class(5, 4)));
    CHECK(ExtReal(mpq_class(10, 4)).to_string() == "5/2");
    CHECK(ExtReal(-7).to_string() == "-7");
    CHECK(ninf.to_string() == "-inf");
    CHECK_THROWS_AS(ninf.value(), ImproperVectorError);
}

TEST_CASE("semiring laws hold on random scalars", "[core][property]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const ExtReal a = maxplus::testing::random_rational(rng, -6, 6, 0.8);
        const ExtReal b = maxplus::testing::random_rational(rng, -6, 6, 0.8);
        const ExtReal c = maxplus::testing::random_rational(rng, -6, 6, 0.8);
        INFO(a << " " << b << " " << c);
        REQUIRE(oplus(oplus(a, b), c) == oplus(a, oplus(b, c)));
        REQUIRE(oplus(a, b) == oplus(b, a));
        REQUIRE(oplus(a, a) == a);
        REQUIRE(otimes(otimes(a, b), c) == otimes(a, otimes(b, c)));
        REQUIRE(otimes(a, b) == otimes(b, a));
        REQUIRE(otimes(a, oplus(b, c)) == oplus(otimes(a, b), otimes(a, c)));
        REQUIRE(oplus(ninf, a) == a);
        REQUIRE(otimes(ninf, a).is_neg_inf());
        REQUIRE(otimes(ExtReal(0), a) == a);
    }
}

TEST_CASE("vec_join", "[core]") {
    CHECK(vec_join({1, 0, ninf, ninf, ninf}, {ninf, ninf, ninf, 2, ninf}) == MpVector{1, 0, ninf, 2, ninf});
    const MpVector x{3, ninf, -1};
    CHECK(vec_join(x, MpVector::neg_inf(3)) == x);
    CHECK(vec_join({0, -1}, {-1, 0}) == MpVector{0, 0});
    CHECK_THROWS_AS(vec_join({0, 1}, {0}), DimensionError);
}

TEST_CASE("vec_scale", "[core]") {
    CHECK(vec_scale(2, {0, ninf}) == MpVector{2, ninf});
    const MpVector x{1, ninf, mpq_class(3, 7)};
    CHECK(vec_scale(0, x) == x);
    CHECK(vec_scale(-4, {1, 0, 4, 2, ninf}) == MpVector{-3, -4, 0, -2, ninf});
    CHECK(vec_scale(ninf, x) == MpVector::neg_inf(3));
}

TEST_CASE("mat_vec and row_apply", "[core]") {
    const MpMatrix a = example_matrix();
    CHECK(mat_vec(a, MpVector::unit(5, 1)) == MpVector{1, 1, 0, ninf, -2});
    CHECK(mat_vec(a, MpVector::neg_inf(5)) == MpVector::neg_inf(5));
    // Frozen from naive_mat_vec: (1, 2, 4, 2, 3); entry 3 is max(0+0, 2+2).
    const MpVector y = mat_vec(a, {1, 0, ninf, 2, ninf});
    CHECK(y == MpVector{1, 2, 4, 2, 3});
    CHECK(y[2] == ExtReal(4));

    CHECK(row_apply(a, 0, MpVector::unit(5, 1)) == ExtReal(1));
    CHECK(row_apply(a, 3, MpVector::neg_inf(5)).is_neg_inf());
    CHECK(row_apply(a, 4, {1, 0, 4, 2, ninf}) == ExtReal(3));
    CHECK_THROWS_AS(row_apply(a, 5, MpVector::unit(5, 0)), IndexError);
    CHECK_THROWS_AS(mat_vec(a, MpVector::unit(4, 0)), DimensionError);
}

TEST_CASE("mat_vec agrees with the naive double loop", "[core][property]") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const MpMatrix a = maxplus::testing::random_matrix(rng, 6, -5, 5, 0.5);
        const MpVector x = maxplus::testing::random_vector(rng, 6, -5, 5, 0.6);
        REQUIRE(mat_vec(a, x) == maxplus::testing::naive_mat_vec(a, x));
    }
}

TEST_CASE("norm_and_scale", "[core]") {
    auto [n1, v1] = norm_and_scale({1, 0, 4, 2, ninf});
    CHECK(n1 == ExtReal(4));
    CHECK(v1 == MpVector{-3, -4, 0, -2, ninf});

    auto [n2, v2] = norm_and_scale(MpVector::unit(5, 1));
    CHECK(n2 == ExtReal(0));
    CHECK(v2 == MpVector::unit(5, 1));

    auto [n3, v3] = norm_and_scale({1, 0, ninf, 2, 3});
    CHECK(n3 == ExtReal(3));
    CHECK(v3 == MpVector{-2, -3, ninf, -1, 0});

    CHECK_THROWS_AS(norm_and_scale(MpVector::neg_inf(3)), ImproperVectorError);
}

TEST_CASE("scaling is idempotent and yields norm zero", "[core][property]") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        MpVector x = maxplus::testing::random_vector(rng, 5, -9, 9, 0.5);
        if (!x.is_proper()) {
            continue;
        }
        const MpVector s = scaled(x);
        REQUIRE(s.norm() == ExtReal(0));
        REQUIRE(scaled(s) == s);
    }
}

TEST_CASE("residual", "[core]") {
    CHECK(residual({1, 0, ninf, 2, ninf}, {1, 0, ninf, ninf, ninf}) == ExtReal(0));
    CHECK(residual({0, -1}, {-1, 0}) == ExtReal(-1));
    CHECK(residual(MpVector::unit(2, 0), {0, 0}).is_neg_inf());
    CHECK_THROWS_AS(residual({0, 0}, MpVector::neg_inf(2)), ImproperVectorError);
}

TEST_CASE("residual is the largest feasible coefficient", "[core][property]") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        const MpVector v = maxplus::testing::random_vector(rng, 5, -6, 6, 0.7);
        const MpVector w = maxplus::testing::random_vector(rng, 5, -6, 6, 0.5);
        if (!w.is_proper()) {
            continue;
        }
        const ExtReal alpha = residual(v, w);
        REQUIRE(dominated(vec_scale(alpha, w), v));
        if (alpha.is_finite()) {
            REQUIRE_FALSE(dominated(vec_scale(otimes(alpha, 1), w), v));
        }
    }
}

TEST_CASE("in_span", "[core]") {
    const std::vector<MpVector> w{{0, -1}, {-1, 0}};
    CHECK(in_span({0, 0}, w));
    const std::vector<MpVector> one{{0, -1, ninf}};
    CHECK_FALSE(in_span(MpVector::unit(3, 1), one));
    CHECK_FALSE(in_span({0, 0}, std::vector<MpVector>{}));

    // No member of the example basis is in the span of the other nine.
    const auto basis = example_basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<MpVector> rest;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (j != i) {
                rest.push_back(basis[j]);
            }
        }
        INFO(basis[i]);
        CHECK_FALSE(in_span(basis[i], rest));
    }
}

TEST_CASE("in_span is monotone and reflexive", "[core][property]") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<MpVector> small;
        for (int k = 0; k < 3; ++k) {
            MpVector g = maxplus::testing::random_vector(rng, 4, -3, 3, 0.6);
            if (g.is_proper()) {
                small.push_back(g);
            }
        }
        std::vector<MpVector> large = small;
        for (int k = 0; k < 3; ++k) {
            MpVector g = maxplus::testing::random_vector(rng, 4, -3, 3, 0.6);
            if (g.is_proper()) {
                large.push_back(g);
            }
        }
        // A random member of span(small).
        MpVector v = MpVector::neg_inf(4);
        for (const auto& g : small) {
            v = vec_join(v, vec_scale(maxplus::testing::random_scalar(rng, -2, 2, 0.7), g));
        }
        if (!v.is_proper()) {
            continue;
        }
        REQUIRE(in_span(v, small));
        REQUIRE(in_span(v, large));
        const std::vector<MpVector> self{v};
        REQUIRE(in_span(v, self));
    }
}
