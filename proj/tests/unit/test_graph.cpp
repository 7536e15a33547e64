// Copyright (c) maxplus contributors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "maxplus/errors.hpp"
#include "maxplus/graph.hpp"
#include "test_support.hpp"

using namespace maxplus;
using namespace maxplus::graph;
using maxplus::testing::example_matrix;
using maxplus::testing::zero_based;

namespace {

const ExtReal ninf = kNegInf;

std::vector<std::vector<Node>> node_lists(const std::vector<Cycle>& cycles) {
    std::vector<std::vector<Node>> out;
    for (const auto& c : cycles) {
        out.push_back(c.nodes);
    }
    return out;
}

std::vector<std::vector<Node>> node_lists(const std::vector<JSigmaPath>& paths) {
    std::vector<std::vector<Node>> out;
    for (const auto& p : paths) {
        out.push_back(p.nodes);
    }
    return out;
}

bool has_arc(const Digraph& d, Node i, Node j, int w) {
    return std::any_of(d.arcs().begin(), d.arcs().end(),
                       [&](const Arc& a) { return a.from == i && a.to == j && a.weight == w; });
}

}  // namespace

TEST_CASE("build_digraph", "[graph]") {
    const Digraph d = build_digraph(example_matrix());
    CHECK(d.arc_count() == 14);
    CHECK(has_arc(d, 0, 0, -3));
    CHECK(has_arc(d, 0, 1, 1));
    CHECK(has_arc(d, 2, 3, 2));
    CHECK(has_arc(d, 4, 3, 1));

    CHECK(build_digraph(MpMatrix(4, 4)).arc_count() == 0);

    const Digraph id = build_digraph(MpMatrix::identity(3));
    CHECK(id.arc_count() == 3);
    for (Node v = 0; v < 3; ++v) {
        CHECK(has_arc(id, v, v, 0));
    }
    CHECK_THROWS_AS(build_digraph(MpMatrix(2, 3)), DimensionError);
}

TEST_CASE("max_cycle_mean", "[graph]") {
    CHECK(max_cycle_mean(example_matrix()) == ExtReal(mpq_class(5, 4)));
    CHECK(max_cycle_mean(MpMatrix::identity(4)) == ExtReal(0));
    CHECK(max_cycle_mean(MpMatrix{{ninf}}).is_neg_inf());
    CHECK(max_cycle_mean(MpMatrix{{ninf, 3}, {ninf, ninf}}).is_neg_inf());
    CHECK(max_cycle_mean(MpMatrix{{ninf, 3}, {-4, ninf}}) == ExtReal(mpq_class(-1, 2)));
}

TEST_CASE("max_cycle_mean matches the brute-force cycle maximum", "[graph][property]") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<std::size_t> size(1, 6);
        const MpMatrix a = maxplus::testing::random_matrix(rng, size(rng), -5, 5, 0.5);
        REQUIRE(max_cycle_mean(a) == maxplus::testing::brute_max_cycle_mean(a));
    }
}

TEST_CASE("nonnegative cycles of the example", "[graph]") {
    const auto cycles = enumerate_nonneg_elementary_cycles(build_digraph(example_matrix()));
    const std::vector<std::vector<Node>> expected{
        zero_based({1, 2}), zero_based({1, 2, 3, 4}), zero_based({2}), zero_based({2, 3})};
    CHECK(node_lists(cycles) == expected);
    CHECK(cycles[0].weight == 2);
    CHECK(cycles[1].weight == 5);
    CHECK(cycles[2].weight == 1);
    CHECK(cycles[3].weight == 1);
}

TEST_CASE("cycle enumeration edge cases", "[graph]") {
    const auto id = enumerate_nonneg_elementary_cycles(build_digraph(MpMatrix::identity(2)));
    CHECK(node_lists(id) == std::vector<std::vector<Node>>{{0}, {1}});
    CHECK(enumerate_nonneg_elementary_cycles(build_digraph(MpMatrix{{ninf, 0}, {ninf, ninf}})).empty());
}

TEST_CASE("cycle enumeration matches permutation enumeration", "[graph][property]") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::size_t> size(1, 6);
        const MpMatrix a = maxplus::testing::random_matrix(rng, size(rng), -5, 5, 0.5);
        const Digraph d = build_digraph(a);
        const auto all = enumerate_elementary_cycles(d);
        const auto brute = maxplus::testing::brute_elementary_cycles(a);
        REQUIRE(all.size() == brute.size());
        for (std::size_t k = 0; k < all.size(); ++k) {
            REQUIRE(all[k].nodes == brute[k].nodes);
            REQUIRE(all[k].weight == brute[k].weight);
        }
        for (const auto& c : enumerate_nonneg_elementary_cycles(d)) {
            REQUIRE(c.weight >= 0);
            const auto rots = rotations(c);
            REQUIRE(rots.size() == c.length());
            for (const auto& r : rots) {
                mpq_class w = 0;
                for (std::size_t k = 0; k < r.length(); ++k) {
                    const ExtReal& arc = a(r.nodes[k], r.nodes[(k + 1) % r.length()]);
                    REQUIRE(arc.is_finite());
                    w += arc.value();
                }
                REQUIRE(w == c.weight);
            }
        }
    }
}

TEST_CASE("cycle cap raises a resource error", "[graph]") {
    MpMatrix full(5, 5);
    for (Node i = 0; i < 5; ++i) {
        for (Node j = 0; j < 5; ++j) {
            full(i, j) = ExtReal(0);
        }
    }
    CHECK_THROWS_AS(enumerate_elementary_cycles(build_digraph(full), EnumerationLimits{10}), ResourceError);
    CHECK(enumerate_elementary_cycles(build_digraph(full)).size() == 89);
}

TEST_CASE("rotations", "[graph]") {
    const Cycle s4{zero_based({2, 3, 4, 1}), 5};
    const auto r = rotations(s4);
    REQUIRE(r.size() == 4);
    CHECK(r[0].nodes == zero_based({2, 3, 4, 1}));
    CHECK(r[1].nodes == zero_based({3, 4, 1, 2}));
    CHECK(r[2].nodes == zero_based({4, 1, 2, 3}));
    CHECK(r[3].nodes == zero_based({1, 2, 3, 4}));

    CHECK(rotations(Cycle{{1}, 1}).size() == 1);

    const auto two = rotations(Cycle{{0, 1}, 2});
    REQUIRE(two.size() == 2);
    CHECK(two[1].nodes == std::vector<Node>{1, 0});
}

TEST_CASE("reverse_reachable", "[graph]") {
    const Digraph d = build_digraph(example_matrix());
    CHECK(reverse_reachable(d, 4) == zero_based({1, 2, 3, 4, 5}));

    const Digraph isolated = build_digraph(MpMatrix{{ninf, ninf}, {ninf, 0}});
    CHECK(reverse_reachable(isolated, 0).empty());
    CHECK(reverse_reachable(isolated, 1) == std::vector<Node>{1});

    // Every path into 5 enters through 4; forbidding 4 as an intermediate
    // leaves 4 as the only source.
    std::vector<bool> allowed{true, true, true, false, true};
    CHECK(reverse_reachable(d, 4, allowed) == zero_based({4}));
}

TEST_CASE("maximum J_sigma-paths of the example loop", "[graph]") {
    const Digraph d = build_digraph(example_matrix());
    const Cycle loop{{1}, 1};
    const auto paths = enumerate_max_jsigma_paths(d, loop);
    std::vector<std::vector<Node>> expected{
        zero_based({5, 3, 4, 1, 2}), zero_based({5, 4, 1, 2}), zero_based({3, 4, 5, 1, 2}),
        zero_based({5, 4, 3, 2}),    zero_based({4, 5, 3, 2}), zero_based({3, 4, 5, 2}),
    };
    std::sort(expected.begin(), expected.end());
    CHECK(node_lists(paths) == expected);
    for (const auto& p : paths) {
        CHECK(p.endnode_position == 0);
    }
}

TEST_CASE("maximum J_sigma-path edge cases", "[graph]") {
    const Digraph id = build_digraph(MpMatrix::identity(3));
    for (Node v = 0; v < 3; ++v) {
        CHECK(enumerate_max_jsigma_paths(id, Cycle{{v}, 0}).empty());
    }

    const Digraph small = build_digraph(MpMatrix{{ninf, ninf}, {0, 0}});
    // Arc 2 -> 1 only, so the loop at 2 has no incoming path; the loop at 2
    // in the transposed graph has path (1, 2).
    CHECK(enumerate_max_jsigma_paths(small, Cycle{{1}, 0}).empty());
    const Digraph transposed = build_digraph(MpMatrix{{ninf, 0}, {ninf, 0}});
    const auto p = enumerate_max_jsigma_paths(transposed, Cycle{{1}, 0});
    REQUIRE(p.size() == 1);
    CHECK(p[0].nodes == std::vector<Node>{0, 1});
}

TEST_CASE("J_sigma-path enumeration matches the literal checker", "[graph][property]") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        std::uniform_int_distribution<std::size_t> size(2, 6);
        const MpMatrix a = maxplus::testing::random_matrix(rng, size(rng), -5, 5, 0.5);
        const Digraph d = build_digraph(a);
        for (const auto& c : enumerate_nonneg_elementary_cycles(d)) {
            const auto paths = enumerate_max_jsigma_paths(d, c);
            for (const auto& p : paths) {
                REQUIRE(maxplus::testing::is_max_jsigma_path(a, c.nodes, p.nodes));
                REQUIRE(c.nodes[p.endnode_position] == p.nodes.back());
            }
            REQUIRE(node_lists(paths) == maxplus::testing::brute_max_jsigma_paths(a, c.nodes));
        }
    }
}
