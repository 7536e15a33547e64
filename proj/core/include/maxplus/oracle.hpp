// Copyright (c) maxplus contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "maxplus/graph.hpp"
#include "maxplus/linalg.hpp"
#include "maxplus/scaled_basis.hpp"

/// Reference constructions of generating sets for {x : A ⊗ x >= x}, used to
/// cross-check the cycle/path extremal search and to back the default
/// extremality test.
namespace maxplus::oracle {

struct Generator {
    MpVector vector;
    /// Human-readable provenance, e.g. "cycle 1 2 #2" or "path 5 4 1 2 step 1".
    std::string source;
};

struct GeneratorSet {
    std::vector<Generator> generators;

    std::size_t size() const noexcept { return generators.size(); }
    bool empty() const noexcept { return generators.empty(); }
    std::vector<MpVector> vectors() const;
    /// Scaled, deduplicated, canonical order. No extremality filtering.
    ScaledBasis scaled_set() const;
};

/// The t generators x_1..x_t attached to a nonnegative cycle, where
/// sigma.nodes is read as (i_1, ..., i_t). x_j is 0 at i_1 and puts the slack
/// ω(σ) on the arc i_j -> i_{j+1}.
std::vector<MpVector> cycle_generators(const MpMatrix& a, const graph::Cycle& sigma);

/// Generators grown backwards along a maximum J_σ-path, starting from the
/// cycle generator whose slack sits on the arc entering l_m. Returns m - 1
/// vectors, one per path node l_{m-1}, ..., l_1.
std::vector<MpVector> path_generators(const MpMatrix& a, const graph::Cycle& sigma,
                                      std::span<const MpVector> cycle_gens, const graph::JSigmaPath& path);

/// Cycle and path generators over all nonnegative elementary cycles. The
/// union generates {x : A ⊗ x >= x} (empty when λ(A) < 0).
GeneratorSet cycle_path_generators(const MpMatrix& a, const graph::EnumerationLimits& limits = {});

/// The cone {x : left ⊗ x <= right ⊗ x}, both p x d.
struct TwoSidedSystem {
    MpMatrix left;
    MpMatrix right;

    /// I ⊗ x <= A ⊗ x.
    static TwoSidedSystem supereigen(const MpMatrix& a);
};

struct DoubleDescriptionOptions {
    /// Drop members lying in the span of the others after each row.
    bool prune_redundant = false;
};

/// Tropical double description: starts from the unit vectors and processes
/// one inequality at a time, keeping satisfiers and adding
/// (left_k ⊗ w) ⊗ v ⊕ (right_k ⊗ v) ⊗ w for every satisfier v and strict
/// violator w. Members are scaled and deduplicated after each row.
GeneratorSet double_description(const TwoSidedSystem& system, const DoubleDescriptionOptions& options = {});

/// Scaled extremals of span(G): scale, dedupe, and keep the vectors not in the
/// span of the remaining ones.
ScaledBasis extremal_filter(const GeneratorSet& g);
ScaledBasis extremal_filter(std::span<const MpVector> vectors);

bool bases_equal(const ScaledBasis& a, const ScaledBasis& b);

}  // namespace maxplus::oracle
