// Copyright (c) maxplus contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "maxplus/ext_real.hpp"
#include "maxplus/linalg.hpp"

namespace maxplus::graph {

using Node = std::size_t;

struct Arc {
    Node from;
    Node to;
    mpq_class weight;
};

/// Weighted digraph of a square matrix: arc i -> j iff a_ij is finite.
class Digraph {
public:
    explicit Digraph(const MpMatrix& a);

    std::size_t node_count() const noexcept { return n_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    bool has_arc(Node from, Node to) const { return weights_(from, to).is_finite(); }
    const ExtReal& weight(Node from, Node to) const { return weights_(from, to); }

    const std::vector<Node>& successors(Node v) const { return out_[v]; }
    const std::vector<Node>& predecessors(Node v) const { return in_[v]; }

private:
    std::size_t n_;
    MpMatrix weights_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Node>> out_;
    std::vector<std::vector<Node>> in_;
};

/// Elementary cycle (i_1, ..., i_t) closed by the arc i_t -> i_1.
/// A loop has t = 1.
struct Cycle {
    std::vector<Node> nodes;
    mpq_class weight;

    std::size_t length() const noexcept { return nodes.size(); }
    bool contains(Node v) const;
    /// Position of v in `nodes`, if present.
    std::optional<std::size_t> position_of(Node v) const;
    /// J_σ, ascending.
    std::vector<Node> node_set() const;

    friend bool operator==(const Cycle& a, const Cycle& b) { return a.nodes == b.nodes && a.weight == b.weight; }
};

/// Maximum J_σ-path (l_1, ..., l_m): only l_m lies on the cycle, and no node
/// outside the cycle and the path can feed into l_1 while avoiding both.
struct JSigmaPath {
    std::vector<Node> nodes;
    /// Index k into the cycle's node list with cycle.nodes[k] == nodes.back().
    std::size_t endnode_position = 0;

    friend bool operator==(const JSigmaPath&, const JSigmaPath&) = default;
};

struct EnumerationLimits {
    /// Elementary cycles visited (before the weight filter); also caps the
    /// number of maximum J_σ-paths per cycle.
    std::size_t max_cycles = 1'000'000;
};

Digraph build_digraph(const MpMatrix& a);

/// Maximum cycle mean λ(A) via Karp's algorithm on each strongly connected
/// component. -inf when the digraph is acyclic.
ExtReal max_cycle_mean(const MpMatrix& a);
ExtReal max_cycle_mean(const Digraph& d);

/// All elementary cycles (Johnson), each rotation class once, started at its
/// minimum node, sorted by node sequence.
std::vector<Cycle> enumerate_elementary_cycles(const Digraph& d, const EnumerationLimits& limits = {});

/// The elementary cycles with ω(σ) >= 0.
std::vector<Cycle> enumerate_nonneg_elementary_cycles(const Digraph& d, const EnumerationLimits& limits = {});

/// The t rotations σ(i_1), ..., σ(i_t) in cycle order.
std::vector<Cycle> rotations(const Cycle& sigma);

/// Nodes u with a path u -> ... -> v of length >= 1 whose intermediate nodes
/// all satisfy `allowed` (every node when `allowed` is empty). v itself is
/// included only if it lies on such a closed walk.
std::vector<Node> reverse_reachable(const Digraph& d, Node v, const std::vector<bool>& allowed = {});

/// All maximum J_σ-paths of σ, sorted by node sequence.
std::vector<JSigmaPath> enumerate_max_jsigma_paths(const Digraph& d, const Cycle& sigma,
                                                   const EnumerationLimits& limits = {});

}  // namespace maxplus::graph
