// Copyright (c) maxplus contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "maxplus/graph.hpp"
#include "maxplus/linalg.hpp"
#include "maxplus/scaled_basis.hpp"

/// Scaled basis of the supereigenvector cone X' = {x : A ⊗ x >= x}.
///
/// Extremals are grown from every nonnegative elementary cycle (one candidate
/// per rotation) and then pushed backwards along every maximum J_σ-path
/// ending on the cycle. Each growth step is the double description combination
/// for a single row with the identity on the left, so every candidate stays in
/// X. An extremality test prunes the walk along a path as soon as it fails.
namespace maxplus::supereig {

/// A_i ⊗ x >= x_i.
bool row_satisfied(const MpMatrix& a, std::size_t i, const MpVector& x);

/// x is proper and A ⊗ x >= x.
bool in_supereig(const MpMatrix& a, const MpVector& x);

/// y_i ⊗ x ⊕ (A_i ⊗ x) ⊗ y. Stays in {z : A_i ⊗ z >= z_i} whenever x does.
/// Throws ContractError if row i is not satisfied by x.
MpVector combine_row(const MpMatrix& a, std::size_t i, const MpVector& x, const MpVector& y);

/// Decides whether a member of X (unscaled) is an extremal of X'.
using ExtremalityOracle = std::function<bool(const MpMatrix&, const MpVector&)>;

/// Extremality by span exclusion against a scaled generating set G of X':
/// v is extremal iff scaled(v) is not in span(G \ {scaled(v)}).
/// Throws ImproperVectorError for v = -inf and ContractError if v is not in X.
bool is_extremal_ref(const MpMatrix& a, const MpVector& v, const ScaledBasis& generators);

/// Reference oracle for one matrix. Computes the cycle/path generating set of
/// X' once; the returned predicate is read-only and safe to share.
ExtremalityOracle reference_oracle(const MpMatrix& a, const graph::EnumerationLimits& limits = {});

/// Accepts every candidate. With it the search returns the scaled generating
/// set instead of the basis.
ExtremalityOracle accept_all_oracle();

struct TraceEvent {
    enum class Stage {
        cycle_terminal,  // a rotation's terminal vector
        path_step,       // a vector grown at `node` along a path
        path_unit_stop,  // e^node already satisfies its own row; walk stops
    };
    Stage stage;
    /// Rotation of the cycle (cycle_terminal) or the full path.
    std::vector<graph::Node> route;
    graph::Node node;
    /// Unscaled; empty for path_unit_stop.
    MpVector vector;
    bool accepted;
};

using TraceHook = std::function<void(const TraceEvent&)>;

struct CycleTerminal {
    graph::Node start;
    MpVector vector;
    /// Iterations used, 1..t.
    std::size_t steps;
    bool extremal;
};

struct CycleExtremals {
    /// Scaled terminals accepted by the oracle.
    ScaledBasis extremals;
    /// One entry per rotation, in cycle order.
    std::vector<CycleTerminal> terminals;
};

/// For every rotation (j_1, ..., j_t) of sigma: start from e^{j_1} and, while
/// p <= t - 1 and row j_p fails, set v <- e^{j_{p+1}} ⊕ a_{j_p j_{p+1}} ⊗ v.
/// The terminal always lies in X. Throws ContractError if ω(σ) < 0 or the
/// cycle uses a missing arc.
CycleExtremals cycle_extremals(const MpMatrix& a, const graph::Cycle& sigma, const ExtremalityOracle& oracle,
                               const TraceHook& trace = {});

/// Walks path (l_1, ..., l_m) backwards from `terminal` (the cycle terminal
/// at l_m). At each l_{m-q}: stop if e^{l_{m-q}} satisfies its own row,
/// otherwise v <- v ⊕ (A_{l_{m-q}} ⊗ v) ⊗ e^{l_{m-q}}; emit scaled v if the
/// oracle accepts, stop if it rejects. Returns emitted vectors in order.
/// Throws ContractError if the terminal is not in X or does not contain l_m in
/// its support.
std::vector<MpVector> path_extremals(const MpMatrix& a, const graph::JSigmaPath& path, const MpVector& terminal,
                                     const ExtremalityOracle& oracle, const TraceHook& trace = {});

struct BasisOptions {
    /// Empty means reference_oracle(a).
    ExtremalityOracle oracle;
    graph::EnumerationLimits limits;
    /// 0 means default_thread_count(). A trace hook forces one thread.
    std::size_t threads = 0;
    TraceHook trace;
};

struct BasisStats {
    std::size_t cycles = 0;
    std::size_t paths = 0;
    /// Vectors submitted to the oracle.
    std::size_t candidates = 0;
    /// Accepted vectors that were already in the basis.
    std::size_t duplicates = 0;
};

struct BasisResult {
    ExtReal lambda;
    bool solvable = false;
    ScaledBasis basis;
    BasisStats stats;
    /// Set when the system has no proper solution.
    std::string diagnostic;
};

/// Runs the cycle and path searches over every nonnegative elementary cycle
/// and every maximum J_σ-path. Returns an empty basis with a diagnostic when
/// λ(A) < 0. Throws ResourceError when enumeration exceeds the limits.
BasisResult compute_basis(const MpMatrix& a, const BasisOptions& options = {});

/// compute_basis(a).basis with the given oracle (reference when empty).
ScaledBasis scaled_basis(const MpMatrix& a, const ExtremalityOracle& oracle = {});

}  // namespace maxplus::supereig
