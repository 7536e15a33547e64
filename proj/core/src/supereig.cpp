// Copyright (c) maxplus contributors.
// SPDX-License-Identifier: Apache-2.0
#include "maxplus/supereig.hpp"

#include <memory>
#include <string>

#include "maxplus/errors.hpp"
#include "maxplus/oracle.hpp"
#include "maxplus/parallel.hpp"

namespace maxplus::supereig {

namespace {

void require_square(const MpMatrix& a) {
    if (!a.is_square()) {
        throw DimensionError("matrix must be square, got " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()));
    }
}

// Everything one cycle contributes, in discovery order.
struct CycleWork {
    std::vector<MpVector> accepted;
    std::size_t paths = 0;
    std::size_t candidates = 0;
};

CycleWork process_cycle(const MpMatrix& a, const graph::Digraph& d, const graph::Cycle& sigma,
                        const ExtremalityOracle& oracle, const graph::EnumerationLimits& limits,
                        const TraceHook& trace) {
    CycleWork work;
    CycleExtremals cycle = cycle_extremals(a, sigma, oracle, trace);
    work.candidates += cycle.terminals.size();
    for (const auto& terminal : cycle.terminals) {
        if (terminal.extremal) {
            work.accepted.push_back(scaled(terminal.vector));
        }
    }

    const std::vector<graph::JSigmaPath> paths = graph::enumerate_max_jsigma_paths(d, sigma, limits);
    work.paths = paths.size();
    for (const auto& path : paths) {
        const CycleTerminal& terminal = cycle.terminals[path.endnode_position];
        if (!terminal.extremal) {
            continue;
        }
        std::size_t submitted = 0;
        TraceHook counting = [&](const TraceEvent& e) {
            if (e.stage == TraceEvent::Stage::path_step) {
                ++submitted;
            }
            if (trace) {
                trace(e);
            }
        };
        for (auto& v : path_extremals(a, path, terminal.vector, oracle, counting)) {
            work.accepted.push_back(std::move(v));
        }
        work.candidates += submitted;
    }
    return work;
}

}  // namespace

bool row_satisfied(const MpMatrix& a, std::size_t i, const MpVector& x) {
    return row_apply(a, i, x) >= x.at(i);
}

bool in_supereig(const MpMatrix& a, const MpVector& x) {
    require_square(a);
    if (!x.is_proper()) {
        return false;
    }
    for (std::size_t i : x.support()) {
        if (!row_satisfied(a, i, x)) {
            return false;
        }
    }
    return true;
}

MpVector combine_row(const MpMatrix& a, std::size_t i, const MpVector& x, const MpVector& y) {
    if (!row_satisfied(a, i, x)) {
        throw ContractError("combine_row: x violates row " + std::to_string(i + 1));
    }
    return vec_join(vec_scale(y.at(i), x), vec_scale(row_apply(a, i, x), y));
}

bool is_extremal_ref(const MpMatrix& a, const MpVector& v, const ScaledBasis& generators) {
    const MpVector sv = scaled(v);
    if (!in_supereig(a, v)) {
        throw ContractError("extremality test on a vector outside the solution set");
    }
    std::vector<MpVector> others;
    others.reserve(generators.size());
    for (const auto& g : generators) {
        if (g != sv) {
            others.push_back(g);
        }
    }
    return !in_span(sv, others);
}

ExtremalityOracle reference_oracle(const MpMatrix& a, const graph::EnumerationLimits& limits) {
    auto generators = std::make_shared<const ScaledBasis>(oracle::cycle_path_generators(a, limits).scaled_set());
    return [generators](const MpMatrix& m, const MpVector& v) { return is_extremal_ref(m, v, *generators); };
}

ExtremalityOracle accept_all_oracle() {
    return [](const MpMatrix&, const MpVector&) { return true; };
}

CycleExtremals cycle_extremals(const MpMatrix& a, const graph::Cycle& sigma, const ExtremalityOracle& oracle,
                               const TraceHook& trace) {
    require_square(a);
    if (sigma.weight < 0) {
        throw ContractError("cycle weight is negative");
    }
    const std::size_t n = a.rows();
    const std::size_t t = sigma.length();

    CycleExtremals out;
    for (const graph::Cycle& rotation : graph::rotations(sigma)) {
        const std::vector<graph::Node>& j = rotation.nodes;
        MpVector v = MpVector::unit(n, j[0]);
        std::size_t p = 1;
        while (p <= t - 1 && !row_satisfied(a, j[p - 1], v)) {
            const ExtReal& arc = a.at(j[p - 1], j[p]);
            if (arc.is_neg_inf()) {
                throw ContractError("cycle uses a missing arc");
            }
            v = vec_join(MpVector::unit(n, j[p]), vec_scale(arc, v));
            ++p;
        }
        const bool extremal = oracle(a, v);
        if (trace) {
            trace(TraceEvent{TraceEvent::Stage::cycle_terminal, j, j[0], v, extremal});
        }
        if (extremal) {
            out.extremals.insert_scaled(v);
        }
        out.terminals.push_back(CycleTerminal{j[0], std::move(v), p, extremal});
    }
    return out;
}

std::vector<MpVector> path_extremals(const MpMatrix& a, const graph::JSigmaPath& path, const MpVector& terminal,
                                     const ExtremalityOracle& oracle, const TraceHook& trace) {
    const std::size_t m = path.nodes.size();
    if (m < 2) {
        throw ContractError("path needs at least two nodes");
    }
    if (!in_supereig(a, terminal)) {
        throw ContractError("path walk must start from a member of the solution set");
    }
    if (terminal.at(path.nodes.back()).is_neg_inf()) {
        throw ContractError("path endnode is outside the terminal's support");
    }

    const std::size_t n = a.rows();
    std::vector<MpVector> out;
    MpVector v = terminal;
    for (std::size_t q = 1; q < m; ++q) {
        const graph::Node node = path.nodes[m - 1 - q];
        const MpVector e = MpVector::unit(n, node);
        if (row_satisfied(a, node, e)) {
            if (trace) {
                trace(TraceEvent{TraceEvent::Stage::path_unit_stop, path.nodes, node, MpVector(), false});
            }
            break;
        }
        v = vec_join(v, vec_scale(row_apply(a, node, v), e));
        const bool extremal = oracle(a, v);
        if (trace) {
            trace(TraceEvent{TraceEvent::Stage::path_step, path.nodes, node, v, extremal});
        }
        if (!extremal) {
            break;
        }
        out.push_back(scaled(v));
    }
    return out;
}

BasisResult compute_basis(const MpMatrix& a, const BasisOptions& options) {
    require_square(a);
    BasisResult result;
    const graph::Digraph d(a);
    result.lambda = graph::max_cycle_mean(d);
    result.solvable = result.lambda >= ExtReal(0);
    if (!result.solvable) {
        result.diagnostic = "max cycle mean " + result.lambda.to_string() + " < 0: no proper solution";
        return result;
    }

    const ExtremalityOracle oracle = options.oracle ? options.oracle : reference_oracle(a, options.limits);
    const std::vector<graph::Cycle> cycles = graph::enumerate_nonneg_elementary_cycles(d, options.limits);
    result.stats.cycles = cycles.size();

    std::size_t threads = options.threads == 0 ? default_thread_count() : options.threads;
    if (options.trace) {
        threads = 1;
    }
    std::vector<CycleWork> work(cycles.size());
    parallel_for(cycles.size(), threads, [&](std::size_t c) {
        work[c] = process_cycle(a, d, cycles[c], oracle, options.limits, options.trace);
    });

    for (const auto& w : work) {
        result.stats.paths += w.paths;
        result.stats.candidates += w.candidates;
        for (const auto& v : w.accepted) {
            if (!result.basis.insert(v)) {
                ++result.stats.duplicates;
            }
        }
    }
    return result;
}

ScaledBasis scaled_basis(const MpMatrix& a, const ExtremalityOracle& oracle) {
    BasisOptions options;
    options.oracle = oracle;
    return compute_basis(a, options).basis;
}

}  // namespace maxplus::supereig
