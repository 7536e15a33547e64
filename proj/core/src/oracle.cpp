// Copyright (c) maxplus contributors.
// SPDX-License-Identifier: Apache-2.0
#include "maxplus/oracle.hpp"

#include <sstream>

#include "maxplus/errors.hpp"

namespace maxplus::oracle {

namespace {

std::string join_nodes(const std::vector<graph::Node>& nodes) {
    std::ostringstream os;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        os << (k ? " " : "") << nodes[k] + 1;
    }
    return os.str();
}

// Removes members spanned by the others. Works on a scaled, deduplicated list.
std::vector<MpVector> drop_redundant(std::vector<MpVector> vectors) {
    std::vector<MpVector> kept;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        std::vector<MpVector> others;
        others.reserve(vectors.size());
        for (std::size_t j = 0; j < vectors.size(); ++j) {
            if (j != i) {
                others.push_back(vectors[j]);
            }
        }
        if (!in_span(vectors[i], others)) {
            kept.push_back(vectors[i]);
        }
    }
    return kept;
}

}  // namespace

std::vector<MpVector> GeneratorSet::vectors() const {
    std::vector<MpVector> out;
    out.reserve(generators.size());
    for (const auto& g : generators) {
        out.push_back(g.vector);
    }
    return out;
}

ScaledBasis GeneratorSet::scaled_set() const {
    ScaledBasis out;
    for (const auto& g : generators) {
        out.insert_scaled(g.vector);
    }
    return out;
}

std::vector<MpVector> cycle_generators(const MpMatrix& a, const graph::Cycle& sigma) {
    const std::size_t n = a.rows();
    const std::size_t t = sigma.length();
    if (t == 0) {
        throw ContractError("empty cycle");
    }
    std::vector<MpVector> out;
    out.reserve(t);
    for (std::size_t j = 0; j < t; ++j) {
        MpVector x(n);
        mpq_class entry = 0;
        x[sigma.nodes[0]] = ExtReal(entry);
        for (std::size_t s = 0; s + 1 < t; ++s) {
            const ExtReal& arc = a.at(sigma.nodes[s], sigma.nodes[s + 1]);
            if (arc.is_neg_inf()) {
                throw ContractError("cycle uses a missing arc");
            }
            entry += (s == j ? sigma.weight : mpq_class(0)) - arc.value();
            x[sigma.nodes[s + 1]] = ExtReal(entry);
        }
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<MpVector> path_generators(const MpMatrix& a, const graph::Cycle& sigma,
                                      std::span<const MpVector> cycle_gens, const graph::JSigmaPath& path) {
    const std::size_t t = sigma.length();
    const std::size_t m = path.nodes.size();
    if (cycle_gens.size() != t || m < 2 || path.endnode_position >= t ||
        sigma.nodes[path.endnode_position] != path.nodes.back()) {
        throw ContractError("path does not end on the given cycle");
    }
    // l_m = i_k uses x_{k-1}, the generator with slack on the arc entering i_k.
    const std::size_t g = (path.endnode_position + t - 1) % t;
    MpVector x = cycle_gens[g];
    ExtReal c = x[path.nodes.back()];

    std::vector<MpVector> out;
    out.reserve(m - 1);
    for (std::size_t p = 1; p < m; ++p) {
        const graph::Node node = path.nodes[m - 1 - p];
        const graph::Node next = path.nodes[m - p];
        c = otimes(c, a.at(node, next));
        MpVector single(x.size());
        single[node] = c;
        x = vec_join(x, single);
        out.push_back(x);
    }
    return out;
}

GeneratorSet cycle_path_generators(const MpMatrix& a, const graph::EnumerationLimits& limits) {
    const graph::Digraph d(a);
    GeneratorSet out;
    for (const auto& sigma : graph::enumerate_nonneg_elementary_cycles(d, limits)) {
        const std::string cycle_name = join_nodes(sigma.nodes);
        const std::vector<MpVector> gens = cycle_generators(a, sigma);
        for (std::size_t j = 0; j < gens.size(); ++j) {
            out.generators.push_back({gens[j], "cycle " + cycle_name + " #" + std::to_string(j + 1)});
        }
        for (const auto& path : graph::enumerate_max_jsigma_paths(d, sigma, limits)) {
            const std::string path_name = join_nodes(path.nodes);
            const std::vector<MpVector> steps = path_generators(a, sigma, gens, path);
            for (std::size_t p = 0; p < steps.size(); ++p) {
                out.generators.push_back({steps[p], "path " + path_name + " step " + std::to_string(p + 1)});
            }
        }
    }
    return out;
}

TwoSidedSystem TwoSidedSystem::supereigen(const MpMatrix& a) {
    if (!a.is_square()) {
        throw DimensionError("supereigen system needs a square matrix");
    }
    return {MpMatrix::identity(a.rows()), a};
}

GeneratorSet double_description(const TwoSidedSystem& system, const DoubleDescriptionOptions& options) {
    const MpMatrix& left = system.left;
    const MpMatrix& right = system.right;
    if (left.rows() != right.rows() || left.cols() != right.cols()) {
        throw DimensionError("two-sided system: left and right shapes differ");
    }
    const std::size_t d = left.cols();

    std::vector<MpVector> current;
    for (std::size_t i = 0; i < d; ++i) {
        current.push_back(MpVector::unit(d, i));
    }

    for (std::size_t k = 0; k < left.rows(); ++k) {
        std::vector<const MpVector*> satisfiers;
        std::vector<const MpVector*> violators;
        for (const auto& v : current) {
            if (row_apply(left, k, v) <= row_apply(right, k, v)) {
                satisfiers.push_back(&v);
            } else {
                violators.push_back(&v);
            }
        }
        ScaledBasis next;
        for (const MpVector* v : satisfiers) {
            next.insert(*v);
        }
        for (const MpVector* v : satisfiers) {
            const ExtReal rv = row_apply(right, k, *v);
            for (const MpVector* w : violators) {
                MpVector combo = vec_join(vec_scale(row_apply(left, k, *w), *v), vec_scale(rv, *w));
                if (combo.is_proper()) {
                    next.insert_scaled(combo);
                }
            }
        }
        current = next.to_vector();
        if (options.prune_redundant) {
            current = drop_redundant(std::move(current));
        }
    }

    GeneratorSet out;
    for (auto& v : current) {
        out.generators.push_back({std::move(v), "double description"});
    }
    return out;
}

ScaledBasis extremal_filter(const GeneratorSet& g) { return extremal_filter(g.vectors()); }

ScaledBasis extremal_filter(std::span<const MpVector> vectors) {
    ScaledBasis unique;
    for (const auto& v : vectors) {
        unique.insert_scaled(v);
    }
    ScaledBasis out;
    for (const auto& v : drop_redundant(unique.to_vector())) {
        out.insert(v);
    }
    return out;
}

bool bases_equal(const ScaledBasis& a, const ScaledBasis& b) { return a == b; }

}  // namespace maxplus::oracle
