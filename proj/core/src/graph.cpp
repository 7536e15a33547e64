// Copyright (c) maxplus contributors.
// SPDX-License-Identifier: Apache-2.0
#include "maxplus/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "maxplus/errors.hpp"

namespace maxplus::graph {

namespace {

void require_square(const MpMatrix& a) {
    if (!a.is_square()) {
        throw DimensionError("matrix must be square, got " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()));
    }
}

// Tarjan's SCC restricted to nodes with mask[v] set. Returns a component id
// per node (-1 outside the mask).
std::vector<int> strongly_connected(const Digraph& d, const std::vector<bool>& mask) {
    const std::size_t n = d.node_count();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<Node> stack;
    int counter = 0;
    int components = 0;

    std::function<void(Node)> visit = [&](Node v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (Node w : d.successors(v)) {
            if (!mask[w]) {
                continue;
            }
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            Node w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp[w] = components;
            } while (w != v);
            ++components;
        }
    };

    for (Node v = 0; v < n; ++v) {
        if (mask[v] && index[v] < 0) {
            visit(v);
        }
    }
    return comp;
}

mpq_class cycle_weight(const Digraph& d, const std::vector<Node>& nodes) {
    mpq_class w = 0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        w += d.weight(nodes[k], nodes[(k + 1) % nodes.size()]).value();
    }
    return w;
}

// Johnson's circuit search for cycles through `start` inside `members`.
class CircuitSearch {
public:
    CircuitSearch(const Digraph& d, Node start, const std::vector<bool>& members, std::size_t& visited,
                  std::size_t cap, std::vector<Cycle>& out)
        : d_(d),
          start_(start),
          members_(members),
          blocked_(d.node_count(), false),
          blocked_by_(d.node_count()),
          visited_(visited),
          cap_(cap),
          out_(out) {}

    void run() { circuit(start_); }

private:
    void unblock(Node u) {
        blocked_[u] = false;
        while (!blocked_by_[u].empty()) {
            Node w = blocked_by_[u].back();
            blocked_by_[u].pop_back();
            if (blocked_[w]) {
                unblock(w);
            }
        }
    }

    bool circuit(Node v) {
        bool found = false;
        path_.push_back(v);
        blocked_[v] = true;
        for (Node w : d_.successors(v)) {
            if (!members_[w]) {
                continue;
            }
            if (w == start_) {
                if (++visited_ > cap_) {
                    throw ResourceError("elementary cycle enumeration exceeded the cap of " + std::to_string(cap_));
                }
                out_.push_back(Cycle{path_, cycle_weight(d_, path_)});
                found = true;
            } else if (!blocked_[w] && circuit(w)) {
                found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (Node w : d_.successors(v)) {
                if (members_[w] && std::find(blocked_by_[w].begin(), blocked_by_[w].end(), v) == blocked_by_[w].end()) {
                    blocked_by_[w].push_back(v);
                }
            }
        }
        path_.pop_back();
        return found;
    }

    const Digraph& d_;
    Node start_;
    const std::vector<bool>& members_;
    std::vector<bool> blocked_;
    std::vector<std::vector<Node>> blocked_by_;
    std::vector<Node> path_;
    std::size_t& visited_;
    std::size_t cap_;
    std::vector<Cycle>& out_;
};

}  // namespace

Digraph::Digraph(const MpMatrix& a) : n_(a.rows()), weights_(a), out_(a.rows()), in_(a.rows()) {
    require_square(a);
    for (Node i = 0; i < n_; ++i) {
        for (Node j = 0; j < n_; ++j) {
            if (a(i, j).is_finite()) {
                arcs_.push_back(Arc{i, j, a(i, j).value()});
                out_[i].push_back(j);
                in_[j].push_back(i);
            }
        }
    }
}

bool Cycle::contains(Node v) const { return std::find(nodes.begin(), nodes.end(), v) != nodes.end(); }

std::optional<std::size_t> Cycle::position_of(Node v) const {
    auto it = std::find(nodes.begin(), nodes.end(), v);
    if (it == nodes.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - nodes.begin());
}

std::vector<Node> Cycle::node_set() const {
    std::vector<Node> s = nodes;
    std::sort(s.begin(), s.end());
    return s;
}

Digraph build_digraph(const MpMatrix& a) { return Digraph(a); }

ExtReal max_cycle_mean(const MpMatrix& a) { return max_cycle_mean(Digraph(a)); }

ExtReal max_cycle_mean(const Digraph& d) {
    const std::size_t n = d.node_count();
    const std::vector<int> comp = strongly_connected(d, std::vector<bool>(n, true));
    const int components = n == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;

    ExtReal best;
    for (int c = 0; c < components; ++c) {
        std::vector<Node> members;
        for (Node v = 0; v < n; ++v) {
            if (comp[v] == c) {
                members.push_back(v);
            }
        }
        const bool cyclic = members.size() > 1 || d.has_arc(members[0], members[0]);
        if (!cyclic) {
            continue;
        }

        // walk[k][v]: heaviest walk of exactly k arcs from members[0] to v
        // inside the component.
        const std::size_t k_max = members.size();
        std::vector<std::vector<ExtReal>> walk(k_max + 1, std::vector<ExtReal>(n));
        walk[0][members[0]] = ExtReal(0);
        for (std::size_t k = 1; k <= k_max; ++k) {
            for (Node v : members) {
                for (Node u : d.predecessors(v)) {
                    if (comp[u] == c && walk[k - 1][u].is_finite()) {
                        walk[k][v] = oplus(walk[k][v], otimes(walk[k - 1][u], d.weight(u, v)));
                    }
                }
            }
        }

        for (Node v : members) {
            if (walk[k_max][v].is_neg_inf()) {
                continue;
            }
            ExtReal worst;
            bool first = true;
            for (std::size_t k = 0; k < k_max; ++k) {
                if (walk[k][v].is_neg_inf()) {
                    continue;
                }
                ExtReal mean(mpq_class((walk[k_max][v].value() - walk[k][v].value()) / mpq_class(k_max - k)));
                if (first || mean < worst) {
                    worst = std::move(mean);
                    first = false;
                }
            }
            if (!first) {
                best = oplus(best, worst);
            }
        }
    }
    return best;
}

std::vector<Cycle> enumerate_elementary_cycles(const Digraph& d, const EnumerationLimits& limits) {
    const std::size_t n = d.node_count();
    std::vector<Cycle> out;
    std::size_t visited = 0;
    for (Node s = 0; s < n; ++s) {
        std::vector<bool> upper(n, false);
        for (Node v = s; v < n; ++v) {
            upper[v] = true;
        }
        const std::vector<int> comp = strongly_connected(d, upper);
        std::vector<bool> members(n, false);
        for (Node v = s; v < n; ++v) {
            members[v] = comp[v] == comp[s];
        }
        CircuitSearch(d, s, members, visited, limits.max_cycles, out).run();
    }
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) { return a.nodes < b.nodes; });
    return out;
}

std::vector<Cycle> enumerate_nonneg_elementary_cycles(const Digraph& d, const EnumerationLimits& limits) {
    std::vector<Cycle> all = enumerate_elementary_cycles(d, limits);
    std::erase_if(all, [](const Cycle& c) { return c.weight < 0; });
    return all;
}

std::vector<Cycle> rotations(const Cycle& sigma) {
    std::vector<Cycle> out;
    out.reserve(sigma.length());
    for (std::size_t k = 0; k < sigma.length(); ++k) {
        Cycle r{sigma.nodes, sigma.weight};
        std::rotate(r.nodes.begin(), r.nodes.begin() + static_cast<std::ptrdiff_t>(k), r.nodes.end());
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Node> reverse_reachable(const Digraph& d, Node v, const std::vector<bool>& allowed) {
    const std::size_t n = d.node_count();
    if (v >= n) {
        throw IndexError("node " + std::to_string(v) + " out of range");
    }
    std::vector<bool> seen(n, false);
    std::vector<Node> frontier{v};
    while (!frontier.empty()) {
        Node x = frontier.back();
        frontier.pop_back();
        for (Node u : d.predecessors(x)) {
            if (seen[u]) {
                continue;
            }
            seen[u] = true;
            if (allowed.empty() || allowed[u]) {
                frontier.push_back(u);
            }
        }
    }
    std::vector<Node> out;
    for (Node u = 0; u < n; ++u) {
        if (seen[u]) {
            out.push_back(u);
        }
    }
    return out;
}

std::vector<JSigmaPath> enumerate_max_jsigma_paths(const Digraph& d, const Cycle& sigma,
                                                   const EnumerationLimits& limits) {
    const std::size_t n = d.node_count();
    std::vector<bool> on_cycle(n, false);
    for (Node v : sigma.nodes) {
        on_cycle.at(v) = true;
    }

    std::vector<JSigmaPath> out;
    std::vector<bool> on_path(n, false);
    std::vector<Node> reversed;  // l_m, l_{m-1}, ..., l_1

    // A node outside J_σ and the path that can reach l_1 through such nodes
    // only would extend the path backwards, so the path is not maximum.
    auto is_maximum = [&](Node head) {
        std::vector<bool> outside(n);
        for (Node u = 0; u < n; ++u) {
            outside[u] = !on_cycle[u] && !on_path[u];
        }
        for (Node u : reverse_reachable(d, head, outside)) {
            if (outside[u]) {
                return false;
            }
        }
        return true;
    };

    std::function<void(Node, std::size_t)> extend = [&](Node head, std::size_t end_position) {
        for (Node u : d.predecessors(head)) {
            if (on_cycle[u] || on_path[u]) {
                continue;
            }
            reversed.push_back(u);
            on_path[u] = true;
            if (is_maximum(u)) {
                if (out.size() >= limits.max_cycles) {
                    throw ResourceError("maximum J_sigma-path enumeration exceeded the cap of " +
                                        std::to_string(limits.max_cycles));
                }
                out.push_back(JSigmaPath{{reversed.rbegin(), reversed.rend()}, end_position});
            }
            extend(u, end_position);
            on_path[u] = false;
            reversed.pop_back();
        }
    };

    for (std::size_t k = 0; k < sigma.length(); ++k) {
        const Node end = sigma.nodes[k];
        reversed.assign(1, end);
        on_path[end] = true;
        extend(end, k);
        on_path[end] = false;
    }
    std::sort(out.begin(), out.end(), [](const JSigmaPath& a, const JSigmaPath& b) { return a.nodes < b.nodes; });
    return out;
}

}  // namespace maxplus::graph
