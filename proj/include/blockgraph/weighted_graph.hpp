#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blockgraph/rational.hpp"

namespace blockgraph {

using Edge = std::pair<int, int>;

// Simple undirected graph with an exact rational weight per vertex.
// Vertex ids are dense 0..n-1. Every vertex additionally carries a label;
// subgraph operations keep labels so that reduction traces can name the
// vertices of the graph they started from. Instances are immutable: all
// composition operations build new values.
class WeightedGraph {
public:
    WeightedGraph() = default;

    // Edges are deduplicated order-independently (set semantics, matching
    // the adjacency-matrix model). An empty weight vector means all-zero
    // weights; an empty label vector means labels 0..n-1.
    WeightedGraph(int n, const std::vector<Edge>& edges,
                  std::vector<Rational> weights = {},
                  std::vector<int> labels = {})
        : n_(n) {
        if (n < 0)
            throw std::invalid_argument("WeightedGraph: negative vertex count");
        adj_.assign(static_cast<size_t>(n_) * n_, false);
        for (const auto& [u, v] : edges) {
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw std::out_of_range("WeightedGraph: edge endpoint out of range");
            if (u == v)
                throw std::invalid_argument("WeightedGraph: self-loop");
            adj_[idx(u, v)] = true;
            adj_[idx(v, u)] = true;
        }
        if (weights.empty())
            weights.assign(n_, Rational());
        if (static_cast<int>(weights.size()) != n_)
            throw std::invalid_argument("WeightedGraph: weight count does not match vertex count");
        weights_ = std::move(weights);
        if (labels.empty()) {
            labels.resize(n_);
            std::iota(labels.begin(), labels.end(), 0);
        }
        if (static_cast<int>(labels.size()) != n_)
            throw std::invalid_argument("WeightedGraph: label count does not match vertex count");
        labels_ = std::move(labels);
        auto sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("WeightedGraph: duplicate vertex labels");
    }

    int vertex_count() const { return n_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[idx(u, v)];
    }

    const Rational& weight(int v) const {
        check_vertex(v);
        return weights_[v];
    }
    const std::vector<Rational>& weights() const { return weights_; }

    int label(int v) const {
        check_vertex(v);
        return labels_[v];
    }
    const std::vector<int>& labels() const { return labels_; }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (int u = 0; u < n_; ++u)
            if (u != v && adj_[idx(v, u)])
                ++d;
        return d;
    }

    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (u != v && adj_[idx(v, u)])
                out.push_back(u);
        return out;
    }

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adj_[idx(u, v)])
                    out.emplace_back(u, v);
        return out;
    }

    int edge_count() const { return static_cast<int>(edges().size()); }

    bool operator==(const WeightedGraph& other) const = default;

private:
    size_t idx(int u, int v) const { return static_cast<size_t>(u) * n_ + v; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("WeightedGraph: vertex id " + std::to_string(v) +
                                    " out of range");
    }

    int n_ = 0;
    std::vector<bool> adj_;
    std::vector<Rational> weights_;
    std::vector<int> labels_;
};

inline WeightedGraph build_graph(int n, const std::vector<Edge>& edges,
                                 std::vector<Rational> weights = {}) {
    return WeightedGraph(n, edges, std::move(weights));
}

// Induced subgraph on the given vertex set; vertices are re-indexed densely
// in ascending order of their old ids, weights restricted, labels kept.
inline WeightedGraph induced_subgraph(const WeightedGraph& g, std::vector<int> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> pos(g.vertex_count(), -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        int v = keep[i];
        if (v < 0 || v >= g.vertex_count())
            throw std::out_of_range("induced_subgraph: unknown vertex id");
        pos[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (pos[u] >= 0 && pos[v] >= 0)
            edges.emplace_back(pos[u], pos[v]);
    std::vector<Rational> weights;
    std::vector<int> labels;
    weights.reserve(keep.size());
    labels.reserve(keep.size());
    for (int v : keep) {
        weights.push_back(g.weight(v));
        labels.push_back(g.label(v));
    }
    return WeightedGraph(static_cast<int>(keep.size()), edges, std::move(weights),
                         std::move(labels));
}

// Copy of g with the weight of one vertex replaced.
inline WeightedGraph with_weight(const WeightedGraph& g, int v, Rational w) {
    if (v < 0 || v >= g.vertex_count())
        throw std::out_of_range("with_weight: vertex id out of range");
    auto weights = g.weights();
    weights[v] = std::move(w);
    return WeightedGraph(g.vertex_count(), g.edges(), std::move(weights), g.labels());
}

// Identify v1 of g1 with v2 of g2 into a single vertex carrying
// merged_weight. The result has |V1|+|V2|-1 vertices and fresh labels:
// vertices of g1 keep their ids, the rest of g2 follows.
inline WeightedGraph coalesce(const WeightedGraph& g1, int v1, const WeightedGraph& g2,
                              int v2, Rational merged_weight) {
    if (v1 < 0 || v1 >= g1.vertex_count())
        throw std::out_of_range("coalesce: invalid vertex id in first graph");
    if (v2 < 0 || v2 >= g2.vertex_count())
        throw std::out_of_range("coalesce: invalid vertex id in second graph");
    const int n1 = g1.vertex_count();
    // Map g2's vertices: v2 -> v1, others -> n1, n1+1, ...
    std::vector<int> map2(g2.vertex_count());
    int next = n1;
    for (int v = 0; v < g2.vertex_count(); ++v)
        map2[v] = (v == v2) ? v1 : next++;
    std::vector<Edge> edges = g1.edges();
    for (const auto& [u, v] : g2.edges())
        edges.emplace_back(map2[u], map2[v]);
    std::vector<Rational> weights = g1.weights();
    weights.resize(next, Rational());
    weights[v1] = std::move(merged_weight);
    for (int v = 0; v < g2.vertex_count(); ++v)
        if (v != v2)
            weights[map2[v]] = g2.weight(v);
    return WeightedGraph(next, edges, std::move(weights));
}

// Disjoint union of g1 and g2 plus the bridge edge {v1, v2}.
inline WeightedGraph connect_by_edge(const WeightedGraph& g1, int v1,
                                     const WeightedGraph& g2, int v2) {
    if (v1 < 0 || v1 >= g1.vertex_count())
        throw std::out_of_range("connect_by_edge: invalid vertex id in first graph");
    if (v2 < 0 || v2 >= g2.vertex_count())
        throw std::out_of_range("connect_by_edge: invalid vertex id in second graph");
    const int n1 = g1.vertex_count();
    std::vector<Edge> edges = g1.edges();
    for (const auto& [u, v] : g2.edges())
        edges.emplace_back(n1 + u, n1 + v);
    edges.emplace_back(v1, n1 + v2);
    std::vector<Rational> weights = g1.weights();
    weights.insert(weights.end(), g2.weights().begin(), g2.weights().end());
    return WeightedGraph(n1 + g2.vertex_count(), edges, std::move(weights));
}

// Join v1 and v2 through interior_count new zero-weight vertices placed
// strictly between them; interior_count = 0 degenerates to connect_by_edge.
inline WeightedGraph connect_by_path(const WeightedGraph& g1, int v1,
                                     const WeightedGraph& g2, int v2,
                                     int interior_count) {
    if (interior_count < 0)
        throw std::invalid_argument("connect_by_path: negative interior vertex count");
    if (interior_count == 0)
        return connect_by_edge(g1, v1, g2, v2);
    if (v1 < 0 || v1 >= g1.vertex_count())
        throw std::out_of_range("connect_by_path: invalid vertex id in first graph");
    if (v2 < 0 || v2 >= g2.vertex_count())
        throw std::out_of_range("connect_by_path: invalid vertex id in second graph");
    const int n1 = g1.vertex_count();
    const int n2 = g2.vertex_count();
    std::vector<Edge> edges = g1.edges();
    for (const auto& [u, v] : g2.edges())
        edges.emplace_back(n1 + u, n1 + v);
    int first_interior = n1 + n2;
    edges.emplace_back(v1, first_interior);
    for (int i = 1; i < interior_count; ++i)
        edges.emplace_back(first_interior + i - 1, first_interior + i);
    edges.emplace_back(first_interior + interior_count - 1, n1 + v2);
    std::vector<Rational> weights = g1.weights();
    weights.insert(weights.end(), g2.weights().begin(), g2.weights().end());
    weights.resize(n1 + n2 + interior_count, Rational());
    return WeightedGraph(n1 + n2 + interior_count, edges, std::move(weights));
}

// Connected components, each re-indexed densely with labels preserved,
// ordered by smallest contained vertex id.
inline std::vector<WeightedGraph> components(const WeightedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        std::vector<int> stack{s};
        comp[s] = count;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (comp[u] < 0) {
                    comp[u] = count;
                    stack.push_back(u);
                }
            }
        }
        ++count;
    }
    std::vector<std::vector<int>> member(count);
    for (int v = 0; v < n; ++v)
        member[comp[v]].push_back(v);
    std::vector<WeightedGraph> out;
    out.reserve(count);
    for (const auto& verts : member)
        out.push_back(induced_subgraph(g, verts));
    return out;
}

inline bool is_connected(const WeightedGraph& g) {
    return g.vertex_count() == 0 || components(g).size() == 1;
}

inline bool is_forest(const WeightedGraph& g) {
    return g.edge_count() ==
           g.vertex_count() - static_cast<int>(components(g).size());
}

inline bool is_tree(const WeightedGraph& g) {
    return g.vertex_count() > 0 && is_connected(g) &&
           g.edge_count() == g.vertex_count() - 1;
}

inline WeightedGraph make_clique(int n, std::vector<Rational> weights = {}) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return WeightedGraph(n, edges, std::move(weights));
}

inline WeightedGraph make_path(int n, std::vector<Rational> weights = {}) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return WeightedGraph(n, edges, std::move(weights));
}

}  // namespace blockgraph
