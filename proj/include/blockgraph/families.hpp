#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blockgraph/block_decomposition.hpp"
#include "blockgraph/weighted_graph.hpp"

namespace blockgraph {

// Central clique K_n with k pendant K_m blocks coalesced at every vertex.
struct NmkSpec {
    int n = 2;  // central clique order, >= 2
    int m = 3;  // pendant clique order, >= 3
    int k = 1;  // pendant cliques per central vertex, >= 1
};

// Central clique K_n with an arbitrary list of pendant clique orders (each
// above 2) at every central vertex.
struct CoalescedCliqueSpec {
    int n = 2;
    std::vector<std::vector<int>> attachments;  // one list per central vertex
};

// Tree skeleton on node_count parts; each edge (i, j, u, v) joins vertex u
// of part i to vertex v of part j by a bridge (skeleton) edge.
struct TreeOfBlockGraphsSpec {
    int node_count = 0;
    std::vector<WeightedGraph> parts;
    struct SkeletonEdge {
        int i, j;  // part indices
        int u, v;  // local vertex ids within parts i and j
    };
    std::vector<SkeletonEdge> edges;
};

// Plain tree given by an explicit edge list, used by the clique-decorated
// tree constructions.
struct TreeSpec {
    int node_count = 0;
    std::vector<Edge> edges;
};

namespace detail {

inline void validate_tree(const TreeSpec& tree, const char* where) {
    if (tree.node_count < 1)
        throw std::invalid_argument(std::string(where) + ": tree needs at least one node");
    if (static_cast<int>(tree.edges.size()) != tree.node_count - 1)
        throw std::invalid_argument(std::string(where) + ": edge count is not nodes - 1");
    WeightedGraph t(tree.node_count, tree.edges);
    if (!is_connected(t))
        throw std::invalid_argument(std::string(where) + ": skeleton is not connected");
}

}  // namespace detail

// Glue a new clique of the given order to g at vertex v (v becomes one of
// the clique's vertices); order - 1 new zero-weight vertices are appended.
inline WeightedGraph attach_clique(const WeightedGraph& g, int v, int order) {
    if (order < 2)
        throw std::invalid_argument("attach_clique: clique order must be at least 2");
    if (v < 0 || v >= g.vertex_count())
        throw std::out_of_range("attach_clique: invalid vertex id");
    const int n = g.vertex_count();
    auto edges = g.edges();
    std::vector<int> members{v};
    for (int i = 0; i < order - 1; ++i)
        members.push_back(n + i);
    for (size_t a = 0; a < members.size(); ++a)
        for (size_t b = a + 1; b < members.size(); ++b)
            edges.emplace_back(members[a], members[b]);
    auto weights = g.weights();
    weights.resize(n + order - 1, Rational());
    return WeightedGraph(n + order - 1, edges, std::move(weights));
}

inline WeightedGraph make_coalesced_cliques(const CoalescedCliqueSpec& spec) {
    if (spec.n < 2)
        throw std::invalid_argument("make_coalesced_cliques: central order must be >= 2");
    if (static_cast<int>(spec.attachments.size()) != spec.n)
        throw std::invalid_argument(
            "make_coalesced_cliques: need one attachment list per central vertex");
    for (const auto& list : spec.attachments)
        for (int order : list)
            if (order <= 2)
                throw std::invalid_argument(
                    "make_coalesced_cliques: attached clique orders must exceed 2");
    WeightedGraph g = make_clique(spec.n);
    for (int i = 0; i < spec.n; ++i)
        for (int order : spec.attachments[i])
            g = attach_clique(g, i, order);
    return g;
}

// Singular exactly when the sum of 1 / (1 + sum_j (m_ij - 1)/(m_ij - 2))
// over the central vertices equals 1, computed in exact rationals.
inline bool predict_coalesced_singular(const CoalescedCliqueSpec& spec) {
    if (spec.n < 2)
        throw std::invalid_argument("predict_coalesced_singular: central order must be >= 2");
    if (static_cast<int>(spec.attachments.size()) != spec.n)
        throw std::invalid_argument(
            "predict_coalesced_singular: need one attachment list per central vertex");
    Rational total;
    for (const auto& list : spec.attachments) {
        Rational inner;
        for (int order : list) {
            if (order <= 2)
                throw std::invalid_argument(
                    "predict_coalesced_singular: attached clique orders must exceed 2");
            inner += Rational(order - 1, order - 2);
        }
        total += Rational(1) / (Rational(1) + inner);
    }
    return total == Rational(1);
}

inline WeightedGraph make_nmk(const NmkSpec& spec) {
    if (spec.n < 2 || spec.m < 3 || spec.k < 1)
        throw std::invalid_argument("make_nmk: need n >= 2, m >= 3, k >= 1");
    CoalescedCliqueSpec cs;
    cs.n = spec.n;
    cs.attachments.assign(spec.n, std::vector<int>(spec.k, spec.m));
    return make_coalesced_cliques(cs);
}

// Integer form of the singularity law: k (m - 1) = (n - 1)(m - 2).
inline bool predict_nmk_singular(const NmkSpec& spec) {
    if (spec.n < 2 || spec.m < 3 || spec.k < 1)
        throw std::invalid_argument("predict_nmk_singular: need n >= 2, m >= 3, k >= 1");
    return static_cast<long long>(spec.k) * (spec.m - 1) ==
           static_cast<long long>(spec.n - 1) * (spec.m - 2);
}

// Every block has at least three vertices, at least one of them a non-cut
// vertex. Such block graphs are always nonsingular under zero weights.
inline bool is_b31(const WeightedGraph& g) {
    BlockCutForest f = decompose(g);
    for (const auto& b : f.blocks)
        if (!b.is_clique)
            throw std::invalid_argument("is_b31: input is not a block graph");
    for (size_t b = 0; b < f.blocks.size(); ++b) {
        if (f.blocks[b].vertex_ids.size() < 3)
            return false;
        if (non_cut_vertices(f, static_cast<int>(b)).empty())
            return false;
    }
    return true;
}

// Greedy leaf matching: a leaf is forced to match its neighbor, so repeat
// until nothing is left. Exact for forests.
inline bool forest_has_perfect_matching(const WeightedGraph& g) {
    if (!is_forest(g))
        throw std::invalid_argument("forest_has_perfect_matching: input has a cycle");
    const int n = g.vertex_count();
    std::vector<int> degree(n);
    std::vector<std::vector<int>> nbr(n);
    std::queue<int> leaves;
    for (int v = 0; v < n; ++v) {
        nbr[v] = g.neighbors(v);
        degree[v] = static_cast<int>(nbr[v].size());
        if (degree[v] == 1)
            leaves.push(v);
    }
    std::vector<bool> removed(n, false);
    int matched = 0;
    while (!leaves.empty()) {
        int u = leaves.front();
        leaves.pop();
        if (removed[u] || degree[u] != 1)
            continue;
        int partner = -1;
        for (int w : nbr[u])
            if (!removed[w])
                partner = w;
        removed[u] = removed[partner] = true;
        matched += 2;
        for (int w : nbr[partner]) {
            if (removed[w])
                continue;
            if (--degree[w] == 1)
                leaves.push(w);
        }
    }
    return matched == n;
}

// Disjoint union of the parts plus one bridge per skeleton edge. Parts are
// laid out in order, so part i occupies a contiguous id range.
inline WeightedGraph make_tree_of_block_graphs(const TreeOfBlockGraphsSpec& spec) {
    if (spec.node_count < 1)
        throw std::invalid_argument("make_tree_of_block_graphs: need at least one part");
    if (static_cast<int>(spec.parts.size()) != spec.node_count)
        throw std::invalid_argument("make_tree_of_block_graphs: part count mismatch");
    TreeSpec skeleton{spec.node_count, {}};
    for (const auto& e : spec.edges)
        skeleton.edges.emplace_back(e.i, e.j);
    detail::validate_tree(skeleton, "make_tree_of_block_graphs");

    std::vector<int> offset(spec.node_count + 1, 0);
    for (int i = 0; i < spec.node_count; ++i)
        offset[i + 1] = offset[i] + spec.parts[i].vertex_count();
    std::vector<Edge> edges;
    std::vector<Rational> weights;
    for (int i = 0; i < spec.node_count; ++i) {
        for (const auto& [u, v] : spec.parts[i].edges())
            edges.emplace_back(offset[i] + u, offset[i] + v);
        const auto& w = spec.parts[i].weights();
        weights.insert(weights.end(), w.begin(), w.end());
    }
    for (const auto& e : spec.edges) {
        if (e.u < 0 || e.u >= spec.parts[e.i].vertex_count() || e.v < 0 ||
            e.v >= spec.parts[e.j].vertex_count())
            throw std::out_of_range("make_tree_of_block_graphs: skeleton vertex out of range");
        edges.emplace_back(offset[e.i] + e.u, offset[e.j] + e.v);
    }
    return WeightedGraph(offset[spec.node_count], edges, std::move(weights));
}

// Conditions under which a tree of B31 block graphs stays nonsingular:
// (a) no two skeleton edges share a vertex, and (b) in the assembled graph
// every block with three or more vertices keeps a non-cut vertex.
inline bool check_tree_b31_conditions(const TreeOfBlockGraphsSpec& spec) {
    for (const auto& part : spec.parts)
        if (!is_b31(part))
            throw std::invalid_argument("check_tree_b31_conditions: a part is not B31");
    std::set<std::pair<int, int>> endpoints;
    bool disjoint = true;
    for (const auto& e : spec.edges) {
        if (!endpoints.insert({e.i, e.u}).second)
            disjoint = false;
        if (!endpoints.insert({e.j, e.v}).second)
            disjoint = false;
    }
    if (!disjoint)
        return false;
    WeightedGraph g = make_tree_of_block_graphs(spec);
    BlockCutForest f = decompose(g);
    for (size_t b = 0; b < f.blocks.size(); ++b)
        if (f.blocks[b].vertex_ids.size() >= 3 &&
            non_cut_vertices(f, static_cast<int>(b)).empty())
            return false;
    return true;
}

// The tree whose vertices carry coalesced cliques. Tree nodes come first,
// then the clique vertices in node order.
inline WeightedGraph make_tree_with_cliques(const TreeSpec& tree,
                                            const std::vector<std::vector<int>>& attachments) {
    detail::validate_tree(tree, "make_tree_with_cliques");
    if (static_cast<int>(attachments.size()) != tree.node_count)
        throw std::invalid_argument("make_tree_with_cliques: attachment list count mismatch");
    WeightedGraph g(tree.node_count, tree.edges);
    for (int i = 0; i < tree.node_count; ++i)
        for (int order : attachments[i]) {
            if (order <= 2)
                throw std::invalid_argument(
                    "make_tree_with_cliques: attached clique orders must exceed 2");
            g = attach_clique(g, i, order);
        }
    return g;
}

// Diagonal-dominance test for the clique-decorated tree: at every tree node
// the sum of (m - 1)/(m - 2) over its cliques must strictly exceed the node
// degree. When true the assembled graph is nonsingular.
inline bool check_mnktree_condition(const TreeSpec& tree,
                                    const std::vector<std::vector<int>>& attachments) {
    detail::validate_tree(tree, "check_mnktree_condition");
    if (static_cast<int>(attachments.size()) != tree.node_count)
        throw std::invalid_argument("check_mnktree_condition: attachment list count mismatch");
    std::vector<int> degree(tree.node_count, 0);
    for (const auto& [u, v] : tree.edges) {
        ++degree[u];
        ++degree[v];
    }
    for (int i = 0; i < tree.node_count; ++i) {
        Rational sum;
        for (int order : attachments[i]) {
            if (order <= 2)
                throw std::invalid_argument(
                    "check_mnktree_condition: clique orders must exceed 2");
            sum += Rational(order - 1, order - 2);
        }
        if (!(sum > Rational(degree[i])))
            return false;
    }
    return true;
}

// Coalesce one new pendant edge at each listed cut vertex of g. Requires
// every block of g to keep at least two non-cut vertices, which makes the
// result nonsingular.
inline WeightedGraph make_pendant_edges_at_cuts(const WeightedGraph& g,
                                                const std::vector<int>& cuts) {
    BlockCutForest f = decompose(g);
    for (size_t b = 0; b < f.blocks.size(); ++b)
        if (non_cut_vertices(f, static_cast<int>(b)).size() < 2)
            throw std::invalid_argument(
                "make_pendant_edges_at_cuts: a block has fewer than two non-cut vertices");
    std::set<int> seen;
    for (int v : cuts) {
        if (!f.is_cut_vertex(v))
            throw std::invalid_argument("make_pendant_edges_at_cuts: vertex " +
                                        std::to_string(v) + " is not a cut vertex");
        if (!seen.insert(v).second)
            throw std::invalid_argument(
                "make_pendant_edges_at_cuts: cut vertex listed twice");
    }
    if (cuts.empty())
        return g;
    const int n = g.vertex_count();
    auto edges = g.edges();
    auto weights = g.weights();
    auto labels = g.labels();
    int fresh_label = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    int next = n;
    for (int v : cuts) {
        edges.emplace_back(v, next++);
        weights.emplace_back();
        labels.push_back(fresh_label++);
    }
    return WeightedGraph(next, edges, std::move(weights), std::move(labels));
}

namespace detail {

// Canonical key of a connected block graph: the AHU string of its
// block-cut tree with block nodes annotated by clique size. Two connected
// block graphs are isomorphic exactly when these trees are, because all
// structure outside the tree is interchangeable non-cut clique vertices.
inline std::string block_cut_tree_key(const WeightedGraph& g) {
    BlockCutForest f = decompose(g);
    const int block_count = static_cast<int>(f.blocks.size());
    const int cut_count = static_cast<int>(f.cut_vertices.size());
    const int total = block_count + cut_count;
    std::vector<std::vector<int>> adj(total);
    std::vector<std::string> label(total);
    for (int b = 0; b < block_count; ++b)
        label[b] = "K" + std::to_string(f.blocks[b].vertex_ids.size());
    for (int c = 0; c < cut_count; ++c) {
        label[block_count + c] = "c";
        int v = f.cut_vertices[c];
        for (int b : f.blocks_of(v)) {
            adj[b].push_back(block_count + c);
            adj[block_count + c].push_back(b);
        }
    }
    if (total == 0)
        return "";

    // Find the tree center by peeling leaves.
    std::vector<int> degree(total);
    std::vector<int> order;
    std::queue<int> leaves;
    for (int v = 0; v < total; ++v) {
        degree[v] = static_cast<int>(adj[v].size());
        if (degree[v] <= 1)
            leaves.push(v);
    }
    std::vector<bool> peeled(total, false);
    int remaining = total;
    std::vector<int> centers;
    while (remaining > 2) {
        int layer = static_cast<int>(leaves.size());
        for (int i = 0; i < layer; ++i) {
            int v = leaves.front();
            leaves.pop();
            peeled[v] = true;
            --remaining;
            for (int u : adj[v])
                if (!peeled[u] && --degree[u] == 1)
                    leaves.push(u);
        }
    }
    for (int v = 0; v < total; ++v)
        if (!peeled[v])
            centers.push_back(v);

    // AHU encoding rooted at a center; with two centers take the smaller.
    auto encode = [&](int root) {
        std::vector<std::string> code(total);
        std::vector<std::pair<int, int>> stack{{root, -1}};
        std::vector<std::pair<int, int>> post;
        while (!stack.empty()) {
            auto [v, parent] = stack.back();
            stack.pop_back();
            post.push_back({v, parent});
            for (int u : adj[v])
                if (u != parent)
                    stack.push_back({u, v});
        }
        for (auto it = post.rbegin(); it != post.rend(); ++it) {
            auto [v, parent] = *it;
            std::vector<std::string> child_codes;
            for (int u : adj[v])
                if (u != parent)
                    child_codes.push_back(code[u]);
            std::sort(child_codes.begin(), child_codes.end());
            std::string s = "(" + label[v];
            for (const auto& c : child_codes)
                s += c;
            s += ")";
            code[v] = std::move(s);
        }
        return code[root];
    };
    std::string best = encode(centers[0]);
    if (centers.size() == 2) {
        std::string other = encode(centers[1]);
        if (other < best)
            best = std::move(other);
    }
    return best;
}

}  // namespace detail

// Every connected block graph with up to max_vertices vertices and zero
// weights, one representative per isomorphism class, grown by attaching
// clique blocks and deduplicated through the block-cut tree key. Emitted in
// ascending vertex count, then key order.
inline std::vector<WeightedGraph> enumerate_block_graphs(int max_vertices,
                                                         int configured_bound = 9) {
    if (max_vertices > configured_bound)
        throw std::invalid_argument("enumerate_block_graphs: bound exceeded");
    std::vector<WeightedGraph> out;
    if (max_vertices < 1)
        return out;
    std::vector<std::map<std::string, WeightedGraph>> levels(max_vertices + 1);
    WeightedGraph single(1, {});
    levels[1].emplace(detail::block_cut_tree_key(single), single);
    for (int n = 1; n <= max_vertices; ++n) {
        for (const auto& [key, g] : levels[n]) {
            for (int v = 0; v < n; ++v) {
                for (int order = 2; n + order - 1 <= max_vertices; ++order) {
                    WeightedGraph grown = attach_clique(g, v, order);
                    auto grown_key = detail::block_cut_tree_key(grown);
                    levels[n + order - 1].emplace(std::move(grown_key), std::move(grown));
                }
            }
        }
    }
    for (int n = 1; n <= max_vertices; ++n)
        for (const auto& [key, g] : levels[n])
            out.push_back(g);
    return out;
}

inline std::vector<Rational> default_weight_pool() {
    return {Rational(0), Rational(1), Rational(1, 2), Rational(-1), Rational(2)};
}

// Deterministic random connected block graph: grow a random block-cut tree
// with clique sizes in [2, 5] until the target order is reached, then draw
// every vertex weight from the pool. Identical seeds give identical graphs.
inline WeightedGraph random_block_graph(std::uint64_t seed, int max_vertices,
                                        const std::vector<Rational>& weight_pool =
                                            default_weight_pool()) {
    if (max_vertices < 1)
        max_vertices = 1;
    std::mt19937_64 rng(seed);
    auto bounded = [&rng](std::uint64_t n) { return static_cast<int>(rng() % n); };
    const int target = 1 + bounded(static_cast<std::uint64_t>(max_vertices));
    WeightedGraph g(1, {});
    while (g.vertex_count() < target) {
        int order = 2 + bounded(4);
        order = std::min(order, target - g.vertex_count() + 1);
        int v = bounded(static_cast<std::uint64_t>(g.vertex_count()));
        g = attach_clique(g, v, order);
    }
    if (weight_pool.empty())
        return g;
    std::vector<Rational> weights;
    weights.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        weights.push_back(weight_pool[bounded(weight_pool.size())]);
    return WeightedGraph(g.vertex_count(), g.edges(), std::move(weights));
}

}  // namespace blockgraph
