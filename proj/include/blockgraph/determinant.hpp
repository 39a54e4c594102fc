#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blockgraph/weighted_graph.hpp"

namespace blockgraph {

namespace detail {

// Fraction-free (Bareiss) elimination over exact integers. Row exchanges
// handle zero pivots and flip the sign; every interior division is exact
// because each entry is a minor of the (row-permuted) input matrix.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0)
        return 1;
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0)
                return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline int det_vertex_limit_from_env() {
    if (const char* env = std::getenv("BLOCKGRAPH_MAX_DET_VERTICES")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return static_cast<int>(v);
    }
    return 64;
}

}  // namespace detail

// Size guard for the exact determinant; this is a desk-scale oracle, not a
// production linear-algebra kernel. Overridable with the environment
// variable BLOCKGRAPH_MAX_DET_VERTICES.
inline int det_vertex_limit() {
    static const int limit = detail::det_vertex_limit_from_env();
    return limit;
}

// Exact determinant of A(G) + diag(x). The 0-vertex graph has determinant 1
// by convention. Denominators are cleared row by row (only the diagonal is
// fractional), eliminated over integers, and the scaling undone at the end.
inline Rational det_exact(const WeightedGraph& g, int max_vertices) {
    const int n = g.vertex_count();
    if (n > max_vertices)
        throw std::length_error("det_exact: graph has " + std::to_string(n) +
                                " vertices, limit is " + std::to_string(max_vertices));
    if (n == 0)
        return Rational(1);
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
    BigInt denominator_product = 1;
    for (int i = 0; i < n; ++i) {
        const Rational& w = g.weight(i);
        m[i][i] = w.num();
        for (int j = 0; j < n; ++j)
            if (j != i && g.adjacent(i, j))
                m[i][j] = w.den();
        denominator_product *= w.den();
    }
    return Rational(detail::bareiss_determinant(std::move(m)),
                    std::move(denominator_product));
}

inline Rational det_exact(const WeightedGraph& g) {
    return det_exact(g, det_vertex_limit());
}

// det(G1) det(G2 \ v2) + det(G1 \ v1) det(G2): the determinant of the
// coalescence of G1 and G2 at v1 = v2, evaluated on the four subgraphs.
inline Rational coalescence_det(const WeightedGraph& g1, int v1,
                                const WeightedGraph& g2, int v2) {
    if (v1 < 0 || v1 >= g1.vertex_count() || v2 < 0 || v2 >= g2.vertex_count())
        throw std::out_of_range("coalescence_det: invalid vertex id");
    auto without = [](const WeightedGraph& g, int v) {
        std::vector<int> keep;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (u != v)
                keep.push_back(u);
        return induced_subgraph(g, keep);
    };
    return det_exact(g1) * det_exact(without(g2, v2)) +
           det_exact(without(g1, v1)) * det_exact(g2);
}

// det(G1) det(G2) - det(G1 \ v1) det(G2 \ v2): the determinant of the graph
// obtained by joining G1 and G2 with the bridge edge {v1, v2}.
inline Rational bridge_det(const WeightedGraph& g1, int v1, const WeightedGraph& g2,
                           int v2) {
    if (v1 < 0 || v1 >= g1.vertex_count() || v2 < 0 || v2 >= g2.vertex_count())
        throw std::out_of_range("bridge_det: invalid vertex id");
    auto without = [](const WeightedGraph& g, int v) {
        std::vector<int> keep;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (u != v)
                keep.push_back(u);
        return induced_subgraph(g, keep);
    };
    return det_exact(g1) * det_exact(g2) -
           det_exact(without(g1, v1)) * det_exact(without(g2, v2));
}

// Coalescing two pendant edges at the same vertex always yields a singular
// graph. Constructs the graph and checks the determinant vanishes.
inline bool double_pendant_edge_is_singular(const WeightedGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::out_of_range("double_pendant_edge_is_singular: invalid vertex id");
    const int n = g.vertex_count();
    auto edges = g.edges();
    edges.emplace_back(v, n);
    edges.emplace_back(v, n + 1);
    auto weights = g.weights();
    weights.resize(n + 2, Rational());
    WeightedGraph host(n + 2, edges, std::move(weights));
    return det_exact(host).is_zero();
}

// Joining two graphs through k interior path vertices negates the
// determinant relative to k - 2 interior vertices.
inline bool path_parity_check(const WeightedGraph& g1, int v1, const WeightedGraph& g2,
                              int v2, int interior_count) {
    if (interior_count < 2)
        throw std::invalid_argument("path_parity_check: need at least 2 interior vertices");
    Rational longer = det_exact(connect_by_path(g1, v1, g2, v2, interior_count));
    Rational shorter = det_exact(connect_by_path(g1, v1, g2, v2, interior_count - 2));
    return longer == -shorter;
}

// For a pendant edge {u, v} of g (u the degree-1 endpoint), replacing it by
// a nonsingular tree coalesced at v preserves singularity status. Builds
// the replacement graph and checks both sides agree.
inline bool pendant_tree_replacement_check(const WeightedGraph& g, int u, int v,
                                           const WeightedGraph& tree, int attach) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw std::out_of_range("pendant_tree_replacement_check: invalid vertex id");
    if (attach < 0 || attach >= tree.vertex_count())
        throw std::out_of_range("pendant_tree_replacement_check: invalid attach vertex");
    if (!g.adjacent(u, v) || g.degree(u) != 1)
        throw std::invalid_argument("pendant_tree_replacement_check: {u,v} is not a pendant edge");
    if (!is_tree(tree))
        throw std::invalid_argument("pendant_tree_replacement_check: replacement is not a tree");
    if (det_exact(tree).is_zero())
        throw std::invalid_argument("pendant_tree_replacement_check: replacement tree is singular");
    std::vector<int> keep;
    for (int w = 0; w < g.vertex_count(); ++w)
        if (w != u)
            keep.push_back(w);
    WeightedGraph trunk = induced_subgraph(g, keep);
    int v_new = 0;
    while (trunk.label(v_new) != g.label(v))
        ++v_new;
    WeightedGraph replaced =
        coalesce(trunk, v_new, tree, attach, trunk.weight(v_new) + tree.weight(attach));
    return det_exact(replaced).is_zero() == det_exact(g).is_zero();
}

}  // namespace blockgraph
