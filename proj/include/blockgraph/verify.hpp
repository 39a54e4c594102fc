#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "blockgraph/determinant.hpp"
#include "blockgraph/families.hpp"
#include "blockgraph/graph_io.hpp"
#include "blockgraph/reduction.hpp"

namespace blockgraph::verify {

struct CheckResult {
    std::string id;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Options {
    std::uint64_t seed = 12345;
    int samples = 10000;
};

// Curated example graphs rebuilt from their defining parameters. Expected
// verdicts are cross-checked against the determinant oracle in the fixture
// criterion below.
namespace fixtures {

// K4 with two pendant K4 blocks at every vertex; the smallest uniform
// configuration hitting the singularity law exactly.
inline WeightedGraph uniform_pendant_cliques_442() {
    return make_nmk({4, 4, 2});
}

// Five-node tree whose vertices carry coalesced cliques; satisfies the
// diagonal-dominance condition at every node.
inline WeightedGraph clique_decorated_tree() {
    TreeSpec tree{5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}};
    return make_tree_with_cliques(tree, {{4}, {3, 4}, {3}, {4, 4}, {3, 3}});
}

inline TreeSpec clique_decorated_tree_skeleton() {
    return {5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}};
}

inline std::vector<std::vector<int>> clique_decorated_tree_attachments() {
    return {{4}, {3, 4}, {3}, {4, 4}, {3, 3}};
}

// Central K4 with two pendant K4 blocks at three of its vertices and the
// fourth vertex left free: a B31 block graph.
inline WeightedGraph pendant_cliques_with_free_central_vertex() {
    return make_coalesced_cliques({4, {{4, 4}, {4, 4}, {4, 4}, {}}});
}

// Same construction with a single pendant K4 at the fourth vertex as well;
// every central vertex becomes a cut vertex, yet the graph is nonsingular.
inline WeightedGraph pendant_cliques_all_vertices_attached() {
    return make_coalesced_cliques({4, {{4, 4}, {4, 4}, {4, 4}, {4}}});
}

// Star-shaped tree of four B31 parts joined by pairwise disjoint skeleton
// edges; meets both nonsingularity conditions.
inline TreeOfBlockGraphsSpec star_of_b31_parts_spec() {
    WeightedGraph hub(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                          {0, 6}, {0, 7}, {6, 7}, {2, 4}, {2, 5}, {4, 5}});
    WeightedGraph triangle = make_clique(3);
    WeightedGraph wing(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                           {1, 4}, {1, 5}, {4, 5}, {0, 6}, {0, 7}, {6, 7}});
    TreeOfBlockGraphsSpec spec;
    spec.node_count = 4;
    spec.parts = {hub, triangle, wing, triangle};
    spec.edges = {{0, 1, 5, 2}, {0, 2, 6, 0}, {0, 3, 1, 1}};
    return spec;
}

inline WeightedGraph star_of_b31_parts() {
    return make_tree_of_block_graphs(star_of_b31_parts_spec());
}

// Block graph whose pendant edges have been extended by paths and small
// trees; stays nonsingular.
inline WeightedGraph bridged_graph_with_tree_pendants() {
    return WeightedGraph(
        21, {{10, 17}, {10, 20}, {18, 17}, {0, 2},  {0, 3},  {0, 1},  {2, 1},
             {3, 1},   {2, 3},   {5, 19},  {4, 5},  {4, 6},  {4, 7},  {5, 6},
             {5, 7},   {6, 7},   {5, 8},   {5, 9},  {8, 9},  {5, 10}, {2, 11},
             {2, 12},  {12, 11}, {13, 2},  {0, 4},  {0, 14}, {0, 15}, {4, 15},
             {4, 14},  {14, 15}, {0, 16}});
}

// Central triangle with four pendant triangles whose skeleton edges share
// central vertices: singular.
inline TreeOfBlockGraphsSpec shared_skeleton_triangles_spec() {
    WeightedGraph triangle = make_clique(3);
    TreeOfBlockGraphsSpec spec;
    spec.node_count = 5;
    spec.parts = {triangle, triangle, triangle, triangle, triangle};
    spec.edges = {{0, 1, 1, 0}, {0, 2, 0, 0}, {0, 3, 0, 0}, {0, 4, 1, 0}};
    return spec;
}

inline WeightedGraph shared_skeleton_triangles() {
    return make_tree_of_block_graphs(shared_skeleton_triangles_spec());
}

// Two B31 parts joined by one skeleton edge that turns a triangle into a
// block made of cut vertices only: singular.
inline TreeOfBlockGraphsSpec fully_cut_block_spec() {
    WeightedGraph small(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4},
                            {1, 5}, {1, 6}, {5, 6}});
    WeightedGraph large(
        19, {{0, 1},   {0, 2},   {1, 2},   {2, 3},   {3, 4},   {4, 2},   {1, 5},
             {5, 6},   {6, 1},   {1, 7},   {1, 8},   {1, 9},   {7, 8},   {7, 9},
             {8, 9},   {1, 10},  {1, 11},  {1, 12},  {10, 11}, {10, 12}, {11, 12},
             {2, 13},  {2, 14},  {2, 15},  {13, 14}, {13, 15}, {14, 15}, {2, 16},
             {2, 17},  {2, 18},  {16, 17}, {16, 18}, {17, 18}});
    TreeOfBlockGraphsSpec spec;
    spec.node_count = 2;
    spec.parts = {small, large};
    spec.edges = {{0, 1, 0, 0}};
    return spec;
}

inline WeightedGraph fully_cut_block() {
    return make_tree_of_block_graphs(fully_cut_block_spec());
}

}  // namespace fixtures

namespace detail {

inline int bounded(std::mt19937_64& rng, int n) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

inline WeightedGraph strip_weights(const WeightedGraph& g) {
    return WeightedGraph(g.vertex_count(), g.edges());
}

}  // namespace detail

// Exhaustive oracle equivalence: on every connected zero-weight block graph
// with at most 8 vertices, the reduction verdict matches the determinant.
inline CheckResult oracle_equivalence_exhaustive() {
    CheckResult r{"A1", "oracle-equivalence-exhaustive", false, ""};
    int checked = 0, disagreements = 0;
    for (const auto& g : enumerate_block_graphs(8)) {
        ++checked;
        if (decide(g).singular != det_exact(g).is_zero())
            ++disagreements;
    }
    r.passed = disagreements == 0 && checked > 0;
    r.detail = std::to_string(checked) + " graphs, " + std::to_string(disagreements) +
               " disagreements";
    return r;
}

// Randomized oracle equivalence on weighted block graphs of up to 12
// vertices drawn from the {0, 1, 1/2, -1, 2} weight pool.
inline CheckResult oracle_equivalence_randomized(const Options& options) {
    CheckResult r{"A2", "oracle-equivalence-randomized", false, ""};
    int disagreements = 0;
    for (int i = 0; i < options.samples; ++i) {
        WeightedGraph g = random_block_graph(options.seed + static_cast<std::uint64_t>(i), 12);
        if (decide(g).singular != det_exact(g).is_zero())
            ++disagreements;
    }
    r.passed = disagreements == 0;
    r.detail = std::to_string(options.samples) + " samples, " +
               std::to_string(disagreements) + " disagreements";
    return r;
}

// The uniform pendant-clique family is singular exactly when
// k (m - 1) = (n - 1)(m - 2), over the whole n <= 8, m <= 8, k <= 4 sweep.
inline CheckResult nmk_singularity_law() {
    CheckResult r{"A3", "nmk-singularity-law", false, ""};
    int checked = 0, violations = 0;
    for (int n = 2; n <= 8; ++n)
        for (int m = 3; m <= 8; ++m)
            for (int k = 1; k <= 4; ++k) {
                NmkSpec spec{n, m, k};
                ++checked;
                if (decide(make_nmk(spec)).singular != predict_nmk_singular(spec))
                    ++violations;
            }
    bool anchor = decide(make_nmk({4, 4, 2})).singular;
    r.passed = violations == 0 && anchor;
    r.detail = std::to_string(checked) + " specs, " + std::to_string(violations) +
               " violations";
    return r;
}

// Every tree with at most 10 vertices is nonsingular exactly when it has a
// perfect matching.
inline CheckResult forest_matching_law() {
    CheckResult r{"A4", "forest-matching-law", false, ""};
    int trees = 0, violations = 0;
    for (const auto& g : enumerate_block_graphs(10, 10)) {
        if (!is_forest(g))
            continue;
        ++trees;
        if (decide(g).singular == forest_has_perfect_matching(g))
            ++violations;
    }
    r.passed = violations == 0 && trees > 0;
    r.detail = std::to_string(trees) + " trees, " + std::to_string(violations) +
               " violations";
    return r;
}

// gamma of n zero weights is exactly -n/(n-1) for 2 <= n <= 20.
inline CheckResult gamma_closed_form() {
    CheckResult r{"A5", "gamma-closed-form", false, ""};
    int violations = 0;
    for (int n = 2; n <= 20; ++n) {
        std::vector<Rational> zeros(n, Rational(0));
        if (gamma_of(zeros) != Rational(-n, n - 1))
            ++violations;
    }
    r.passed = violations == 0;
    r.detail = "n in [2,20], " + std::to_string(violations) + " violations";
    return r;
}

// Determinant identities for composed graphs: coalescence and bridge
// formulas, pendant-edge negation, even-path parity, and the double
// pendant edge, all on zero-weight instances and all exact.
inline CheckResult determinant_identities(const Options& options) {
    CheckResult r{"A6", "determinant-identities", false, ""};
    std::mt19937_64 rng(options.seed);
    std::vector<Rational> zero_pool{Rational(0)};
    auto sample = [&](int max_vertices) {
        return random_block_graph(rng(), max_vertices, zero_pool);
    };
    int violations = 0;

    for (int i = 0; i < 1000; ++i) {
        WeightedGraph g1 = sample(12), g2 = sample(12);
        int v1 = detail::bounded(rng, g1.vertex_count());
        int v2 = detail::bounded(rng, g2.vertex_count());
        Rational merged = g1.weight(v1) + g2.weight(v2);
        if (coalescence_det(g1, v1, g2, v2) != det_exact(coalesce(g1, v1, g2, v2, merged)))
            ++violations;
    }
    for (int i = 0; i < 1000; ++i) {
        WeightedGraph g1 = sample(12), g2 = sample(12);
        int v1 = detail::bounded(rng, g1.vertex_count());
        int v2 = detail::bounded(rng, g2.vertex_count());
        if (bridge_det(g1, v1, g2, v2) != det_exact(connect_by_edge(g1, v1, g2, v2)))
            ++violations;
    }
    for (int i = 0; i < 1000; ++i) {
        WeightedGraph host = sample(12);
        int v = detail::bounded(rng, host.vertex_count());
        WeightedGraph g = attach_clique(host, v, 2);  // pendant edge {v, u}
        int u = g.vertex_count() - 1;
        std::vector<int> keep;
        for (int w = 0; w < g.vertex_count(); ++w)
            if (w != u && w != v)
                keep.push_back(w);
        if (det_exact(induced_subgraph(g, keep)) != -det_exact(g))
            ++violations;
    }
    for (int i = 0; i < 200; ++i) {
        WeightedGraph g1 = sample(10), g2 = sample(10);
        int v1 = detail::bounded(rng, g1.vertex_count());
        int v2 = detail::bounded(rng, g2.vertex_count());
        for (int k = 2; k <= 5; ++k)
            if (!path_parity_check(g1, v1, g2, v2, k))
                ++violations;
    }
    for (int i = 0; i < 200; ++i) {
        WeightedGraph host = sample(12);
        int v = detail::bounded(rng, host.vertex_count());
        if (!double_pendant_edge_is_singular(host, v))
            ++violations;
    }
    r.passed = violations == 0;
    r.detail = "3400 identity checks, " + std::to_string(violations) + " violations";
    return r;
}

// The two weighted sufficient conditions imply a nonsingular verdict, and
// the B31 shape implies one under zero weights.
inline CheckResult sufficient_conditions(const Options& options) {
    CheckResult r{"A7", "sufficient-conditions", false, ""};
    int applied = 0, violations = 0;
    auto check = [&](const WeightedGraph& g) {
        bool singular = decide(g).singular;
        if (check_sufficient_tau(g)) {
            ++applied;
            if (singular)
                ++violations;
        }
        if (check_sufficient_zero_vertex(g)) {
            ++applied;
            if (singular)
                ++violations;
        }
        WeightedGraph bare = detail::strip_weights(g);
        if (is_b31(bare)) {
            ++applied;
            if (decide(bare).singular)
                ++violations;
        }
    };
    for (const auto& g : enumerate_block_graphs(8))
        check(g);
    std::mt19937_64 rng(options.seed + 7);
    for (int i = 0; i < 2000; ++i)
        check(random_block_graph(rng(), 12));
    r.passed = violations == 0 && applied > 0;
    r.detail = std::to_string(applied) + " implications, " + std::to_string(violations) +
               " violations";
    return r;
}

// The verdict does not depend on the reduction order: 100 graphs, 20 random
// maximal orders each.
inline CheckResult order_independence(const Options& options) {
    CheckResult r{"A8", "order-independence", false, ""};
    std::mt19937_64 rng(options.seed + 31);
    int violations = 0;
    for (int i = 0; i < 100; ++i) {
        WeightedGraph g = random_block_graph(rng(), 12);
        bool baseline = decide(g).singular;
        for (int j = 0; j < 20; ++j) {
            DecideOptions opts;
            opts.random_order_seed = rng();
            if (decide(g, opts).singular != baseline)
                ++violations;
        }
    }
    r.passed = violations == 0;
    r.detail = "100 graphs x 20 orders, " + std::to_string(violations) + " violations";
    return r;
}

// The curated fixture graphs decide exactly as expected, and every verdict
// matches the determinant oracle.
inline CheckResult fixture_graphs() {
    CheckResult r{"A9", "fixture-graphs", false, ""};
    struct Expectation {
        const char* name;
        WeightedGraph graph;
        bool singular;
    };
    std::vector<Expectation> cases;
    cases.push_back({"uniform-pendant-cliques-442",
                     fixtures::uniform_pendant_cliques_442(), true});
    cases.push_back({"clique-decorated-tree", fixtures::clique_decorated_tree(), false});
    cases.push_back({"pendant-cliques-with-free-central-vertex",
                     fixtures::pendant_cliques_with_free_central_vertex(), false});
    cases.push_back({"pendant-cliques-all-vertices-attached",
                     fixtures::pendant_cliques_all_vertices_attached(), false});
    cases.push_back({"star-of-b31-parts", fixtures::star_of_b31_parts(), false});
    cases.push_back({"bridged-graph-with-tree-pendants",
                     fixtures::bridged_graph_with_tree_pendants(), false});
    cases.push_back({"shared-skeleton-triangles",
                     fixtures::shared_skeleton_triangles(), true});
    cases.push_back({"fully-cut-block", fixtures::fully_cut_block(), true});
    int violations = 0;
    std::string failed;
    for (const auto& f : cases) {
        bool verdict = decide(f.graph).singular;
        bool oracle = det_exact(f.graph).is_zero();
        if (verdict != f.singular || oracle != f.singular) {
            ++violations;
            failed += std::string(" ") + f.name;
        }
    }
    bool b31_shape = is_b31(fixtures::pendant_cliques_with_free_central_vertex());
    r.passed = violations == 0 && b31_shape;
    r.detail = std::to_string(cases.size()) + " fixtures" +
               (violations ? (std::string(", failed:") + failed) : std::string(", all as expected"));
    return r;
}

inline std::vector<CheckResult> run_all(const Options& options) {
    return {oracle_equivalence_exhaustive(),
            oracle_equivalence_randomized(options),
            nmk_singularity_law(),
            forest_matching_law(),
            gamma_closed_form(),
            determinant_identities(options),
            sufficient_conditions(options),
            order_independence(options),
            fixture_graphs()};
}

// Suites exposed by the command line: oracle (equivalence and order
// independence), identities (closed forms and determinant identities),
// families (family laws, sufficiency, fixtures), or all.
inline std::vector<CheckResult> run_suite(std::string_view suite, const Options& options) {
    if (suite == "oracle")
        return {oracle_equivalence_exhaustive(), oracle_equivalence_randomized(options),
                order_independence(options)};
    if (suite == "identities")
        return {gamma_closed_form(), determinant_identities(options)};
    if (suite == "families")
        return {nmk_singularity_law(), forest_matching_law(), sufficient_conditions(options),
                fixture_graphs()};
    if (suite == "all")
        return run_all(options);
    throw std::invalid_argument("unknown verification suite '" + std::string(suite) + "'");
}

}  // namespace blockgraph::verify
