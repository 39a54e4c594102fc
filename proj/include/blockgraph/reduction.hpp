#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockgraph/block_decomposition.hpp"
#include "blockgraph/weighted_graph.hpp"

namespace blockgraph {

// Sum of 1/(1 - x_i) over a weight list; undefined (nullopt) as soon as
// some entry equals 1. Undefined is an ordinary value here, not an error:
// the classification below branches on it.
inline std::optional<Rational> t_of(const std::vector<Rational>& weights) {
    const Rational one(1);
    for (const auto& w : weights)
        if (w == one)
            return std::nullopt;
    Rational sum;
    for (const auto& w : weights)
        sum += Rational(1) / (one - w);
    return sum;
}

// t over the weights of the block's non-cut vertices.
inline std::optional<Rational> tau_of_block(const WeightedGraph& g,
                                            const BlockCutForest& f, int block_index) {
    std::vector<Rational> weights;
    for (int v : non_cut_vertices(f, block_index))
        weights.push_back(g.weight(v));
    return t_of(weights);
}

// Weight correction added to the cut vertex when a pendant clique with
// these non-cut weights is contracted: -1 when exactly one entry is 1,
// otherwise -t/(t-1). Not defined when the clique matrix is singular
// (two or more ones, or t equal to 1).
inline Rational gamma_of(const std::vector<Rational>& weights) {
    const Rational one(1);
    int ones = 0;
    for (const auto& w : weights)
        if (w == one)
            ++ones;
    if (ones == 1)
        return Rational(-1);
    if (ones > 1)
        throw std::domain_error("gamma_of: two or more weights equal 1, clique is singular");
    Rational t = *t_of(weights);
    if (t == one)
        throw std::domain_error("gamma_of: t(x) = 1, clique is singular");
    return -t / (t - one);
}

enum class BlockClassTag {
    TwoOrMoreOnes,   // at least two non-cut weights equal 1
    ExactlyOneOne,   // exactly one non-cut weight equals 1
    TauEqualsOne,    // no ones and tau = 1
    TauNotOne,       // no ones and tau != 1
};

struct BlockClass {
    BlockClassTag tag{};
    std::optional<Rational> tau;  // set whenever no non-cut weight equals 1
};

// Case split driving the reduction, computed over non-cut weights only.
// The block must be pendant (at most one cut vertex).
inline BlockClass classify_pendant_block(const WeightedGraph& g, const BlockCutForest& f,
                                         int block_index) {
    if (block_index < 0 || block_index >= static_cast<int>(f.blocks.size()))
        throw std::out_of_range("classify_pendant_block: invalid block index");
    if (f.blocks[block_index].cut_vertices_within.size() > 1)
        throw std::invalid_argument("classify_pendant_block: block is not pendant");
    const Rational one(1);
    int ones = 0;
    for (int v : non_cut_vertices(f, block_index))
        if (g.weight(v) == one)
            ++ones;
    if (ones >= 2)
        return {BlockClassTag::TwoOrMoreOnes, std::nullopt};
    if (ones == 1)
        return {BlockClassTag::ExactlyOneOne, std::nullopt};
    Rational tau = *tau_of_block(g, f, block_index);
    if (tau == one)
        return {BlockClassTag::TauEqualsOne, tau};
    return {BlockClassTag::TauNotOne, tau};
}

// Delete every vertex of the pendant block, cut vertex included. Only legal
// when no non-cut weight is 1 and tau = 1; may disconnect the graph.
inline WeightedGraph pb_delete(const WeightedGraph& g, const BlockCutForest& f,
                               int block_index) {
    BlockClass cls = classify_pendant_block(g, f, block_index);
    if (cls.tag != BlockClassTag::TauEqualsOne)
        throw std::invalid_argument("pb_delete: block does not have tau = 1");
    const Block& b = f.blocks[block_index];
    if (b.cut_vertices_within.size() != 1)
        throw std::invalid_argument("pb_delete: block has no cut vertex");
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!std::binary_search(b.vertex_ids.begin(), b.vertex_ids.end(), v))
            keep.push_back(v);
    return induced_subgraph(g, keep);
}

// Merge the pendant block into its cut vertex k: the non-cut vertices are
// removed and gamma of their weights is added to the weight of k. Edges of
// k to the rest of the graph are unchanged.
inline WeightedGraph pb_contract(const WeightedGraph& g, const BlockCutForest& f,
                                 int block_index) {
    BlockClass cls = classify_pendant_block(g, f, block_index);
    if (cls.tag != BlockClassTag::ExactlyOneOne && cls.tag != BlockClassTag::TauNotOne)
        throw std::invalid_argument("pb_contract: block class does not admit contraction");
    const Block& b = f.blocks[block_index];
    if (b.cut_vertices_within.size() != 1)
        throw std::invalid_argument("pb_contract: block has no cut vertex");
    const int k = b.cut_vertices_within.front();
    std::vector<Rational> non_cut_weights;
    std::vector<int> removed = non_cut_vertices(f, block_index);
    for (int v : removed)
        non_cut_weights.push_back(g.weight(v));
    Rational gamma = gamma_of(non_cut_weights);
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!std::binary_search(removed.begin(), removed.end(), v))
            keep.push_back(v);
    WeightedGraph h = induced_subgraph(g, keep);
    int k_new = 0;
    while (h.label(k_new) != g.label(k))
        ++k_new;
    return with_weight(h, k_new, h.weight(k_new) + gamma);
}

enum class StepKind { Delete, Contract };

// One reduction move, recorded with the original labels of the vertices it
// touched. Delete steps carry tau = 1; Contract steps carry the applied
// gamma (and tau when it was defined).
struct ReductionStep {
    StepKind kind{};
    std::vector<int> block_labels;
    std::optional<int> cut_label;
    std::optional<Rational> tau;
    std::optional<Rational> gamma;
};

enum class Witness {
    CliqueComponentTauOne,
    BlockWithTwoOnes,
    AllComponentsNonsingularClique,
};

inline std::string to_string(Witness w) {
    switch (w) {
        case Witness::CliqueComponentTauOne: return "CliqueComponentTauOne";
        case Witness::BlockWithTwoOnes: return "BlockWithTwoOnes";
        case Witness::AllComponentsNonsingularClique:
            return "AllComponentsNonsingularClique";
    }
    return "?";
}

struct Verdict {
    bool singular = false;
    Witness witness = Witness::AllComponentsNonsingularClique;
    std::vector<ReductionStep> trace;
};

struct DecideOptions {
    // When set, pendant blocks (and components) are picked at random from
    // this seed instead of the deterministic order. The verdict must not
    // depend on the choice; only the trace may differ.
    std::optional<std::uint64_t> random_order_seed;
};

namespace detail {

inline std::uint64_t bounded_random(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n;
}

inline ReductionStep make_step(StepKind kind, const WeightedGraph& g, const Block& b,
                               std::optional<Rational> tau, std::optional<Rational> gamma) {
    ReductionStep step;
    step.kind = kind;
    for (int v : b.vertex_ids)
        step.block_labels.push_back(g.label(v));
    std::sort(step.block_labels.begin(), step.block_labels.end());
    if (!b.cut_vertices_within.empty())
        step.cut_label = g.label(b.cut_vertices_within.front());
    step.tau = std::move(tau);
    step.gamma = std::move(gamma);
    return step;
}

}  // namespace detail

// Full singularity decision for a vertex-weighted block graph.
//
// Components are processed one at a time. A component that is a single
// clique is settled directly: two or more weights equal to 1 make it
// singular, exactly one keeps it nonsingular, and otherwise it is singular
// exactly when t of its weights is 1. Any other component is reduced by one
// pendant-block move per round: tau = 1 deletes the block, every other
// admissible class contracts it into the cut vertex. A block with two
// non-cut weights equal to 1 anywhere settles the whole graph as singular
// immediately. Every comparison against 1 is exact rational equality.
inline Verdict decide(const WeightedGraph& g, const DecideOptions& options = {}) {
    if (!is_block_graph(g))
        throw std::invalid_argument("decide: input is not a block graph");
    std::optional<std::mt19937_64> rng;
    if (options.random_order_seed)
        rng.emplace(*options.random_order_seed);

    const Rational one(1);
    Verdict verdict;
    std::vector<WeightedGraph> work = components(g);
    while (!work.empty()) {
        size_t pick = rng ? static_cast<size_t>(detail::bounded_random(*rng, work.size()))
                          : 0;
        WeightedGraph h = std::move(work[pick]);
        work.erase(work.begin() + static_cast<long>(pick));

        BlockCutForest f = decompose(h);

        // Two non-cut weights equal to 1 in any block settle the verdict.
        bool two_ones = false;
        for (size_t b = 0; b < f.blocks.size() && !two_ones; ++b) {
            int ones = 0;
            for (int v : non_cut_vertices(f, static_cast<int>(b)))
                if (h.weight(v) == one)
                    ++ones;
            two_ones = ones >= 2;
        }
        if (two_ones) {
            verdict.singular = true;
            verdict.witness = Witness::BlockWithTwoOnes;
            return verdict;
        }

        if (f.blocks.size() <= 1) {
            // Single-clique (possibly single-vertex) component.
            int ones = 0;
            for (const auto& w : h.weights())
                if (w == one)
                    ++ones;
            if (ones == 1)
                continue;  // nonsingular clique
            auto t = t_of(h.weights());
            if (*t == one) {
                verdict.singular = true;
                verdict.witness = Witness::CliqueComponentTauOne;
                return verdict;
            }
            continue;
        }

        // Pick a pendant block: deterministically the one with the lowest
        // cut-vertex label (ties by block label set), or at random.
        auto pendants = pendant_blocks(f);
        size_t chosen = 0;
        if (rng) {
            chosen = static_cast<size_t>(detail::bounded_random(*rng, pendants.size()));
        } else {
            auto key = [&](const PendantBlock& p) {
                std::vector<int> labels;
                for (int v : f.blocks[p.block_index].vertex_ids)
                    labels.push_back(h.label(v));
                std::sort(labels.begin(), labels.end());
                return std::make_pair(h.label(*p.cut_vertex), std::move(labels));
            };
            auto best = key(pendants[0]);
            for (size_t i = 1; i < pendants.size(); ++i) {
                auto candidate = key(pendants[i]);
                if (candidate < best) {
                    best = std::move(candidate);
                    chosen = i;
                }
            }
        }
        const int b = pendants[chosen].block_index;
        BlockClass cls = classify_pendant_block(h, f, b);
        switch (cls.tag) {
            case BlockClassTag::TwoOrMoreOnes:
                verdict.singular = true;
                verdict.witness = Witness::BlockWithTwoOnes;
                return verdict;
            case BlockClassTag::TauEqualsOne: {
                verdict.trace.push_back(detail::make_step(StepKind::Delete, h,
                                                          f.blocks[b], cls.tau,
                                                          std::nullopt));
                WeightedGraph reduced = pb_delete(h, f, b);
                auto parts = components(reduced);
                work.insert(work.begin(), parts.begin(), parts.end());
                break;
            }
            case BlockClassTag::ExactlyOneOne:
            case BlockClassTag::TauNotOne: {
                Rational gamma = cls.tau ? -(*cls.tau) / (*cls.tau - one) : Rational(-1);
                verdict.trace.push_back(detail::make_step(StepKind::Contract, h,
                                                          f.blocks[b], cls.tau, gamma));
                work.insert(work.begin(), pb_contract(h, f, b));
                break;
            }
        }
    }
    verdict.singular = false;
    verdict.witness = Witness::AllComponentsNonsingularClique;
    return verdict;
}

// Sufficient condition on tau: no weight equals 1, every cut vertex has
// weight below 1, and every block has tau above 1. Guarantees the graph is
// nonsingular; the converse does not hold.
inline bool check_sufficient_tau(const WeightedGraph& g) {
    if (!is_block_graph(g))
        throw std::invalid_argument("check_sufficient_tau: input is not a block graph");
    const Rational one(1);
    for (const auto& w : g.weights())
        if (w == one)
            return false;
    BlockCutForest f = decompose(g);
    for (int v : f.cut_vertices)
        if (!(g.weight(v) < one))
            return false;
    for (size_t b = 0; b < f.blocks.size(); ++b) {
        auto tau = tau_of_block(g, f, static_cast<int>(b));
        if (!tau || !(*tau > one))
            return false;
    }
    return true;
}

// Sufficient condition via zero-weight vertices: all weights below 1, every
// block has at least 3 vertices, and every block has a zero-weight non-cut
// vertex. Guarantees the graph is nonsingular.
inline bool check_sufficient_zero_vertex(const WeightedGraph& g) {
    if (!is_block_graph(g))
        throw std::invalid_argument(
            "check_sufficient_zero_vertex: input is not a block graph");
    const Rational one(1);
    for (const auto& w : g.weights())
        if (!(w < one))
            return false;
    BlockCutForest f = decompose(g);
    for (size_t b = 0; b < f.blocks.size(); ++b) {
        if (f.blocks[b].vertex_ids.size() < 3)
            return false;
        bool has_zero = false;
        for (int v : non_cut_vertices(f, static_cast<int>(b)))
            if (g.weight(v).is_zero())
                has_zero = true;
        if (!has_zero)
            return false;
    }
    return true;
}

// One line per step:
//   DELETE block={labels} cut=<label> tau=1
//   CONTRACT block={labels} cut=<label> gamma=<p/q>
inline std::string to_string(const ReductionStep& step) {
    std::ostringstream out;
    out << (step.kind == StepKind::Delete ? "DELETE" : "CONTRACT");
    out << " block={";
    for (size_t i = 0; i < step.block_labels.size(); ++i) {
        if (i)
            out << ",";
        out << step.block_labels[i];
    }
    out << "}";
    if (step.cut_label)
        out << " cut=" << *step.cut_label;
    if (step.kind == StepKind::Delete)
        out << " tau=1";
    else if (step.gamma)
        out << " gamma=" << step.gamma->str();
    return out.str();
}

inline std::string verdict_line(const Verdict& v) {
    return std::string("VERDICT ") + (v.singular ? "singular" : "nonsingular") +
           " witness=" + to_string(v.witness);
}

// Steps in execution order followed by the verdict line.
inline std::string format_trace(const Verdict& v) {
    std::string out;
    for (const auto& step : v.trace)
        out += to_string(step) + "\n";
    out += verdict_line(v) + "\n";
    return out;
}

}  // namespace blockgraph
