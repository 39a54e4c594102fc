#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "blockgraph/weighted_graph.hpp"

namespace blockgraph {

// A block: maximal connected subgraph without a cut vertex. A single edge
// is a block of size 2 and an isolated vertex a block of size 1.
struct Block {
    std::vector<int> vertex_ids;           // ascending
    bool is_clique = false;
    std::vector<int> cut_vertices_within;  // ascending

    bool operator==(const Block&) const = default;
};

// Blocks plus cut vertices of a graph, with the vertex/block incidence.
struct BlockCutForest {
    std::vector<Block> blocks;
    std::vector<int> cut_vertices;                 // ascending
    std::vector<std::vector<int>> vertex_blocks;   // per vertex: indices of blocks containing it

    bool is_cut_vertex(int v) const {
        return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
    }
    const std::vector<int>& blocks_of(int v) const {
        if (v < 0 || v >= static_cast<int>(vertex_blocks.size()))
            throw std::out_of_range("blocks_of: vertex id out of range");
        return vertex_blocks[v];
    }
};

// Standard DFS biconnectivity (iterative, with an explicit edge stack).
// Every edge ends up in exactly one block; isolated vertices become
// single-vertex blocks. Blocks are reported sorted by their vertex lists.
inline BlockCutForest decompose(const WeightedGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> nbr(n);
    for (int v = 0; v < n; ++v)
        nbr[v] = g.neighbors(v);

    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<size_t> next(n, 0);
    std::vector<bool> articulation(n, false);
    std::vector<Edge> edge_stack;
    std::vector<std::vector<int>> raw_blocks;
    int timer = 0;

    auto pop_block = [&](int u, int v) {
        // Pop edges up to and including the tree edge (u, v); their
        // endpoints form one biconnected component.
        std::vector<int> verts;
        while (!edge_stack.empty()) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e.first == u && e.second == v)
                break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        raw_blocks.push_back(std::move(verts));
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0)
            continue;
        if (nbr[root].empty()) {
            disc[root] = timer++;
            raw_blocks.push_back({root});
            continue;
        }
        int root_children = 0;
        std::vector<int> stack{root};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            int v = stack.back();
            if (next[v] < nbr[v].size()) {
                int w = nbr[v][next[v]++];
                if (w == parent[v])
                    continue;
                if (disc[w] < 0) {
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    edge_stack.emplace_back(v, w);
                    if (v == root)
                        ++root_children;
                    stack.push_back(w);
                } else if (disc[w] < disc[v]) {
                    // Back edge to an ancestor.
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                int u = parent[v];
                if (u < 0)
                    continue;
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    pop_block(u, v);
                    if (u != root)
                        articulation[u] = true;
                }
            }
        }
        if (root_children >= 2)
            articulation[root] = true;
    }

    std::sort(raw_blocks.begin(), raw_blocks.end());

    BlockCutForest forest;
    forest.vertex_blocks.resize(n);
    for (auto& verts : raw_blocks) {
        Block b;
        b.is_clique = true;
        for (size_t i = 0; i < verts.size() && b.is_clique; ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                if (!g.adjacent(verts[i], verts[j])) {
                    b.is_clique = false;
                    break;
                }
        for (int v : verts) {
            forest.vertex_blocks[v].push_back(static_cast<int>(forest.blocks.size()));
            if (articulation[v])
                b.cut_vertices_within.push_back(v);
        }
        b.vertex_ids = std::move(verts);
        forest.blocks.push_back(std::move(b));
    }
    for (int v = 0; v < n; ++v)
        if (articulation[v])
            forest.cut_vertices.push_back(v);
    return forest;
}

// True iff every block induces a complete subgraph.
inline bool is_block_graph(const WeightedGraph& g) {
    for (const auto& b : decompose(g).blocks)
        if (!b.is_clique)
            return false;
    return true;
}

struct PendantBlock {
    int block_index = -1;
    std::optional<int> cut_vertex;  // none: the block is a whole component

    bool operator==(const PendantBlock&) const = default;
};

// Blocks containing at most one cut vertex, in block-index order. A block
// with no cut vertex is an entire component and reported with no cut vertex.
inline std::vector<PendantBlock> pendant_blocks(const BlockCutForest& f) {
    std::vector<PendantBlock> out;
    for (size_t i = 0; i < f.blocks.size(); ++i) {
        const auto& cuts = f.blocks[i].cut_vertices_within;
        if (cuts.size() > 1)
            continue;
        PendantBlock p;
        p.block_index = static_cast<int>(i);
        if (cuts.size() == 1)
            p.cut_vertex = cuts.front();
        out.push_back(p);
    }
    return out;
}

// Vertices of the block that are not cut vertices of the whole graph.
inline std::vector<int> non_cut_vertices(const BlockCutForest& f, int block_index) {
    if (block_index < 0 || block_index >= static_cast<int>(f.blocks.size()))
        throw std::out_of_range("non_cut_vertices: invalid block index");
    std::vector<int> out;
    for (int v : f.blocks[block_index].vertex_ids)
        if (!f.is_cut_vertex(v))
            out.push_back(v);
    return out;
}

}  // namespace blockgraph
