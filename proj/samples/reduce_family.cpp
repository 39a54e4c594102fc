// Library walkthrough: build a pendant-clique family, decide its
// singularity with a full reduction trace, and cross-check the verdict
// against the exact determinant.

#include <iostream>

#include "blockgraph/blockgraph.hpp"

int main() {
    using namespace blockgraph;

    for (int k = 1; k <= 3; ++k) {
        NmkSpec spec{4, 4, k};
        WeightedGraph g = make_nmk(spec);
        Verdict verdict = decide(g);
        std::cout << "central K" << spec.n << " with " << k
                  << " pendant K" << spec.m << " per vertex: "
                  << (verdict.singular ? "singular" : "nonsingular")
                  << "  (law predicts "
                  << (predict_nmk_singular(spec) ? "singular" : "nonsingular")
                  << ", determinant " << det_exact(g).str() << ")\n";
        if (k == 2)
            std::cout << format_trace(verdict);
    }
    return 0;
}
