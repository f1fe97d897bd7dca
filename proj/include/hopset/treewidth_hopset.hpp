#ifndef HOPSET_TREEWIDTH_HOPSET_HPP
#define HOPSET_TREEWIDTH_HOPSET_HPP

#include "hopset/hopset.hpp"
#include "hopset/oracle.hpp"
#include "hopset/tree_decomposition.hpp"

namespace hopset {

struct TwHopset {
    Hopset hopset;
    // Per class, after deduplication; a pair produced by several classes is
    // counted once, as bag before separator before tree-hopset.
    std::size_t tree_edges = 0;
    std::size_t separator_edges = 0;
    std::size_t bag_edges = 0;
};

/// h-hopset (h >= 2) from a normalized decomposition. For h = 3 separator and
/// bag edges are tagged FirstLast and tree-hopset edges Middle.
TwHopset tw_hopset(const WeightedGraph& g, const TreeDecomposition& td, int h);

// Single split with p = N/α(N) over the N bags and a 2α(N)-hopset of the
// selected bags; hopbound 2(α(N)+1).
TwHopset tw_linear_hopset(const WeightedGraph& g, const TreeDecomposition& td);

// Three-hop oracle from the h = 3 construction: separator and bag edges are
// arcs u -> x, tree-hopset edges go to the middle table.
ThreeHopOracle tw_three_hop_oracle(const WeightedGraph& g, const TreeDecomposition& td);

}  // namespace hopset

#endif  // HOPSET_TREEWIDTH_HOPSET_HPP
