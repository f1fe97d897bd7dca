#ifndef HOPSET_TREE_HOPSET_HPP
#define HOPSET_TREE_HOPSET_HPP

#include <vector>

#include "hopset/graph.hpp"
#include "hopset/hopset.hpp"
#include "hopset/oracle.hpp"

namespace hopset {

/// Exact tree distances by lowest common ancestors (binary lifting).
class TreeDistance {
public:
    explicit TreeDistance(const WeightedGraph& t, Node root = 0);
    Weight operator()(Node u, Node v) const;
    Node lca(Node u, Node v) const;

private:
    std::vector<std::vector<Node>> up_;  // up_[k][v]: 2^k-th ancestor
    std::vector<std::uint32_t> depth_;
    std::vector<Weight> dist_;
};

// Rooted forest over global node ids; `parent` holds local indices, -1 for roots,
// and nodes are listed so that every parent precedes its children.
struct LocalForest {
    std::vector<Node> node;
    std::vector<int> parent;
};

// Candidate pairs of an h-hopset of a forest whose edges are virtual (not
// necessarily graph edges); the forest edges themselves are not emitted.
std::vector<PairTag> forest_hopset_pairs(const LocalForest& f, int h);

/// h-hopset of a weighted tree. For h = 3 shortcuts to split nodes are tagged
/// FirstLast and the split-forest hopsets Middle.
Hopset tree_hopset(const WeightedGraph& t, int h);

struct LinearTreeHopset {
    Hopset hopset;
    int hopbound = 0;  // 2(α(n)+1)
};

// O(n)-size hopset with hopbound 2(α(n)+1).
LinearTreeHopset linear_tree_hopset(const WeightedGraph& t);

// Three-hop oracle from the h = 3 construction: split-node shortcuts become
// arcs u -> x, everything else goes to the middle table.
ThreeHopOracle tree_three_hop_oracle(const WeightedGraph& t);

}  // namespace hopset

#endif  // HOPSET_TREE_HOPSET_HPP
