#ifndef HOPSET_TREE_SPLIT_HPP
#define HOPSET_TREE_SPLIT_HPP

#include <span>
#include <vector>

#include "hopset/graph.hpp"
#include "hopset/types.hpp"

namespace hopset {

/// Result of splitting a rooted tree by a set P of nodes. Node ids are those
/// of the input tree.
struct TreeSplit {
    std::vector<Node> P;                             // sorted
    std::vector<std::vector<Node>> components;       // of T \ P, each in preorder
    std::vector<std::vector<Node>> attachments;      // per component, the (<= 2) P-nodes adjacent to it
};

/// Splits a rooted tree given by `parent` over nodes 0..n-1 in preorder
/// (parent[i] < i, parent[root] = -1). Every component of T \ P has fewer than
/// n/p nodes, |P| <= 2p and every component touches at most two P-nodes;
/// violations throw std::logic_error.
TreeSplit split_tree(std::span<const int> parent, Ratio p);

// Same for a WeightedGraph tree rooted at `root`; edge weights are ignored.
TreeSplit split_tree(const WeightedGraph& t, Node root, Ratio p);

// Preorder of t from root and the parent of each node in it (kNoNode for root).
void root_tree(const WeightedGraph& t, Node root, std::vector<Node>& order, std::vector<Node>& parent);

}  // namespace hopset

#endif  // HOPSET_TREE_SPLIT_HPP
