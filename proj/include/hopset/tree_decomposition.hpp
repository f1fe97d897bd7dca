#ifndef HOPSET_TREE_DECOMPOSITION_HPP
#define HOPSET_TREE_DECOMPOSITION_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hopset/graph.hpp"

namespace hopset {

/// Bags over graph nodes plus the bag tree, rooted at `root`.
struct TreeDecomposition {
    std::vector<std::vector<Node>> bags;                    // each sorted
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // bag tree
    std::size_t root = 0;

    std::size_t width() const;  // max bag size - 1
};

/// Rooted view of a decomposition: bags in preorder with parent indices.
struct RootedTd {
    std::vector<std::size_t> order;  // bag ids, parents first
    std::vector<int> parent;         // per bag id, -1 for the root
    std::vector<std::size_t> root_bag;  // per graph node: R_u, the bag containing u closest to the root
};

RootedTd root_td(const TreeDecomposition& td, std::size_t num_nodes);

// Throws InvalidDecomposition naming the failed property and a witness.
void validate_td(const WeightedGraph& g, const TreeDecomposition& td);

/// Every bag gets exactly t+1 nodes and neighbouring bags share exactly t.
/// Bags are padded from their parent, equal neighbours are merged and chains
/// are inserted where neighbours share fewer than t nodes. The root is a
/// largest bag of the input.
TreeDecomposition normalize_td(const WeightedGraph& g, const TreeDecomposition& td);
bool is_normalized(const TreeDecomposition& td);

// Min-fill elimination ordering (ties by degree, then id).
TreeDecomposition heuristic_td(const WeightedGraph& g);

// PACE format: "s td <bags> <max bag size> <n>", "b <id> <v>...", then "<id1> <id2>" tree edges.
TreeDecomposition read_td(std::istream& in);
TreeDecomposition read_td(const std::string& path);
void write_td(std::ostream& out, const TreeDecomposition& td, std::size_t num_nodes);

}  // namespace hopset

#endif  // HOPSET_TREE_DECOMPOSITION_HPP
