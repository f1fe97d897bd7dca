#ifndef HOPSET_GENERATORS_HPP
#define HOPSET_GENERATORS_HPP

#include <cstdint>
#include <string>

#include "hopset/graph.hpp"

namespace hopset {

enum class GraphKind { Path, Star, BalancedTree, Grid, Gnm, Caterpillar };

struct GenParams {
    std::size_t n = 0;          // node count; spine length for caterpillars
    std::size_t m = 0;          // gnm edge count
    std::size_t rows = 0;       // grid
    std::size_t cols = 0;       // grid
    std::size_t branching = 2;  // balanced tree
    std::size_t legs = 2;       // caterpillar: each spine node gets 0..legs leaves
    Weight max_weight = 0;      // weights uniform in [1, max_weight]; 0 = kind default (16 for gnm, else 1)
};

// Throws InfeasibleParams on bad parameters.
WeightedGraph generate(GraphKind kind, const GenParams& params, std::uint64_t seed);

GraphKind parse_graph_kind(const std::string& name);
std::string to_string(GraphKind kind);

WeightedGraph path_graph(std::size_t n);
WeightedGraph star_graph(std::size_t leaves);
WeightedGraph grid_graph(std::size_t rows, std::size_t cols);
WeightedGraph balanced_tree(std::size_t n, std::size_t branching);
WeightedGraph gnm_graph(std::size_t n, std::size_t m, std::uint64_t seed);
WeightedGraph caterpillar(std::size_t spine, std::size_t legs, std::uint64_t seed);

}  // namespace hopset

#endif  // HOPSET_GENERATORS_HPP
