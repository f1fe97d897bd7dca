#ifndef HOPSET_SHORTEST_PATHS_HPP
#define HOPSET_SHORTEST_PATHS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hopset/graph.hpp"

namespace hopset {

class Hopset;

/// Shortest-path tree rooted at `source`. `order` lists nodes in settle
/// order, so every parent precedes its children.
struct SpTree {
    Node source = 0;
    std::vector<Node> parent;  // parent[source] == source
    std::vector<Weight> dist;
    std::vector<Node> order;

    // Nodes of the tree path source -> v.
    std::vector<Node> path_to(Node v) const;
};

// Exact single-source distances and shortest-path tree. Among equal-length
// alternatives the predecessor with the smaller id wins.
SpTree dijkstra(const WeightedGraph& g, Node s);

// Distances only; linear-time traversal when g is a tree. If `order` is
// non-null it receives a topological order of the shortest-path DAG.
std::vector<Weight> distances_from(const WeightedGraph& g, Node s, std::vector<Node>* order = nullptr);

std::vector<std::vector<Weight>> all_pairs_distances(const WeightedGraph& g);

/// d^h over G ∪ H from s by h rounds of relaxation. Unreachable-within-h
/// entries are kInfinity. Throws InvalidShortcut if a shortcut would make some
/// node closer than its true distance.
std::vector<Weight> limited_hop_distances(const WeightedGraph& g, const Hopset& extra, Node s, int h);
// Same, checking against precomputed exact distances from s.
std::vector<Weight> limited_hop_distances(const WeightedGraph& g, const Hopset& extra, Node s, int h,
                                          std::span<const Weight> exact);

// The unique shortest path u -> v. Requires a USP certificate.
std::vector<Node> shortest_path(const WeightedGraph& g, Node u, Node v);

// Per-target count of shortest paths from s, saturating at UINT64_MAX.
std::vector<std::uint64_t> count_shortest_paths(const WeightedGraph& g, Node s);

/// Memoized exact distances; rows are computed on first use.
class DistanceTable {
public:
    explicit DistanceTable(const WeightedGraph& g) : g_(&g), rows_(g.num_nodes()) {}

    Weight operator()(Node u, Node v);
    const std::vector<Weight>& row(Node s);
    // Fills the rows for all listed sources, in parallel.
    void precompute(std::span<const Node> sources);
    const WeightedGraph& graph() const { return *g_; }

private:
    const WeightedGraph* g_;
    std::vector<std::vector<Weight>> rows_;
};

}  // namespace hopset

#endif  // HOPSET_SHORTEST_PATHS_HPP
