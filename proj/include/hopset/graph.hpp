#ifndef HOPSET_GRAPH_HPP
#define HOPSET_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hopset/types.hpp"

namespace hopset {

struct Edge {
    Node u = 0;
    Node v = 0;
    Weight w = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
    Node to = 0;
    Weight w = 0;
};

// Records how a graph was reweighted to make shortest paths unique. Scaled
// weight of edge e is original(e) * scale + jitter[e], with jitter[e] < scale/n,
// so every scaled shortest path is also a shortest path of the original graph.
struct UspCertificate {
    Weight scale = 1;
    std::vector<Weight> jitter;  // indexed like WeightedGraph::edges()
    bool verified = false;
};

/// Immutable connected undirected graph with positive integer weights.
///
/// Edges are stored canonically (u < v, sorted); adjacency is CSR with each
/// neighbor list sorted by id. A graph may carry a UspCertificate when it was
/// produced by make_usp().
class WeightedGraph {
public:
    WeightedGraph() = default;

    // Throws GraphError on self-loops, parallel edges, bad ids or weights < 1,
    // and ConnectivityError when the graph is disconnected.
    WeightedGraph(std::size_t n, std::vector<Edge> edges);

    std::size_t num_nodes() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const Arc> neighbors(Node u) const {
        return {arcs_.data() + offsets_[u], arcs_.data() + offsets_[u + 1]};
    }
    std::size_t degree(Node u) const { return offsets_[u + 1] - offsets_[u]; }

    std::optional<Weight> edge_weight(Node u, Node v) const;
    bool has_edge(Node u, Node v) const { return edge_weight(u, v).has_value(); }
    // Index of {u,v} in edges(), if present.
    std::optional<std::size_t> edge_index(Node u, Node v) const;

    bool is_tree() const { return edges_.size() + 1 == n_; }
    Weight max_weight() const;

    const std::optional<UspCertificate>& usp() const { return usp_; }
    bool has_usp() const { return usp_.has_value() && usp_->verified; }
    // Length unit of the original weights inside this graph (the USP scale, or 1).
    Weight unit() const { return usp_ ? usp_->scale : 1; }

    WeightedGraph with_certificate(UspCertificate cert) const;

    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Arc> arcs_;
    std::vector<std::size_t> arc_edge_;  // arc -> edge index
    std::optional<UspCertificate> usp_;
};

}  // namespace hopset

#endif  // HOPSET_GRAPH_HPP
