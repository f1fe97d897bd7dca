#include "hopset/graph.hpp"

#include <algorithm>
#include <string>

namespace hopset {

namespace {

std::string edge_str(const Edge& e) {
    return "{" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + "}";
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ == 0) throw GraphError("graph must have at least one node");
    if (n_ >= kNoNode) throw GraphError("too many nodes");
    for (auto& e : edges_) {
        if (e.u >= n_ || e.v >= n_) throw GraphError("edge endpoint out of range: " + edge_str(e));
        if (e.u == e.v) throw GraphError("self-loop at node " + std::to_string(e.u + 1));
        if (e.w < 1) throw GraphError("non-positive weight on edge " + edge_str(e));
        if (e.w > (Weight{1} << 62)) throw GraphError("weight too large on edge " + edge_str(e));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
            throw GraphError("parallel edge " + edge_str(edges_[i]));
    }

    std::vector<std::size_t> deg(n_, 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    offsets_.assign(n_ + 1, 0);
    for (std::size_t u = 0; u < n_; ++u) offsets_[u + 1] = offsets_[u] + deg[u];
    arcs_.resize(offsets_[n_]);
    arc_edge_.resize(offsets_[n_]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        arc_edge_[fill[e.u]] = i;
        arcs_[fill[e.u]++] = {e.v, e.w};
        arc_edge_[fill[e.v]] = i;
        arcs_[fill[e.v]++] = {e.u, e.w};
    }
    // Edges are sorted by (u,v), so each list is already ordered for targets
    // larger than the owner; a full sort keeps the invariant simple.
    for (std::size_t u = 0; u < n_; ++u) {
        std::vector<std::pair<Arc, std::size_t>> tmp;
        for (auto a = offsets_[u]; a < offsets_[u + 1]; ++a) tmp.emplace_back(arcs_[a], arc_edge_[a]);
        std::sort(tmp.begin(), tmp.end(), [](const auto& x, const auto& y) { return x.first.to < y.first.to; });
        for (std::size_t i = 0; i < tmp.size(); ++i) {
            arcs_[offsets_[u] + i] = tmp[i].first;
            arc_edge_[offsets_[u] + i] = tmp[i].second;
        }
    }

    std::vector<char> seen(n_, 0);
    std::vector<Node> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Node u = stack.back();
        stack.pop_back();
        for (const auto& a : neighbors(u)) {
            if (!seen[a.to]) {
                seen[a.to] = 1;
                ++reached;
                stack.push_back(a.to);
            }
        }
    }
    if (reached != n_) {
        auto missing = static_cast<Node>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
        throw ConnectivityError("graph is disconnected: node " + std::to_string(missing + 1) +
                                " is unreachable from node 1");
    }
}

std::optional<std::size_t> WeightedGraph::edge_index(Node u, Node v) const {
    if (u >= n_ || v >= n_) return std::nullopt;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v, [](const Arc& a, Node x) { return a.to < x; });
    if (it == nb.end() || it->to != v) return std::nullopt;
    return arc_edge_[offsets_[u] + static_cast<std::size_t>(it - nb.begin())];
}

std::optional<Weight> WeightedGraph::edge_weight(Node u, Node v) const {
    auto idx = edge_index(u, v);
    if (!idx) return std::nullopt;
    return edges_[*idx].w;
}

Weight WeightedGraph::max_weight() const {
    Weight m = 0;
    for (const auto& e : edges_) m = std::max(m, e.w);
    return m;
}

WeightedGraph WeightedGraph::with_certificate(UspCertificate cert) const {
    if (cert.jitter.size() != edges_.size()) throw GraphError("certificate does not match edge count");
    WeightedGraph g = *this;
    g.usp_ = std::move(cert);
    return g;
}

}  // namespace hopset
