#include "hopset/shortest_paths.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <utility>

#include "hopset/hopset.hpp"
#include "hopset/parallel.hpp"

namespace hopset {

std::vector<Node> SpTree::path_to(Node v) const {
    std::vector<Node> path;
    for (Node x = v;; x = parent[x]) {
        path.push_back(x);
        if (x == source) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

SpTree dijkstra(const WeightedGraph& g, Node s) {
    const auto n = g.num_nodes();
    SpTree t;
    t.source = s;
    t.parent.assign(n, kNoNode);
    t.dist.assign(n, kInfinity);
    t.order.reserve(n);
    std::vector<char> done(n, 0);

    using Item = std::pair<Weight, Node>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    t.dist[s] = 0;
    t.parent[s] = s;
    heap.emplace(0, s);
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (done[u]) continue;
        done[u] = 1;
        t.order.push_back(u);
        for (const auto& a : g.neighbors(u)) {
            if (done[a.to]) continue;
            Weight nd = add_dist(d, a.w);
            if (nd < t.dist[a.to]) {
                t.dist[a.to] = nd;
                t.parent[a.to] = u;
                heap.emplace(nd, a.to);
            } else if (nd == t.dist[a.to] && u < t.parent[a.to]) {
                t.parent[a.to] = u;
            }
        }
    }
    return t;
}

std::vector<Weight> distances_from(const WeightedGraph& g, Node s, std::vector<Node>* order) {
    if (!g.is_tree()) {
        auto t = dijkstra(g, s);
        if (order) *order = std::move(t.order);
        return std::move(t.dist);
    }
    const auto n = g.num_nodes();
    std::vector<Weight> dist(n, kInfinity);
    if (order) {
        order->clear();
        order->reserve(n);
    }
    std::vector<Node> stack{s};
    dist[s] = 0;
    while (!stack.empty()) {
        Node u = stack.back();
        stack.pop_back();
        if (order) order->push_back(u);
        for (const auto& a : g.neighbors(u)) {
            if (dist[a.to] != kInfinity) continue;
            dist[a.to] = dist[u] + a.w;
            stack.push_back(a.to);
        }
    }
    return dist;
}

std::vector<std::vector<Weight>> all_pairs_distances(const WeightedGraph& g) {
    std::vector<std::vector<Weight>> d(g.num_nodes());
    parallel_for(g.num_nodes(), [&](std::size_t s) { d[s] = distances_from(g, static_cast<Node>(s)); });
    return d;
}

std::vector<Weight> limited_hop_distances(const WeightedGraph& g, const Hopset& extra, Node s, int h) {
    auto exact = distances_from(g, s);
    return limited_hop_distances(g, extra, s, h, exact);
}

std::vector<Weight> limited_hop_distances(const WeightedGraph& g, const Hopset& extra, Node s, int h,
                                          std::span<const Weight> exact) {
    if (h < 1) throw std::invalid_argument("hop bound must be >= 1");
    const auto n = g.num_nodes();
    std::vector<Weight> cur(n, kInfinity), next;
    cur[s] = 0;
    auto relax = [&](Node a, Node b, Weight w) {
        if (cur[a] != kInfinity) next[b] = std::min(next[b], add_dist(cur[a], w));
    };
    for (int round = 0; round < h; ++round) {
        next = cur;
        for (const auto& e : g.edges()) {
            relax(e.u, e.v, e.w);
            relax(e.v, e.u, e.w);
        }
        for (const auto& e : extra.edges()) {
            relax(e.u, e.v, e.w);
            relax(e.v, e.u, e.w);
        }
        cur.swap(next);
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (cur[v] < exact[v]) {
            throw InvalidShortcut("hop-limited distance from " + std::to_string(s + 1) + " to " +
                                  std::to_string(v + 1) + " is below the true distance; a shortcut weight is too small");
        }
    }
    return cur;
}

std::vector<Node> shortest_path(const WeightedGraph& g, Node u, Node v) {
    if (!g.has_usp()) throw MissingUspCertificate("shortest_path requires a graph with unique shortest paths");
    return dijkstra(g, u).path_to(v);
}

std::vector<std::uint64_t> count_shortest_paths(const WeightedGraph& g, Node s) {
    auto t = dijkstra(g, s);
    std::vector<std::uint64_t> cnt(g.num_nodes(), 0);
    cnt[s] = 1;
    for (Node v : t.order) {
        if (v == s) continue;
        std::uint64_t c = 0;
        for (const auto& a : g.neighbors(v)) {
            if (t.dist[a.to] != kInfinity && add_dist(t.dist[a.to], a.w) == t.dist[v]) {
                auto add = cnt[a.to];
                c = (c > UINT64_MAX - add) ? UINT64_MAX : c + add;
            }
        }
        cnt[v] = c;
    }
    return cnt;
}

const std::vector<Weight>& DistanceTable::row(Node s) {
    auto& r = rows_[s];
    if (r.empty()) r = distances_from(*g_, s);
    return r;
}

Weight DistanceTable::operator()(Node u, Node v) {
    if (!rows_[v].empty()) return rows_[v][u];
    return row(u)[v];
}

void DistanceTable::precompute(std::span<const Node> sources) {
    std::vector<Node> todo;
    for (Node s : sources)
        if (rows_[s].empty()) todo.push_back(s);
    std::sort(todo.begin(), todo.end());
    todo.erase(std::unique(todo.begin(), todo.end()), todo.end());
    parallel_for(todo.size(), [&](std::size_t i) { rows_[todo[i]] = distances_from(*g_, todo[i]); });
}

}  // namespace hopset
