#include "hopset/generators.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <unordered_set>

namespace hopset {

namespace {

// Uniform random labelled tree on n nodes, decoded from a random Pruefer sequence.
std::vector<Edge> random_tree(std::size_t n, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    if (n < 2) return edges;
    if (n == 2) return {{0, 1, 1}};
    std::uniform_int_distribution<Node> pick(0, static_cast<Node>(n - 1));
    std::vector<Node> code(n - 2);
    for (auto& c : code) c = pick(rng);
    std::vector<std::size_t> degree(n, 1);
    for (Node c : code) ++degree[c];
    std::priority_queue<Node, std::vector<Node>, std::greater<>> leaves;
    for (Node v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);
    for (Node c : code) {
        Node leaf = leaves.top();
        leaves.pop();
        edges.push_back({leaf, c, 1});
        if (--degree[c] == 1) leaves.push(c);
    }
    Node a = leaves.top();
    leaves.pop();
    edges.push_back({a, leaves.top(), 1});
    return edges;
}

void assign_weights(std::vector<Edge>& edges, Weight max_weight, std::mt19937_64& rng) {
    if (max_weight <= 1) return;
    std::uniform_int_distribution<Weight> pick(1, max_weight);
    for (auto& e : edges) e.w = pick(rng);
}

void require(bool ok, const char* what) {
    if (!ok) throw InfeasibleParams(what);
}

}  // namespace

WeightedGraph generate(GraphKind kind, const GenParams& p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Weight maxw = p.max_weight != 0 ? p.max_weight : (kind == GraphKind::Gnm ? 16 : 1);
    require(maxw >= 1, "max weight must be >= 1");
    std::vector<Edge> edges;
    std::size_t n = 0;
    switch (kind) {
        case GraphKind::Path:
            require(p.n >= 1, "path needs n >= 1");
            n = p.n;
            for (Node i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
            break;
        case GraphKind::Star:
            require(p.n >= 1, "star needs n >= 1");
            n = p.n;
            for (Node i = 1; i < n; ++i) edges.push_back({0, i, 1});
            break;
        case GraphKind::BalancedTree:
            require(p.n >= 1 && p.branching >= 1, "balanced tree needs n >= 1 and branching >= 1");
            n = p.n;
            for (Node i = 1; i < n; ++i) edges.push_back({static_cast<Node>((i - 1) / p.branching), i, 1});
            break;
        case GraphKind::Grid:
            require(p.rows >= 1 && p.cols >= 1, "grid needs rows, cols >= 1");
            n = p.rows * p.cols;
            for (std::size_t r = 0; r < p.rows; ++r)
                for (std::size_t c = 0; c < p.cols; ++c) {
                    auto id = static_cast<Node>(r * p.cols + c);
                    if (c + 1 < p.cols) edges.push_back({id, id + 1, 1});
                    if (r + 1 < p.rows) edges.push_back({id, static_cast<Node>(id + p.cols), 1});
                }
            break;
        case GraphKind::Gnm: {
            require(p.n >= 1, "gnm needs n >= 1");
            require(p.m + 1 >= p.n, "gnm needs m >= n - 1");
            require(p.m <= p.n * (p.n - 1) / 2, "gnm needs m <= n(n-1)/2");
            n = p.n;
            edges = random_tree(n, rng);
            std::unordered_set<std::uint64_t> present;
            for (const auto& e : edges) present.insert(pair_key(e.u, e.v));
            std::uniform_int_distribution<Node> pick(0, static_cast<Node>(n - 1));
            if (p.m > n * (n - 1) / 4) {
                // Dense: draw from the explicit complement to avoid rejection storms.
                std::vector<std::pair<Node, Node>> rest;
                for (Node u = 0; u < n; ++u)
                    for (Node v = u + 1; v < n; ++v)
                        if (!present.count(pair_key(u, v))) rest.emplace_back(u, v);
                std::shuffle(rest.begin(), rest.end(), rng);
                for (std::size_t i = 0; edges.size() < p.m; ++i) edges.push_back({rest[i].first, rest[i].second, 1});
            } else {
                while (edges.size() < p.m) {
                    Node u = pick(rng), v = pick(rng);
                    if (u == v || !present.insert(pair_key(u, v)).second) continue;
                    edges.push_back({u, v, 1});
                }
            }
            break;
        }
        case GraphKind::Caterpillar: {
            require(p.n >= 1, "caterpillar needs a spine of length >= 1");
            std::uniform_int_distribution<std::size_t> legs(0, p.legs);
            n = p.n;
            for (Node i = 0; i + 1 < p.n; ++i) edges.push_back({i, i + 1, 1});
            for (Node i = 0; i < p.n; ++i) {
                auto k = legs(rng);
                for (std::size_t j = 0; j < k; ++j) edges.push_back({i, static_cast<Node>(n++), 1});
            }
            break;
        }
    }
    assign_weights(edges, maxw, rng);
    return WeightedGraph(n, std::move(edges));
}

GraphKind parse_graph_kind(const std::string& name) {
    if (name == "path") return GraphKind::Path;
    if (name == "star") return GraphKind::Star;
    if (name == "balanced-tree") return GraphKind::BalancedTree;
    if (name == "grid") return GraphKind::Grid;
    if (name == "gnm") return GraphKind::Gnm;
    if (name == "caterpillar") return GraphKind::Caterpillar;
    throw InfeasibleParams("unknown graph kind '" + name + "'");
}

std::string to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::Path: return "path";
        case GraphKind::Star: return "star";
        case GraphKind::BalancedTree: return "balanced-tree";
        case GraphKind::Grid: return "grid";
        case GraphKind::Gnm: return "gnm";
        case GraphKind::Caterpillar: return "caterpillar";
    }
    return "?";
}

WeightedGraph path_graph(std::size_t n) { return generate(GraphKind::Path, {.n = n}, 0); }
WeightedGraph star_graph(std::size_t leaves) { return generate(GraphKind::Star, {.n = leaves + 1}, 0); }
WeightedGraph grid_graph(std::size_t rows, std::size_t cols) {
    return generate(GraphKind::Grid, {.rows = rows, .cols = cols}, 0);
}
WeightedGraph balanced_tree(std::size_t n, std::size_t branching) {
    return generate(GraphKind::BalancedTree, {.n = n, .branching = branching}, 0);
}
WeightedGraph gnm_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
    return generate(GraphKind::Gnm, {.n = n, .m = m}, seed);
}
WeightedGraph caterpillar(std::size_t spine, std::size_t legs, std::uint64_t seed) {
    return generate(GraphKind::Caterpillar, {.n = spine, .legs = legs}, seed);
}

}  // namespace hopset
