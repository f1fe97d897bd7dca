#include "hopset/hopset.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hopset/parallel.hpp"
#include "hopset/shortest_paths.hpp"

namespace hopset {

namespace {

int strength(Part p) {
    switch (p) {
        case Part::FirstLast: return 2;
        case Part::Middle: return 1;
        default: return 0;
    }
}

// Sorted, deduplicated, self-free pairs with the strongest tag per pair.
std::vector<PairTag> canonical_pairs(std::size_t n, std::vector<PairTag> pairs) {
    std::vector<PairTag> out;
    out.reserve(pairs.size());
    for (auto p : pairs) {
        if (p.u >= n || p.v >= n) throw GraphError("shortcut endpoint out of range");
        if (p.u == p.v) continue;
        if (p.u > p.v) std::swap(p.u, p.v);
        out.push_back(p);
    }
    std::sort(out.begin(), out.end(), [](const PairTag& a, const PairTag& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        return strength(a.part) > strength(b.part);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const PairTag& a, const PairTag& b) { return a.u == b.u && a.v == b.v; }),
              out.end());
    return out;
}

// Start offsets of runs with equal u in a sorted list.
template <class T>
std::vector<std::size_t> source_runs(const std::vector<T>& items) {
    std::vector<std::size_t> runs;
    for (std::size_t i = 0; i < items.size(); ++i)
        if (i == 0 || items[i].u != items[i - 1].u) runs.push_back(i);
    runs.push_back(items.size());
    return runs;
}

bool keep_shortcut(const WeightedGraph& g, Node u, Node v, Weight w, Part part) {
    if (part == Part::FirstLast) return true;
    auto e = g.edge_weight(u, v);
    return !(e && *e == w);
}

// Combined CSR adjacency of G and H.
struct Combined {
    std::vector<std::size_t> offsets;
    std::vector<Arc> arcs;

    Combined(const WeightedGraph& g, const Hopset& hs) {
        const auto n = g.num_nodes();
        offsets.assign(n + 1, 0);
        for (Node u = 0; u < n; ++u) offsets[u + 1] = g.degree(u);
        for (const auto& e : hs.edges()) {
            ++offsets[e.u + 1];
            ++offsets[e.v + 1];
        }
        for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
        arcs.resize(offsets[n]);
        std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
        for (Node u = 0; u < n; ++u)
            for (const auto& a : g.neighbors(u)) arcs[fill[u]++] = a;
        for (const auto& e : hs.edges()) {
            arcs[fill[e.u]++] = {e.v, e.w};
            arcs[fill[e.v]++] = {e.u, e.w};
        }
    }

    std::span<const Arc> at(Node u) const { return {arcs.data() + offsets[u], arcs.data() + offsets[u + 1]}; }
};

constexpr int kUnreached = std::numeric_limits<int>::max();

std::vector<int> min_hops(const Combined& adj, Node s, const std::vector<Weight>& exact,
                          const std::vector<Node>& order) {
    std::vector<int> hops(exact.size(), kUnreached);
    hops[s] = 0;
    for (Node v : order) {
        if (v == s) continue;
        int best = kUnreached;
        // Predecessors on tight arcs have strictly smaller distance, hence appear earlier in order.
        for (const auto& a : adj.at(v)) {
            if (hops[a.to] == kUnreached || exact[a.to] >= exact[v]) continue;
            if (exact[a.to] + a.w == exact[v]) best = std::min(best, hops[a.to] + 1);
        }
        hops[v] = best;
    }
    return hops;
}

}  // namespace

Hopset Hopset::from_pairs(const WeightedGraph& g, std::vector<PairTag> pairs, int hopbound, const DistanceFn& dist) {
    auto canon = canonical_pairs(g.num_nodes(), std::move(pairs));
    std::vector<Shortcut> edges;
    edges.reserve(canon.size());
    for (const auto& p : canon) {
        Weight w = dist(p.u, p.v);
        if (keep_shortcut(g, p.u, p.v, w, p.part)) edges.push_back({p.u, p.v, w, p.part});
    }
    return Hopset(std::move(edges), hopbound);
}

Hopset Hopset::from_pairs(const WeightedGraph& g, std::vector<PairTag> pairs, int hopbound) {
    auto canon = canonical_pairs(g.num_nodes(), std::move(pairs));
    std::vector<Weight> w(canon.size());
    auto runs = source_runs(canon);
    parallel_for(runs.size() - 1, [&](std::size_t r) {
        auto d = distances_from(g, canon[runs[r]].u);
        for (std::size_t i = runs[r]; i < runs[r + 1]; ++i) w[i] = d[canon[i].v];
    });
    std::vector<Shortcut> edges;
    edges.reserve(canon.size());
    for (std::size_t i = 0; i < canon.size(); ++i) {
        const auto& p = canon[i];
        if (keep_shortcut(g, p.u, p.v, w[i], p.part)) edges.push_back({p.u, p.v, w[i], p.part});
    }
    return Hopset(std::move(edges), hopbound);
}

Hopset Hopset::from_shortcuts(const WeightedGraph& g, std::vector<Shortcut> edges, int hopbound) {
    std::vector<PairTag> pairs;
    pairs.reserve(edges.size());
    for (const auto& e : edges) pairs.push_back({e.u, e.v, e.part});
    auto hs = from_pairs(g, std::move(pairs), hopbound);
    // Every claimed weight must match the recomputed one.
    for (auto e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v) continue;
        auto it = std::lower_bound(hs.edges_.begin(), hs.edges_.end(), e, [](const Shortcut& a, const Shortcut& b) {
            return a.u != b.u ? a.u < b.u : a.v < b.v;
        });
        Weight truth;
        if (it != hs.edges_.end() && it->u == e.u && it->v == e.v)
            truth = it->w;
        else
            truth = *g.edge_weight(e.u, e.v);  // dropped only when it duplicates a tight edge
        if (truth != e.w)
            throw InvalidShortcut("shortcut " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " has weight " +
                                  std::to_string(e.w) + " but the distance is " + std::to_string(truth));
    }
    return hs;
}

std::size_t Hopset::count(Part p) const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [p](const Shortcut& s) { return s.part == p; }));
}

Hopset Hopset::with_hopbound(int h) const { return Hopset(edges_, h); }

void Hopset::verify_weights(const WeightedGraph& g) const {
    auto runs = source_runs(edges_);
    std::vector<char> bad(edges_.size(), 0);
    parallel_for(runs.size() - 1, [&](std::size_t r) {
        auto d = distances_from(g, edges_[runs[r]].u);
        for (std::size_t i = runs[r]; i < runs[r + 1]; ++i) bad[i] = d[edges_[i].v] != edges_[i].w;
    });
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (bad[i])
            throw InvalidShortcut("shortcut " + std::to_string(edges_[i].u + 1) + " " + std::to_string(edges_[i].v + 1) +
                                  " does not carry the exact distance");
    }
}

std::vector<int> min_hops_from(const WeightedGraph& g, const Hopset& hs, Node s) {
    Combined adj(g, hs);
    std::vector<Node> order;
    auto exact = distances_from(g, s, &order);
    return min_hops(adj, s, exact, order);
}

ValidationReport validate_hopset(const WeightedGraph& g, const Hopset& hs, int h, const ValidationOptions& opts) {
    const auto n = g.num_nodes();
    Combined adj(g, hs);
    std::vector<std::size_t> checked(n, 0), failed(n, 0);
    std::vector<std::vector<Violation>> listed(n);
    parallel_for(n, [&](std::size_t si) {
        const auto s = static_cast<Node>(si);
        std::vector<Node> order;
        auto exact = distances_from(g, s, &order);
        auto hops = min_hops(adj, s, exact, order);
        for (Node v = 0; v < n; ++v) {
            if (v == s || exact[v] > opts.max_distance) continue;
            ++checked[s];
            if (hops[v] > h) {
                ++failed[s];
                if (listed[s].size() < ValidationReport::kMaxListed) listed[s].push_back({s, v, kInfinity, exact[v]});
            }
        }
    });
    ValidationReport rep;
    for (Node s = 0; s < n; ++s) {
        rep.pairs_checked += checked[s];
        rep.violation_count += failed[s];
        for (const auto& v : listed[s])
            if (rep.violations.size() < ValidationReport::kMaxListed) rep.violations.push_back(v);
    }
    rep.pass = rep.violation_count == 0;
    // Report the actual h-hop distances of the listed pairs.
    Node last = kNoNode;
    std::vector<Weight> limited;
    for (auto& v : rep.violations) {
        if (v.u != last) {
            last = v.u;
            limited = limited_hop_distances(g, hs, v.u, h);
        }
        v.limited = limited[v.v];
    }
    return rep;
}

GenericQueryResult generic_query_counted(const WeightedGraph& g, const Hopset& hs, Node u, Node v) {
    const int h = hs.hopbound();
    const int a = (h + 1) / 2, b = h / 2;
    GenericQueryResult r;
    if (u == v) {
        r.distance = 0;
        r.meets = 1;
        return r;
    }
    auto du = limited_hop_distances(g, hs, u, a);
    std::vector<Weight> dv;
    if (b > 0) {
        dv = limited_hop_distances(g, hs, v, b);
    } else {
        dv.assign(g.num_nodes(), kInfinity);
        dv[v] = 0;
    }
    for (std::size_t w = 0; w < du.size(); ++w) {
        if (du[w] == kInfinity || dv[w] == kInfinity) continue;
        ++r.meets;
        r.distance = std::min(r.distance, du[w] + dv[w]);
    }
    return r;
}

Weight generic_query(const WeightedGraph& g, const Hopset& hs, Node u, Node v) {
    return generic_query_counted(g, hs, u, v).distance;
}

Hopset read_hopset(std::istream& in, const WeightedGraph& g) {
    std::string line;
    std::size_t lineno = 0, expected = 0;
    int h = 0;
    bool header = false;
    std::vector<Shortcut> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            long long n = 0, k = 0;
            if (header) throw ParseError("duplicate header", lineno);
            if (!(ss >> kind >> n >> h >> k) || kind != "hopset") throw ParseError("expected 'p hopset <n> <h> <k>'", lineno);
            if (n != static_cast<long long>(g.num_nodes()))
                throw ParseError("hopset is for " + std::to_string(n) + " nodes, graph has " +
                                     std::to_string(g.num_nodes()),
                                 lineno);
            if (h < 1 || k < 0) throw ParseError("bad hopbound or edge count", lineno);
            expected = static_cast<std::size_t>(k);
            header = true;
        } else if (tag == "s") {
            if (!header) throw ParseError("shortcut before header", lineno);
            long long u = 0, v = 0, w = 0;
            int part = 0;
            if (!(ss >> u >> v >> w >> part)) throw ParseError("expected 's <u> <v> <w> <part>'", lineno);
            if (u < 1 || v < 1 || u > static_cast<long long>(g.num_nodes()) || v > static_cast<long long>(g.num_nodes()))
                throw ParseError("node id out of range", lineno);
            if (u == v) throw ParseError("self-loop shortcut", lineno);
            if (w < 1) throw ParseError("weight must be >= 1", lineno);
            if (part < 0 || part > 2) throw ParseError("part must be 0, 1 or 2", lineno);
            edges.push_back({static_cast<Node>(u - 1), static_cast<Node>(v - 1), w, static_cast<Part>(part)});
        } else {
            throw ParseError("unknown line type '" + tag + "'", lineno);
        }
        std::string extra;
        if (ss >> extra) throw ParseError("trailing tokens", lineno);
    }
    if (!header) throw ParseError("missing header", lineno);
    if (edges.size() != expected)
        throw ParseError("header announces " + std::to_string(expected) + " shortcuts, found " +
                             std::to_string(edges.size()),
                         lineno);
    return Hopset::from_shortcuts(g, std::move(edges), h);
}

Hopset read_hopset(const std::string& path, const WeightedGraph& g) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    return read_hopset(in, g);
}

void write_hopset(std::ostream& out, const Hopset& hs, std::size_t n) {
    out << "p hopset " << n << ' ' << hs.hopbound() << ' ' << hs.size() << '\n';
    for (const auto& e : hs.edges())
        out << "s " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << ' ' << static_cast<int>(e.part) << '\n';
}

void write_hopset(const std::string& path, const Hopset& hs, std::size_t n) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path, 0);
    write_hopset(out, hs, n);
}

}  // namespace hopset
