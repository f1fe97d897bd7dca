#include "hopset/skeleton.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

#include "hopset/parallel.hpp"
#include "hopset/shortest_paths.hpp"

namespace hopset {

namespace {

using Big = __int128;

void require_usp(const WeightedGraph& g) {
    if (!g.has_usp()) throw MissingUspCertificate("skeleton constructions need a graph with unique shortest paths");
}

// Farthest depth below each node of a shortest-path tree.
std::vector<Weight> farthest_below(const SpTree& t) {
    std::vector<Weight> f(t.dist);
    for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
        Node v = *it;
        if (v != t.source) f[t.parent[v]] = std::max(f[t.parent[v]], f[v]);
    }
    return f;
}

struct RootWidth {
    std::size_t width = 0;
    Big at_num = 0;  // radius = at_num / scale
};

// Each edge (p, c) keeps the radii r in (d_p, min(d_c, F_c/(1+α))]. All values
// are multiplied by (den + num) so the bounds are integers.
RootWidth root_width(const SpTree& t, Ratio alpha) {
    const Big s = alpha.den + alpha.num;
    auto f = farthest_below(t);
    std::vector<Big> lo, hi;
    for (Node c : t.order) {
        if (c == t.source) continue;
        Big a = static_cast<Big>(t.dist[t.parent[c]]) * s;
        Big b = std::min(static_cast<Big>(t.dist[c]) * s, static_cast<Big>(f[c]) * alpha.den);
        if (b > a) {
            lo.push_back(a);
            hi.push_back(b);
        }
    }
    std::sort(lo.begin(), lo.end());
    std::sort(hi.begin(), hi.end());
    RootWidth best;
    for (Big x : hi) {
        auto opened = std::lower_bound(lo.begin(), lo.end(), x) - lo.begin();  // a < x
        auto closed = std::lower_bound(hi.begin(), hi.end(), x) - hi.begin();  // b < x
        auto w = static_cast<std::size_t>(opened - closed);
        if (w > best.width) {
            best.width = w;
            best.at_num = x;
        }
    }
    return best;
}

}  // namespace

SkeletonProfile skeleton_dimension(const WeightedGraph& g, Ratio alpha) {
    require_usp(g);
    if (alpha.num <= 0 || alpha.num >= alpha.den) throw InfeasibleParams("alpha must lie in (0,1)");
    const auto n = g.num_nodes();
    SkeletonProfile prof;
    prof.alpha = alpha;
    prof.per_node.assign(n, 0);
    std::vector<Big> at(n, 0);
    parallel_for(n, [&](std::size_t u) {
        auto r = root_width(dijkstra(g, static_cast<Node>(u)), alpha);
        prof.per_node[u] = r.width;
        at[u] = r.at_num;
    });
    for (Node u = 0; u < n; ++u) {
        if (prof.per_node[u] > prof.k) {
            prof.k = prof.per_node[u];
            prof.witness_node = u;
            prof.witness_radius = static_cast<double>(at[u]) / static_cast<double>(alpha.den + alpha.num);
        }
    }
    return prof;
}

std::size_t skeleton_width_at(const WeightedGraph& g, Node u, Ratio r, Ratio alpha) {
    require_usp(g);
    auto t = dijkstra(g, u);
    auto f = farthest_below(t);
    std::size_t w = 0;
    // Points on edge (p, c) at radius r exist iff d_p < r <= d_c; reach there is F_c - r.
    for (Node c : t.order) {
        if (c == u) continue;
        Big dp = static_cast<Big>(t.dist[t.parent[c]]) * r.den;
        Big dc = static_cast<Big>(t.dist[c]) * r.den;
        if (!(dp < r.num && r.num <= dc)) continue;
        // (F_c - r) >= α r  <=>  F_c·den·r.den >= r.num·(den + num)
        if (static_cast<Big>(f[c]) * alpha.den * r.den >= static_cast<Big>(r.num) * (alpha.den + alpha.num)) ++w;
    }
    return w;
}

Ratio average_edge_length(const WeightedGraph& g) {
    Weight total = 0;
    for (const auto& e : g.edges()) total += e.w;
    return Ratio(total, static_cast<std::int64_t>(std::max<std::size_t>(g.num_edges(), 1)));
}

WeightedGraph subdivide_long_edges(const WeightedGraph& g, std::size_t k, Ratio L) {
    const Weight piece = std::max<Weight>(static_cast<Weight>(static_cast<Big>(k) * L.num / L.den), 1);
    std::vector<Edge> edges;
    std::size_t n = g.num_nodes();
    for (const auto& e : g.edges()) {
        if (e.w <= piece) {
            edges.push_back(e);
            continue;
        }
        Weight left = e.w;
        Node prev = e.u;
        while (left > piece) {
            auto mid = static_cast<Node>(n++);
            edges.push_back({prev, mid, piece});
            prev = mid;
            left -= piece;
            if (n > 3 * g.num_nodes())
                throw BlowupExceeded("subdividing edges longer than " + std::to_string(piece) +
                                     " more than triples the node count");
        }
        edges.push_back({prev, e.v, left});
    }
    return WeightedGraph(n, std::move(edges));
}

SkeletonParams compute_params(const WeightedGraph& g, std::size_t k, std::uint64_t seed,
                              const SkeletonOverrides& ov) {
    if (k < 1) throw InfeasibleParams("skeleton dimension must be >= 1");
    SkeletonParams p;
    p.seed = seed;
    const auto n = g.num_nodes();
    const double unit = static_cast<double>(g.unit());
    const double kk = static_cast<double>(std::max<std::size_t>(k, 2));
    p.epsilon = ov.epsilon ? *ov.epsilon : 1.0 / (2.0 * std::log2(kk));
    if (!(p.epsilon > 0)) throw InfeasibleParams("epsilon must be positive");

    // Original-unit edge lengths and diameter.
    Weight lmax = 0;
    {
        auto cert = g.usp();
        auto edges = g.edges();
        for (std::size_t i = 0; i < edges.size(); ++i)
            lmax = std::max(lmax, cert ? (edges[i].w - cert->jitter[i]) / cert->scale : edges[i].w);
    }
    std::vector<Weight> ecc(n, 0);
    parallel_for(n, [&](std::size_t s) {
        auto d = distances_from(g, static_cast<Node>(s));
        ecc[s] = *std::max_element(d.begin(), d.end());
    });
    const Weight diameter_scaled = *std::max_element(ecc.begin(), ecc.end());
    const double diameter = static_cast<double>(diameter_scaled) / unit;

    const double logn = std::log2(static_cast<double>(std::max<std::size_t>(n, 2)));
    p.dprime_formula = std::pow(static_cast<double>(lmax), 4) * std::pow(static_cast<double>(k), 6) * std::pow(logn, 12);
    const double floor_d = 4.0 * static_cast<double>(lmax) + 1.0;  // keeps every [D/4, D/2] window non-empty
    if (ov.dprime) {
        p.dprime = *ov.dprime;
        p.dprime_from_formula = false;
        if (p.dprime < floor_d) {
            p.warnings.push_back("dprime raised to " + std::to_string(floor_d) +
                                 " so that every distance window contains a node");
            p.dprime = floor_d;
        }
    } else {
        p.dprime = std::max(std::min(p.dprime_formula, diameter), floor_d);
        if (p.dprime_formula >= diameter)
            p.warnings.push_back("dprime formula exceeds the diameter; only H' is built. Pass --dprime to exercise levels");
    }
    p.dprime_scaled = static_cast<Weight>(std::floor(p.dprime * unit));

    double D = p.dprime;
    Weight covered = p.dprime_scaled;
    const std::size_t cap = ov.max_levels ? *ov.max_levels : SIZE_MAX;
    while (covered < diameter_scaled && p.levels.size() < cap) {
        double next = std::pow(D, 1.0 + p.epsilon);
        Level lv;
        lv.D = D;
        lv.lower = static_cast<Weight>(std::ceil(D * unit));
        lv.upper = static_cast<Weight>(std::floor(next * unit));
        p.levels.push_back(lv);
        covered = lv.upper;
        if (next <= D) break;
        D = next;
    }
    if (covered < diameter_scaled)
        p.warnings.push_back("level count capped; far pairs are not covered");

    std::mt19937_64 rng(seed);
    std::unordered_set<std::uint64_t> used;
    p.rho.resize(n);
    for (auto& r : p.rho) {
        do {
            r = rng();
        } while (!used.insert(r).second);
    }
    return p;
}

HPrime build_h_prime(const WeightedGraph& g, Weight dprime, const std::vector<std::uint64_t>& rho) {
    const auto n = g.num_nodes();
    std::vector<std::vector<Node>> hubs(n);
    parallel_for(n, [&](std::size_t si) {
        const auto u = static_cast<Node>(si);
        auto t = dijkstra(g, u);
        std::vector<Node> best(n, kNoNode);
        best[u] = u;
        auto& out = hubs[u];
        for (Node v : t.order) {
            if (v == u || t.dist[v] > dprime) continue;
            Node m = best[t.parent[v]];
            if (rho[v] < rho[m]) m = v;
            best[v] = m;
            if (m == u) continue;
            if (m == v && g.has_edge(u, v)) continue;  // covered by the graph edge
            out.push_back(m);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    });
    HPrime h;
    std::vector<PairTag> pairs;
    for (Node u = 0; u < n; ++u)
        for (Node m : hubs[u]) {
            h.arcs.push_back({u, m});
            pairs.push_back({u, m, Part::FirstLast});
        }
    h.hopset = Hopset::from_pairs(g, std::move(pairs), 2);
    return h;
}

LevelSets build_level(const WeightedGraph& g, Weight lower, Weight upper, const std::vector<std::uint64_t>& rho) {
    if (lower < 1) throw InfeasibleParams("level distance must be >= 1");
    const auto n = g.num_nodes();
    LevelSets L;
    L.lower = lower;
    L.upper = upper;
    L.window.assign(n * n, kNoNode);
    L.R.assign(n, {});
    std::vector<std::vector<Weight>> dist(n);
    parallel_for(n, [&](std::size_t si) {
        const auto u = static_cast<Node>(si);
        auto t = dijkstra(g, u);
        std::vector<Node> best(n, kNoNode);
        auto* row = L.window.data() + si * n;
        for (Node v : t.order) {
            Node m = v == u ? kNoNode : best[t.parent[v]];
            const Big d = t.dist[v];
            if (4 * d >= lower && 2 * d <= lower && (m == kNoNode || rho[v] < rho[m])) m = v;
            best[v] = m;
            if (t.dist[v] >= lower) {
                row[v] = m;
                if (m != kNoNode) L.R[u].push_back(m);
            }
        }
        std::sort(L.R[u].begin(), L.R[u].end());
        L.R[u].erase(std::unique(L.R[u].begin(), L.R[u].end()), L.R[u].end());
        dist[u] = std::move(t.dist);
    });
    // Middle pairs: the two window minima of every pair in the band.
    for (Node u = 0; u < n; ++u)
        for (Node v = u + 1; v < n; ++v) {
            if (dist[u][v] < lower || dist[u][v] > upper) continue;
            Node q = L.window[u * n + v], r = L.window[v * n + u];
            if (q == kNoNode || r == kNoNode || q == r) continue;
            L.h2.emplace_back(std::min(q, r), std::max(q, r));
        }
    std::sort(L.h2.begin(), L.h2.end());
    L.h2.erase(std::unique(L.h2.begin(), L.h2.end()), L.h2.end());
    return L;
}

SkeletonOracle build_skeleton_oracle(const WeightedGraph& g, std::uint64_t seed, const SkeletonOverrides& ov,
                                     const OracleValidationOptions& validation) {
    require_usp(g);
    const auto k = skeleton_dimension(g).k;
    constexpr int kAttempts = 8;
    ValidationReport last;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        SkeletonOracle s;
        s.k = k;
        s.params = compute_params(g, k, seed + static_cast<std::uint64_t>(attempt), ov);
        s.h_prime = build_h_prime(g, s.params.dprime_scaled, s.params.rho);
        std::vector<OracleArc> arcs = s.h_prime.arcs;
        std::vector<std::pair<Node, Node>> mids;
        for (const auto& lv : s.params.levels) {
            auto L = build_level(g, lv.lower, lv.upper, s.params.rho);
            for (Node u = 0; u < g.num_nodes(); ++u)
                for (Node r : L.R[u]) arcs.push_back({u, r});
            mids.insert(mids.end(), L.h2.begin(), L.h2.end());
            L.window.clear();
            L.window.shrink_to_fit();
            s.levels.push_back(std::move(L));
        }
        s.oracle = ThreeHopOracle::build(g, std::move(arcs), std::move(mids));
        s.attempts = attempt + 1;
        last = validate_oracle(g, s.oracle, validation);
        if (last.pass) return s;
    }
    std::string pair = last.violations.empty()
                           ? std::string("?")
                           : std::to_string(last.violations[0].u + 1) + " " + std::to_string(last.violations[0].v + 1);
    throw OracleBuildFailed("skeleton oracle failed validation after " + std::to_string(kAttempts) +
                            " seeds; first violating pair " + pair);
}

}  // namespace hopset
