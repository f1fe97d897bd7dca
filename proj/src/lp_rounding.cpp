#include "hopset/lp_rounding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_map>

#include "hopset/shortest_paths.hpp"

namespace hopset {

namespace {

constexpr int kAttempts = 8;

std::uint64_t key(Node u, Node v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Uniform double in [0, 1) from the top 53 bits.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<std::uint32_t> random_ranks(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::uint32_t> pi(n);
    std::iota(pi.begin(), pi.end(), 1u);
    std::shuffle(pi.begin(), pi.end(), rng);
    return pi;
}

// Role bits of a shortcut: 1 = first/last hop, 2 = middle hop.
using RoleMap = std::unordered_map<std::uint64_t, std::uint8_t>;

struct Draw {
    RoleMap h_prime;  // pair -> role bits of its indicators
    std::vector<std::uint32_t> pi;
};

Draw draw(const LpModel& m, const LpSolution& sol, double C, std::mt19937_64& rng) {
    Draw d;
    const bool trade = m.mode == LpMode::Tradeoff;
    for (std::size_t e = 0; e < m.pairs.size(); ++e) {
        for (int i = 0; i < m.h; ++i) {
            double x = (trade && i != 1) ? sol.x1[e] : sol.x[e];
            double p = std::min(C * x, 1.0);
            if (unit_draw(rng) < p) d.h_prime[key(m.pairs[e].first, m.pairs[e].second)] |= (trade && i == 1) ? 2 : 1;
        }
    }
    d.pi = random_ranks(m.n, rng);
    return d;
}

// H'' with role bits inherited from the generating pairs.
RoleMap expand(const WeightedGraph& g, const Draw& d, std::size_t& max_set) {
    std::vector<std::pair<std::uint64_t, std::uint8_t>> gen(d.h_prime.begin(), d.h_prime.end());
    std::sort(gen.begin(), gen.end());
    std::unordered_map<Node, SpTree> trees;
    RoleMap out;
    max_set = 0;
    for (const auto& [k, bits] : gen) {
        auto u = static_cast<Node>(k >> 32), v = static_cast<Node>(k & 0xffffffffu);
        auto it = trees.find(u);
        if (it == trees.end()) it = trees.emplace(u, dijkstra(g, u)).first;
        auto path = it->second.path_to(v);
        auto s = shortcut_set(path, d.pi);
        max_set = std::max(max_set, s.size());
        for (const auto& [a, b] : s) out[key(a, b)] |= bits;
    }
    return out;
}

std::vector<std::pair<std::uint64_t, std::uint8_t>> sorted(const RoleMap& r) {
    std::vector<std::pair<std::uint64_t, std::uint8_t>> v(r.begin(), r.end());
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

std::vector<std::size_t> prefix_minima(std::span<const Node> path, std::span<const std::uint32_t> pi) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < path.size(); ++i)
        if (out.empty() || pi[path[i]] < pi[path[out.back()]]) out.push_back(i);
    return out;
}

std::vector<std::size_t> suffix_minima(std::span<const Node> path, std::span<const std::uint32_t> pi) {
    std::vector<std::size_t> out;
    for (std::size_t i = path.size(); i-- > 0;)
        if (out.empty() || pi[path[i]] < pi[path[out.back()]]) out.push_back(i);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Node, Node>> shortcut_set(std::span<const Node> path, std::span<const std::uint32_t> pi) {
    std::vector<std::pair<Node, Node>> out;
    auto pre = prefix_minima(path, pi);
    auto suf = suffix_minima(path, pi);
    for (auto a : pre)
        for (auto b : suf)
            if (a != b) out.emplace_back(std::min(path[a], path[b]), std::max(path[a], path[b]));
    return out;
}

double amplification(int h, std::size_t n) {
    const double ln = std::ceil(1024.0 * std::log(static_cast<double>(std::max<std::size_t>(n, 2)))) / 1024.0;
    return 8.0 * h * ln;
}

RoundingResult round_solution(const WeightedGraph& g, const LpModel& m, const LpSolution& sol, std::uint64_t seed) {
    if (m.mode != LpMode::Base) throw InfeasibleParams("round_solution expects the base model");
    if (!g.has_usp()) throw MissingUspCertificate("rounding needs a graph with unique shortest paths");
    const double C = amplification(m.h, m.n);
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        RoundingResult r;
        r.seed_used = seed + static_cast<std::uint64_t>(attempt);
        r.attempts = attempt + 1;
        std::mt19937_64 rng(r.seed_used);
        auto d = draw(m, sol, C, rng);
        r.h_prime_size = d.h_prime.size();
        auto roles = expand(g, d, r.max_set_size);
        std::vector<PairTag> pairs;
        for (const auto& [k, bits] : sorted(roles)) pairs.push_back({static_cast<Node>(k >> 32), static_cast<Node>(k & 0xffffffffu), Part::Untagged});
        r.hopset = Hopset::from_pairs(g, std::move(pairs), m.h);
        if (validate_hopset(g, r.hopset, m.h).pass) return r;
    }
    throw RoundingFailed("rounded hopset failed validation in " + std::to_string(kAttempts) + " attempts from seed " +
                         std::to_string(seed));
}

TradeoffResult round_tradeoff(const WeightedGraph& g, const LpModel& m, const LpSolution& sol, std::uint64_t seed) {
    if (m.mode != LpMode::Tradeoff) throw InfeasibleParams("round_tradeoff expects the tradeoff model");
    if (!g.has_usp()) throw MissingUspCertificate("rounding needs a graph with unique shortest paths");
    const double C = amplification(3, m.n);
    ValidationReport last;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        TradeoffResult r;
        r.seed_used = seed + static_cast<std::uint64_t>(attempt);
        r.attempts = attempt + 1;
        std::mt19937_64 rng(r.seed_used);
        auto d = draw(m, sol, C, rng);
        r.h_prime_size = d.h_prime.size();
        std::size_t max_set = 0;
        auto roles = expand(g, d, max_set);

        std::vector<PairTag> pairs;
        std::vector<OracleArc> arcs;
        std::vector<std::pair<Node, Node>> mids;
        for (const auto& [k, bits] : sorted(roles)) {
            auto u = static_cast<Node>(k >> 32), v = static_cast<Node>(k & 0xffffffffu);
            pairs.push_back({u, v, (bits & 1) ? Part::FirstLast : Part::Middle});
            if (bits & 1) {
                arcs.push_back({u, v});
                arcs.push_back({v, u});
                ++r.first_last;
            }
            if (bits & 2) {
                mids.emplace_back(u, v);
                ++r.middle;
            }
        }
        for (const auto& e : g.edges()) {
            arcs.push_back({e.u, e.v});
            arcs.push_back({e.v, e.u});
        }
        r.hopset = Hopset::from_pairs(g, std::move(pairs), 3);
        std::unordered_map<std::uint64_t, Weight> w;
        for (const auto& e : r.hopset.edges()) w[key(e.u, e.v)] = e.w;
        DistanceFn dist = [&](Node a, Node b) -> Weight {
            if (a == b) return 0;
            auto it = w.find(key(a, b));
            if (it != w.end()) return it->second;
            return *g.edge_weight(a, b);
        };
        r.oracle = ThreeHopOracle::build(g, std::move(arcs), std::move(mids), dist);
        last = validate_oracle(g, r.oracle);
        if (last.pass) return r;
    }
    throw RoundingFailed("tradeoff oracle failed validation in " + std::to_string(kAttempts) + " attempts from seed " +
                         std::to_string(seed));
}

}  // namespace hopset
