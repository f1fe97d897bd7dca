#include "hopset/usp.hpp"

#include <atomic>
#include <random>
#include <string>
#include <unordered_set>

#include "hopset/parallel.hpp"
#include "hopset/shortest_paths.hpp"

namespace hopset {

namespace {

constexpr int kMaxAttempts = 16;

Weight next_pow2(Weight x) {
    Weight p = 1;
    while (p < x) p <<= 1;
    return p;
}

}  // namespace

bool has_unique_shortest_paths(const WeightedGraph& g) {
    std::atomic<bool> ok{true};
    parallel_for(g.num_nodes(), [&](std::size_t s) {
        if (!ok.load(std::memory_order_relaxed)) return;
        auto cnt = count_shortest_paths(g, static_cast<Node>(s));
        for (auto c : cnt) {
            if (c != 1) {
                ok.store(false);
                return;
            }
        }
    });
    return ok.load();
}

UspResult make_usp(const WeightedGraph& g, std::uint64_t seed) {
    const auto n = static_cast<Weight>(g.num_nodes());
    const auto m = static_cast<Weight>(g.num_edges());
    Weight scale = next_pow2(std::max<Weight>(2 * n * n, 1));
    // Distinct jitter needs at least m slots below scale / n.
    while ((scale + n - 1) / n < m) scale <<= 1;
    const Weight slots = (scale + n - 1) / n;  // jitter in [0, slots), and slots - 1 < scale / n

    const Weight wmax = g.max_weight();
    // A simple path has < n edges, each at most (wmax + 1) * scale after scaling.
    if (wmax >= (Weight{1} << 62) / scale / n - 1)
        throw UspFailure("weights too large to perturb without overflow; shrink the instance");

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
        std::mt19937_64 rng(s);
        std::uniform_int_distribution<Weight> pick(0, slots - 1);
        std::unordered_set<Weight> used;
        UspCertificate cert;
        cert.scale = scale;
        cert.jitter.reserve(g.num_edges());
        std::vector<Edge> edges;
        edges.reserve(g.num_edges());
        for (const auto& e : g.edges()) {
            Weight j;
            do {
                j = pick(rng);
            } while (!used.insert(j).second);
            cert.jitter.push_back(j);
            edges.push_back({e.u, e.v, e.w * scale + j});
        }
        WeightedGraph out(g.num_nodes(), std::move(edges));
        if (!has_unique_shortest_paths(out)) continue;
        cert.verified = true;
        UspResult r{out.with_certificate(cert), cert, s};
        return r;
    }
    throw UspFailure("no unique-shortest-path perturbation found after " + std::to_string(kMaxAttempts) +
                     " seeds starting at " + std::to_string(seed));
}

std::vector<Weight> original_weights(const WeightedGraph& g) {
    std::vector<Weight> w;
    w.reserve(g.num_edges());
    const auto& cert = g.usp();
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (cert)
            w.push_back((edges[i].w - cert->jitter[i]) / cert->scale);
        else
            w.push_back(edges[i].w);
    }
    return w;
}

}  // namespace hopset
