#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hopset/generators.hpp"
#include "hopset/shortest_paths.hpp"
#include "hopset/skeleton.hpp"
#include "hopset/usp.hpp"
#include "oracles.hpp"

using namespace hopset;

namespace {

WeightedGraph usp(const WeightedGraph& g, std::uint64_t seed = 1) { return make_usp(g, seed).graph; }

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

TEST_CASE("skeleton dimension examples") {
    CHECK(skeleton_dimension(usp(path_graph(2))).k == 1);
    CHECK(skeleton_dimension(usp(path_graph(9))).k == 2);
    auto star = usp(star_graph(4));
    REQUIRE(star.num_nodes() == 5);
    auto prof = skeleton_dimension(star);
    CHECK(prof.k == 4);
    CHECK(prof.per_node[0] == 4);
    // Four points at radius 1/2 from the centre, each with reach 1/2.
    CHECK(skeleton_width_at(star, 0, Ratio(star.unit(), 2)) == 4);
}

TEST_CASE("skeleton dimension needs a certificate") {
    CHECK_THROWS_AS(skeleton_dimension(path_graph(5)), MissingUspCertificate);
    CHECK_THROWS_AS(build_skeleton_oracle(grid_graph(3, 3), 1), MissingUspCertificate);
}

TEST_CASE("skeleton profile invariants") {
    std::vector<WeightedGraph> gs{usp(grid_graph(5, 5)), usp(gnm_graph(30, 50, 3)), usp(caterpillar(10, 2, 5)),
                                  usp(balanced_tree(31, 2))};
    for (const auto& g : gs) {
        auto k = skeleton_dimension(g).k;
        CHECK(k >= 1);
        CHECK(k <= g.num_nodes() - 1);
        std::size_t prev = SIZE_MAX;
        int e = 1;
        for (Ratio a : {Ratio(1, 8), Ratio(1, 4), Ratio(1, 2), Ratio(3, 4)}) {
            auto ka = skeleton_dimension(g, a).k;
            CHECK(ka <= prev);
            prev = ka;
            if (a.value() <= 0.5) {
                e = static_cast<int>(std::ceil(std::log2(1.0 + 1.0 / a.value())));
                CHECK(ka <= ipow(k, e));
            }
        }
    }
}

TEST_CASE("epsilon and determinism of parameters") {
    auto g = usp(grid_graph(4, 4));
    CHECK(compute_params(g, 1, 3).epsilon == doctest::Approx(0.5));
    CHECK(compute_params(g, 4, 3).epsilon == doctest::Approx(0.25));
    SkeletonOverrides ov;
    ov.dprime = 5;
    auto a = compute_params(g, 4, 42, ov), b = compute_params(g, 4, 42, ov);
    CHECK(a.rho == b.rho);
    REQUIRE(a.levels.size() == b.levels.size());
    for (std::size_t i = 0; i < a.levels.size(); ++i) CHECK(a.levels[i].lower == b.levels[i].lower);
    std::set<std::uint64_t> distinct(a.rho.begin(), a.rho.end());
    CHECK(distinct.size() == g.num_nodes());
    CHECK(compute_params(g, 4, 43, ov).rho != a.rho);
}

TEST_CASE("levels increase until the diameter is covered") {
    auto g = usp(grid_graph(8, 8));
    SkeletonOverrides ov;
    ov.dprime = 5;
    auto p = compute_params(g, 4, 1, ov);
    REQUIRE(!p.levels.empty());
    CHECK(p.levels[0].D == doctest::Approx(5));
    for (std::size_t i = 1; i < p.levels.size(); ++i) {
        CHECK(p.levels[i].D > p.levels[i - 1].D);
        CHECK(p.levels[i].D == doctest::Approx(std::pow(p.levels[i - 1].D, 1 + p.epsilon)));
    }
    Weight diam = 0;
    for (Node s = 0; s < g.num_nodes(); ++s)
        for (auto d : distances_from(g, s)) diam = std::max(diam, d);
    CHECK(p.levels.back().upper >= diam);
    if (p.levels.size() > 1) CHECK(p.levels[p.levels.size() - 2].upper < diam);

    ov.max_levels = 1;
    auto capped = compute_params(g, 4, 1, ov);
    CHECK(capped.levels.size() == 1);
    CHECK(!capped.warnings.empty());
}

TEST_CASE("subdividing long edges") {
    WeightedGraph one(2, {{0, 1, 10}});
    auto s = subdivide_long_edges(one, 1, Ratio(3, 1));
    CHECK(s.num_nodes() == 5);
    CHECK(s.num_edges() == 4);
    std::vector<Weight> ws;
    for (const auto& e : s.edges()) ws.push_back(e.w);
    std::sort(ws.begin(), ws.end());
    CHECK(ws == std::vector<Weight>{1, 3, 3, 3});
    CHECK(distances_from(s, 0)[1] == 10);

    auto short_edges = generate(GraphKind::Gnm, {.n = 12, .m = 20, .max_weight = 3}, 4);
    auto same = subdivide_long_edges(short_edges, 1, Ratio(3, 1));
    CHECK(same.num_nodes() == short_edges.num_nodes());
    CHECK(same.edges().size() == short_edges.edges().size());

    auto g = generate(GraphKind::Gnm, {.n = 15, .m = 25, .max_weight = 9}, 6);
    auto L = average_edge_length(g);
    auto sub = subdivide_long_edges(g, 1, L);
    auto before = oracle::floyd(g), after = oracle::floyd(sub);
    for (Node u = 0; u < g.num_nodes(); ++u)
        for (Node v = 0; v < g.num_nodes(); ++v) CHECK(before[u][v] == after[u][v]);

    CHECK_THROWS_AS(subdivide_long_edges(WeightedGraph(2, {{0, 1, 100}}), 1, Ratio(3, 1)), BlowupExceeded);
}

TEST_CASE("short-range hub shortcuts") {
    auto g = usp(grid_graph(6, 6));
    auto p = compute_params(g, 4, 7, SkeletonOverrides{.dprime = 5});
    auto hp = build_h_prime(g, p.dprime_scaled, p.rho);
    ValidationOptions opts;
    opts.max_distance = p.dprime_scaled;
    CHECK(validate_hopset(g, hp.hopset, 2, opts).pass);
    CHECK(hp.hopset.size() > 0);
    for (const auto& a : hp.arcs) CHECK(a.from != a.to);

    // Adjacent pairs only: nothing to add.
    auto tiny = build_h_prime(g, g.unit() + static_cast<Weight>(g.num_nodes()), p.rho);
    CHECK(tiny.arcs.empty());
}

TEST_CASE("window minima on a unit path") {
    auto g = path_graph(9);
    std::vector<std::uint64_t> rho(9);
    for (Node i = 0; i < 9; ++i) rho[i] = 100 + i;
    rho[1] = 70;
    rho[2] = 20;
    auto L = build_level(g, 4, 6, rho);
    CHECK(L.R[0] == std::vector<Node>{2});
    CHECK(L.R[4].size() == 2);
    // Nothing is 5 or more away from the middle node.
    CHECK(build_level(g, 5, 7, rho).R[4].empty());
    rho[1] = 10;
    CHECK(build_level(g, 4, 6, rho).R[0] == std::vector<Node>{1});
}

TEST_CASE("level sets respect the width bound and give 3-hop witnesses") {
    std::vector<WeightedGraph> gs{usp(grid_graph(7, 7)), usp(caterpillar(14, 2, 3)), usp(gnm_graph(40, 60, 5))};
    for (const auto& g : gs) {
        const auto n = g.num_nodes();
        const auto k = skeleton_dimension(g).k;
        auto p = compute_params(g, k, 11, SkeletonOverrides{.dprime = 5});
        auto dist = oracle::floyd(g);
        for (const auto& lv : p.levels) {
            auto L = build_level(g, lv.lower, lv.upper, p.rho);
            for (Node u = 0; u < n; ++u) {
                CHECK(L.R[u].size() <= skeleton_width_at(g, u, Ratio(lv.lower, 2)));
                CHECK(L.R[u].size() <= k);
                for (Node r : L.R[u]) {
                    CHECK(4 * dist[u][r] >= lv.lower);
                    CHECK(2 * dist[u][r] <= lv.lower);
                }
            }
            for (Node u = 0; u < n; ++u)
                for (Node v = 0; v < n; ++v) {
                    if (dist[u][v] < lv.lower || dist[u][v] > lv.upper) continue;
                    Node q = L.window[u * n + v], r = L.window[v * n + u];
                    REQUIRE(q != kNoNode);
                    REQUIRE(r != kNoNode);
                    CHECK(std::binary_search(L.R[u].begin(), L.R[u].end(), q));
                    CHECK(std::binary_search(L.R[v].begin(), L.R[v].end(), r));
                    CHECK(dist[u][q] + dist[q][r] + dist[r][v] == dist[u][v]);
                    if (q != r) {
                        auto key = std::make_pair(std::min(q, r), std::max(q, r));
                        CHECK(std::binary_search(L.h2.begin(), L.h2.end(), key));
                    }
                }
        }
    }
}

TEST_CASE("skeleton oracle validates and keeps its degree budget") {
    struct Case {
        WeightedGraph g;
        double dprime;
    };
    std::vector<Case> cases{{usp(grid_graph(12, 12)), 5}, {usp(caterpillar(20, 2, 7)), 5},
                            {usp(caterpillar(30, 1, 8)), 6}};
    for (const auto& c : cases) {
        auto s = build_skeleton_oracle(c.g, 3, SkeletonOverrides{.dprime = c.dprime});
        CHECK(s.attempts >= 1);
        CHECK(validate_oracle(c.g, s.oracle).pass);
        CHECK(!s.levels.empty());
        CHECK(s.oracle.h2_size() < s.oracle.h1_size());

        const auto n = c.g.num_nodes();
        std::vector<std::size_t> hdeg(n, 0), n1(n, 0);
        for (const auto& a : s.h_prime.arcs) ++hdeg[a.from];
        for (const auto& a : s.oracle.arcs()) ++n1[a.from];
        for (Node u = 0; u < n; ++u) CHECK(n1[u] <= hdeg[u] + s.k * s.levels.size());
    }
}

TEST_CASE("pure H' oracle when the cutoff covers the diameter") {
    auto g = usp(grid_graph(5, 5));
    auto s = build_skeleton_oracle(g, 9);
    CHECK(s.levels.empty());
    CHECK(s.params.dprime_from_formula);
    CHECK(!s.params.warnings.empty());
    CHECK(validate_oracle(g, s.oracle).pass);
}
