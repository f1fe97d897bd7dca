#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "hopset/ackermann.hpp"
#include "hopset/generators.hpp"
#include "hopset/shortest_paths.hpp"
#include "hopset/tree_hopset.hpp"
#include "hopset/tree_split.hpp"
#include "oracles.hpp"

using namespace hopset;

namespace {

// Reference λ by direct search over small tables.
std::uint64_t ref_a(unsigned i, std::uint64_t j) {
    if (i == 0) return 2 * j;
    if (j == 0) return 1;
    auto inner = ref_a(i, j - 1);
    if (inner > 20) return 1u << 20;  // large enough for the ranges checked below
    return ref_a(i - 1, inner);
}

std::vector<WeightedGraph> trees() {
    std::vector<WeightedGraph> ts;
    ts.push_back(path_graph(2));
    ts.push_back(path_graph(17));
    ts.push_back(star_graph(9));
    ts.push_back(balanced_tree(40, 2));
    ts.push_back(balanced_tree(50, 4));
    for (std::uint64_t s = 1; s <= 3; ++s) {
        ts.push_back(caterpillar(15, 3, s));
        ts.push_back(generate(GraphKind::Gnm, {.n = 45, .m = 44, .max_weight = 9}, s));
    }
    return ts;
}

}  // namespace

TEST_CASE("Ackermann base values") {
    CHECK(ackermann_a(0, 5) == 10);
    CHECK(ackermann_a(3, 0) == 1);
    CHECK(ackermann_a(1, 10) == 1024);
    CHECK(ackermann_a(2, 4) == 65536);
    CHECK(ackermann_a(3, 3) == 65536);
    CHECK(ackermann_a(4, 4) == kInfinity);
    CHECK(ackermann_b(0, 7) == 49);
    CHECK(ackermann_b(2, 0) == 2);
    CHECK(ackermann_b(1, 4) == 65536);
    for (std::uint64_t j = 0; j < 6; ++j) CHECK(ackermann_a(1, j) == static_cast<Weight>(ref_a(1, j)));
    CHECK(ackermann_a(2, 3) == static_cast<Weight>(ref_a(2, 3)));
}

TEST_CASE("lambda values") {
    CHECK(lambda(2, 16) == 4);
    CHECK(lambda(1, 16) == 4);
    CHECK(lambda(0, 7) == 4);
    CHECK(lambda(3, 65536) == 4);
    CHECK(lambda(3, 65537) == 5);
    CHECK(lambda(2, 17) == 5);
    CHECK(lambda(1, 17) == 5);
    CHECK(lambda(4, 16) == 3);
    CHECK(lambda(4, 17) == 4);
    CHECK(lambda(4, 65536) == 4);
    CHECK(lambda(4, 65537) == 5);
    for (std::uint64_t n = 1; n < 2000; ++n) {
        CHECK(lambda(0, n) == (n + 1) / 2);
        auto r = lambda(1, n);
        CHECK(r * r >= n);
        CHECK((r == 0 || (r - 1) * (r - 1) < n));
        CHECK(lambda(2, n) == static_cast<std::uint64_t>(std::ceil(std::log2(static_cast<double>(n)))));
    }
    CHECK(lambda(1, UINT64_MAX) == 4294967296ULL);
    CHECK(lambda(2, UINT64_MAX) == 64);
}

TEST_CASE("inverse Ackermann") {
    CHECK(inv_ackermann(1) == 1);
    CHECK(inv_ackermann(2) == 1);
    CHECK(inv_ackermann(4) == 2);
    CHECK(inv_ackermann(5) == 3);
    CHECK(inv_ackermann(65536) == 3);
    CHECK(inv_ackermann(65537) == 4);
    CHECK(inv_ackermann(UINT64_MAX) == 4);
    std::uint64_t prev = 0;
    for (std::uint64_t n = 1; n < (1ULL << 62); n = n * 3 + 1) {
        auto a = inv_ackermann(n);
        CHECK(a >= prev);
        CHECK(lambda(static_cast<unsigned>(2 * a), n) <= a);
        prev = a;
    }
}

TEST_CASE("split examples") {
    // Path of 8 rooted at one end.
    std::vector<int> path{-1, 0, 1, 2, 3, 4, 5, 6};
    auto s = split_tree(path, Ratio(2, 1));
    CHECK(s.P.size() <= 4);
    for (std::size_t c = 0; c < s.components.size(); ++c) {
        CHECK(s.components[c].size() < 4);
        CHECK(s.attachments[c].size() <= 2);
    }
    // Star K_{1,6} rooted at the center.
    std::vector<int> star{-1, 0, 0, 0, 0, 0, 0};
    auto st = split_tree(star, Ratio(2, 1));
    CHECK(st.P == std::vector<Node>{0});
    CHECK(st.components.size() == 6);
    for (const auto& c : st.components) CHECK(c.size() == 1);
    // Single node.
    std::vector<int> one{-1};
    auto o = split_tree(one, Ratio(2, 1));
    CHECK(o.P == std::vector<Node>{0});
    CHECK(o.components.empty());
}

TEST_CASE("split invariants on random trees") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto t = gnm_graph(60 + seed, 59 + seed, seed);
        const auto n = static_cast<std::int64_t>(t.num_nodes());
        for (std::int64_t lam : {2, 3, 5, 8}) {
            Ratio p(n, lam);
            auto s = split_tree(t, static_cast<Node>(seed % n), p);
            CHECK(static_cast<std::int64_t>(s.P.size()) * p.den <= 2 * p.num);
            std::set<Node> seen(s.P.begin(), s.P.end());
            for (std::size_t c = 0; c < s.components.size(); ++c) {
                CHECK(static_cast<std::int64_t>(s.components[c].size()) * p.num < n * p.den);
                CHECK(s.attachments[c].size() <= 2);
                std::set<Node> comp(s.components[c].begin(), s.components[c].end());
                // Attachments are exactly the P-neighbours of the component.
                std::set<Node> nb;
                for (Node u : comp)
                    for (const auto& a : t.neighbors(u))
                        if (!comp.count(a.to)) {
                            CHECK(std::binary_search(s.P.begin(), s.P.end(), a.to));
                            nb.insert(a.to);
                        }
                CHECK(std::vector<Node>(nb.begin(), nb.end()) == s.attachments[c]);
                for (Node u : comp) CHECK(seen.insert(u).second);
            }
            CHECK(static_cast<std::int64_t>(seen.size()) == n);
        }
    }
}

TEST_CASE("tree distances match dijkstra") {
    for (const auto& t : trees()) {
        TreeDistance td(t);
        for (Node u = 0; u < t.num_nodes(); ++u) {
            auto d = dijkstra(t, u).dist;
            for (Node v = 0; v < t.num_nodes(); ++v) CHECK(td(u, v) == d[v]);
        }
    }
}

TEST_CASE("tree hopsets validate for h = 1..6") {
    for (const auto& t : trees()) {
        for (int h = 1; h <= 6; ++h) {
            auto hs = tree_hopset(t, h);
            CHECK(hs.hopbound() == h);
            CHECK(validate_hopset(t, hs, h).pass);
            hs.verify_weights(t);
        }
    }
}

TEST_CASE("tree hopset agrees with Bellman-Ford on small trees") {
    for (std::uint64_t s = 1; s <= 4; ++s) {
        auto t = generate(GraphKind::Gnm, {.n = 18, .m = 17, .max_weight = 5}, s);
        for (int h = 2; h <= 4; ++h) CHECK(oracle::is_h_hopset(t, oracle::as_edges(tree_hopset(t, h)), h));
    }
}

TEST_CASE("path of 5 with h = 1") {
    auto hs = tree_hopset(path_graph(5), 1);
    CHECK(hs.size() == 6);
}

TEST_CASE("h = 2 size on paths grows like n log n") {
    std::vector<double> ratio;
    for (std::size_t n : {256, 1024, 4096}) {
        auto hs = tree_hopset(path_graph(n), 2);
        ratio.push_back(static_cast<double>(hs.size()) / (static_cast<double>(n) * lambda(2, n)));
    }
    for (double r : ratio) CHECK(r <= 4.0);
}

TEST_CASE("size per node is within a band around lambda_h on paths") {
    for (int h = 2; h <= 4; ++h) {
        for (std::size_t n : {256, 2048}) {
            auto hs = tree_hopset(path_graph(n), h);
            double per = static_cast<double>(hs.size()) / static_cast<double>(n);
            double lam = static_cast<double>(lambda(static_cast<unsigned>(h), n));
            CHECK(per >= lam / 8.0);
            CHECK(per <= 8.0 * lam);
        }
    }
}

TEST_CASE("h = 3 tags split into FirstLast and Middle") {
    auto t = balanced_tree(60, 3);
    auto hs = tree_hopset(t, 3);
    CHECK(hs.count(Part::Untagged) == 0);
    CHECK(hs.count(Part::FirstLast) > 0);
    CHECK(hs.count(Part::Middle) > 0);
    auto o = tree_three_hop_oracle(t);
    CHECK(validate_oracle(t, o).pass);
}

TEST_CASE("linear tree hopset") {
    for (std::size_t n : {64, 1024}) {
        auto t = path_graph(n);
        auto r = linear_tree_hopset(t);
        CHECK(r.hopbound == 2 * (static_cast<int>(inv_ackermann(n)) + 1));
        CHECK(validate_hopset(t, r.hopset, r.hopbound).pass);
    }
    for (const auto& t : trees()) {
        if (t.num_nodes() < 2) continue;
        auto r = linear_tree_hopset(t);
        CHECK(validate_hopset(t, r.hopset, r.hopbound).pass);
    }
    CHECK(inv_ackermann(1u << 16) == 3);
}

TEST_CASE("tree inputs are checked") {
    CHECK_THROWS_AS(tree_hopset(grid_graph(2, 2), 2), GraphError);
    CHECK_THROWS_AS(tree_hopset(path_graph(4), 0), InfeasibleParams);
}
