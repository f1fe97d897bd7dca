#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hopset/generators.hpp"
#include "hopset/graph_io.hpp"
#include "hopset/hopset.hpp"
#include "hopset/shortest_paths.hpp"
#include "hopset/usp.hpp"
#include "oracles.hpp"

using namespace hopset;

namespace {

std::vector<WeightedGraph> corpus() {
    std::vector<WeightedGraph> gs;
    gs.push_back(path_graph(9));
    gs.push_back(star_graph(6));
    gs.push_back(balanced_tree(20, 3));
    gs.push_back(grid_graph(4, 5));
    gs.push_back(caterpillar(6, 2, 3));
    for (std::uint64_t s = 1; s <= 4; ++s) gs.push_back(gnm_graph(20, 40, s));
    return gs;
}

Weight path_weight(const WeightedGraph& g, const std::vector<Node>& p) {
    Weight w = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) w += *g.edge_weight(p[i], p[i + 1]);
    return w;
}

}  // namespace

TEST_CASE("graph construction rejects malformed input") {
    CHECK_THROWS_AS(WeightedGraph(3, {{0, 0, 1}, {0, 1, 1}, {1, 2, 1}}), GraphError);
    CHECK_THROWS_AS(WeightedGraph(3, {{0, 1, 1}, {1, 0, 2}, {1, 2, 1}}), GraphError);
    CHECK_THROWS_AS(WeightedGraph(3, {{0, 1, 0}, {1, 2, 1}}), GraphError);
    CHECK_THROWS_AS(WeightedGraph(4, {{0, 1, 1}, {2, 3, 1}}), ConnectivityError);
    WeightedGraph g(3, {{2, 1, 5}, {0, 1, 1}});
    CHECK(g.edges()[0] == Edge{0, 1, 1});
    CHECK(g.edges()[1] == Edge{1, 2, 5});
    CHECK(g.edge_weight(2, 1) == 5);
    CHECK(g.is_tree());
}

TEST_CASE("dijkstra on a unit path") {
    auto g = path_graph(5);
    auto t = dijkstra(g, 0);
    CHECK(t.dist == std::vector<Weight>{0, 1, 2, 3, 4});
    CHECK(t.parent[0] == 0);
    for (Node v = 1; v < 5; ++v) CHECK(t.dist[v] == t.dist[t.parent[v]] + *g.edge_weight(t.parent[v], v));
    CHECK(dijkstra(g, 3).dist[3] == 0);
}

TEST_CASE("dijkstra agrees with Bellman-Ford on random graphs") {
    for (std::uint64_t s = 1; s <= 5; ++s) {
        auto g = gnm_graph(20, 40, s);
        for (Node src = 0; src < 20; ++src) {
            auto bf = oracle::bellman_ford(g, {}, src, 19);
            CHECK(dijkstra(g, src).dist == bf);
        }
    }
}

TEST_CASE("dijkstra ties prefer the smaller predecessor") {
    // 4-cycle: node 2 is reachable from 0 via 1 or 3 at equal length.
    WeightedGraph g(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
    CHECK(dijkstra(g, 0).parent[2] == 1);
}

TEST_CASE("limited hop distances") {
    auto g = path_graph(5);
    Hopset none;
    auto d = limited_hop_distances(g, none, 0, 2);
    CHECK(d[4] == kInfinity);
    CHECK(d[2] == 2);

    auto hs = Hopset::from_pairs(g, {{0, 2, Part::Untagged}, {2, 4, Part::Untagged}}, 2);
    CHECK(limited_hop_distances(g, hs, 0, 2)[4] == 4);

    for (const auto& gg : corpus()) {
        Hopset empty;
        const auto n = static_cast<int>(gg.num_nodes());
        for (Node s = 0; s < gg.num_nodes(); s += 3)
            CHECK(limited_hop_distances(gg, empty, s, n - 1) == dijkstra(gg, s).dist);
    }
}

TEST_CASE("limited hop distances reject too-short shortcuts") {
    auto g = path_graph(5);
    std::istringstream in("p hopset 5 2 1\ns 1 5 2 0\n");
    CHECK_THROWS_AS(read_hopset(in, g), InvalidShortcut);
}

TEST_CASE("make_usp on a unit 4-cycle") {
    WeightedGraph g(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
    CHECK(count_shortest_paths(g, 0)[2] == 2);
    CHECK(oracle::path_multiplicity(g, 0)[2] == 2);
    auto r = make_usp(g, 11);
    CHECK(r.graph.has_usp());
    CHECK(count_shortest_paths(r.graph, 0)[2] == 1);
    CHECK(oracle::path_multiplicity(r.graph, 0)[2] == 1);
    CHECK(original_weights(r.graph) == std::vector<Weight>{1, 1, 1, 1});
}

TEST_CASE("make_usp certificate invariants") {
    for (const auto& g : corpus()) {
        auto r = make_usp(g, 5);
        const auto& cert = r.certificate;
        const auto n = static_cast<Weight>(g.num_nodes());
        CHECK(cert.verified);
        CHECK((cert.scale & (cert.scale - 1)) == 0);
        CHECK(cert.scale >= 2 * n * n);
        std::vector<Weight> js = cert.jitter;
        std::sort(js.begin(), js.end());
        CHECK(std::adjacent_find(js.begin(), js.end()) == js.end());
        for (std::size_t i = 0; i < g.num_edges(); ++i) {
            CHECK(cert.jitter[i] >= 0);
            CHECK(cert.jitter[i] * n < cert.scale);
            CHECK(r.graph.edges()[i].w == g.edges()[i].w * cert.scale + cert.jitter[i]);
        }
        for (Node s = 0; s < g.num_nodes(); ++s) {
            for (auto c : count_shortest_paths(r.graph, s)) CHECK(c == 1);
            // Every scaled shortest path is an original shortest path.
            auto orig = dijkstra(g, s).dist;
            auto t = dijkstra(r.graph, s);
            for (Node v = 0; v < g.num_nodes(); ++v) CHECK(path_weight(g, t.path_to(v)) == orig[v]);
        }
    }
}

TEST_CASE("make_usp keeps an already unique path") {
    WeightedGraph g(4, {{0, 1, 3}, {1, 2, 1}, {2, 3, 7}});
    auto r = make_usp(g, 1);
    CHECK(r.graph.num_edges() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(r.graph.edges()[i].u == g.edges()[i].u);
        CHECK(r.graph.edges()[i].v == g.edges()[i].v);
    }
}

TEST_CASE("make_usp on a triangle never leaves a tie") {
    WeightedGraph g(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 2}});
    CHECK(count_shortest_paths(g, 0)[2] == 2);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto r = make_usp(g, seed);
        auto direct = *r.graph.edge_weight(0, 2);
        auto around = *r.graph.edge_weight(0, 1) + *r.graph.edge_weight(1, 2);
        CHECK(direct != around);
        CHECK(count_shortest_paths(r.graph, 0)[2] == 1);
    }
}

TEST_CASE("shortest_path") {
    auto plain = path_graph(5);
    CHECK_THROWS_AS(shortest_path(plain, 0, 3), MissingUspCertificate);
    auto g = make_usp(plain, 1).graph;
    CHECK(shortest_path(g, 0, 3) == std::vector<Node>{0, 1, 2, 3});
    CHECK(shortest_path(g, 2, 2) == std::vector<Node>{2});

    auto r = make_usp(gnm_graph(15, 30, 9), 3).graph;
    for (Node u = 0; u < 15; ++u) {
        auto d = dijkstra(r, u).dist;
        for (Node v = 0; v < 15; ++v) {
            auto p = shortest_path(r, u, v);
            CHECK(path_weight(r, p) == d[v]);
            auto q = shortest_path(r, v, u);
            std::reverse(q.begin(), q.end());
            CHECK(p == q);
        }
    }
}

TEST_CASE("generators") {
    auto p = path_graph(5);
    CHECK(p.num_nodes() == 5);
    CHECK(p.num_edges() == 4);
    for (const auto& e : p.edges()) CHECK(e.w == 1);
    auto gr = grid_graph(4, 4);
    CHECK(gr.num_nodes() == 16);
    CHECK(gr.num_edges() == 24);
    CHECK(gnm_graph(20, 40, 7).edges().size() == 40);
    auto a = gnm_graph(20, 40, 7), b = gnm_graph(20, 40, 7);
    CHECK(std::equal(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end()));
    for (const auto& e : a.edges()) CHECK((e.w >= 1 && e.w <= 16));
    CHECK(gnm_graph(20, 40, 8).edges().size() == 40);
    CHECK(gnm_graph(6, 15, 2).num_edges() == 15);
    CHECK_THROWS_AS(gnm_graph(10, 5, 1), InfeasibleParams);
    CHECK_THROWS_AS(gnm_graph(4, 7, 1), InfeasibleParams);
    CHECK_THROWS_AS(generate(GraphKind::Grid, {}, 0), InfeasibleParams);
    CHECK_THROWS_AS(parse_graph_kind("cube"), InfeasibleParams);
    CHECK(star_graph(4).num_nodes() == 5);
    CHECK(balanced_tree(15, 2).is_tree());
    CHECK(caterpillar(10, 3, 4).is_tree());
}

TEST_CASE("graph file round trip") {
    std::istringstream in("c tiny\np hop 3 2\ne 1 2 1\ne 2 3 1\n");
    auto g = read_graph(in);
    CHECK(g.num_nodes() == 3);
    CHECK(g.num_edges() == 2);
    std::ostringstream out;
    write_graph(out, g);
    CHECK(out.str() == "p hop 3 2\ne 1 2 1\ne 2 3 1\n");
    std::istringstream again(out.str());
    std::ostringstream out2;
    write_graph(out2, read_graph(again));
    CHECK(out2.str() == out.str());

    auto gg = gnm_graph(30, 60, 4);
    std::ostringstream s1;
    write_graph(s1, gg);
    std::istringstream s2(s1.str());
    CHECK(read_graph(s2) == gg);
}

TEST_CASE("graph file errors carry line numbers") {
    auto fails_at = [](const std::string& text, std::size_t line) {
        std::istringstream in(text);
        try {
            read_graph(in);
        } catch (const ParseError& e) {
            return e.line() == line;
        }
        return false;
    };
    CHECK(fails_at("p hop 3 2\ne 1 1 5\ne 2 3 1\n", 2));
    CHECK(fails_at("p hop 3 2\ne 1 2 1\ne 2 1 1\n", 3));
    CHECK(fails_at("p hop 3 2\ne 1 2 0\n", 2));
    CHECK(fails_at("p hop 3 2\ne 1 4 1\n", 2));
    CHECK(fails_at("e 1 2 1\n", 1));
    CHECK(fails_at("p hop 3 3\ne 1 2 1\ne 2 3 1\n", 3));
    CHECK(fails_at("p hop 3 2\nx 1 2\n", 2));
    std::istringstream disc("p hop 4 2\ne 1 2 1\ne 3 4 1\n");
    CHECK_THROWS_AS(read_graph(disc), ConnectivityError);
}
