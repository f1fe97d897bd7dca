// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hopset/ackermann.hpp"
#include "hopset/generators.hpp"
#include "hopset/lp_model.hpp"
#include "hopset/lp_rounding.hpp"
#include "hopset/lp_solver.hpp"
#include "hopset/shortest_paths.hpp"
#include "hopset/skeleton.hpp"
#include "hopset/tree_decomposition.hpp"
#include "hopset/tree_hopset.hpp"
#include "hopset/treewidth_hopset.hpp"
#include "hopset/usp.hpp"
#include "oracles.hpp"

using namespace hopset;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o, double secs) {
    std::printf("criterion %2d %s: %s (%.1fs) %s\n", id, o.pass ? "PASS" : "FAIL", title.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

struct Named {
    std::string name;
    WeightedGraph g;
    bool tree = false;
};

std::vector<Named> usp_corpus() {
    std::vector<Named> c;
    auto add = [&](std::string name, const WeightedGraph& g, bool tree) {
        c.push_back({std::move(name), make_usp(g, 1).graph, tree});
    };
    for (std::size_t n : {16u, 64u, 200u}) add("path" + std::to_string(n), path_graph(n), true);
    for (std::size_t l : {9u, 60u}) add("star" + std::to_string(l), star_graph(l), true);
    add("btree15", balanced_tree(15, 2), true);
    add("btree121", balanced_tree(121, 3), true);
    add("caterpillar5x2", caterpillar(5, 2, 1), true);
    add("caterpillar40x3", caterpillar(40, 3, 2), true);
    add("grid4x4", grid_graph(4, 4), false);
    add("grid8x8", grid_graph(8, 8), false);
    add("grid12x12", grid_graph(12, 12), false);
    add("gnm20", gnm_graph(20, 30, 4), false);
    add("gnm100", gnm_graph(100, 160, 5), false);
    add("gnm200", gnm_graph(200, 320, 6), false);
    add("gnm60w", generate(GraphKind::Gnm, {.n = 60, .m = 100, .max_weight = 9}, 7), false);
    return c;
}

// Max |R^(D)(u)| over levels against k, filled while criterion 1 builds skeleton oracles.
struct RSetCheck {
    std::string name;
    std::size_t max_r = 0;
    std::size_t k = 0;
    std::size_t levels = 0;
};
std::vector<RSetCheck> rset_checks;

Outcome criterion_exactness() {
    Outcome o;
    std::size_t checks = 0;
    for (const auto& [name, g, tree] : usp_corpus()) {
        auto need = [&](bool ok, const std::string& what) {
            ++checks;
            if (!ok) o.fail(name + " " + what);
        };
        const auto n = g.num_nodes();
        if (tree) {
            for (int h : {2, 3, 4}) need(validate_hopset(g, tree_hopset(g, h), h).pass, "tree h=" + std::to_string(h));
            auto lin = linear_tree_hopset(g);
            need(validate_hopset(g, lin.hopset, lin.hopbound).pass, "tree linear");
            need(validate_oracle(g, tree_three_hop_oracle(g)).pass, "tree oracle");
        }
        auto td = normalize_td(g, heuristic_td(g));
        for (int h : {2, 3, 4})
            need(validate_hopset(g, tw_hopset(g, td, h).hopset, h).pass, "treewidth h=" + std::to_string(h));
        auto twl = tw_linear_hopset(g, td);
        need(validate_hopset(g, twl.hopset, twl.hopset.hopbound()).pass, "treewidth linear");
        need(validate_oracle(g, tw_three_hop_oracle(g, td)).pass, "treewidth oracle");

        // Skeleton: the default cutoff (usually pure H') and a small one that activates levels.
        need(validate_oracle(g, build_skeleton_oracle(g, 3).oracle).pass, "skeleton default");
        auto s = build_skeleton_oracle(g, 3, SkeletonOverrides{.dprime = 5});
        need(validate_oracle(g, s.oracle).pass, "skeleton dprime=5");
        RSetCheck lc{name, 0, s.k, s.levels.size()};
        for (const auto& L : s.levels)
            for (const auto& r : L.R) lc.max_r = std::max(lc.max_r, r.size());
        rset_checks.push_back(lc);

        if (n <= 24) {
            for (int h : {2, 3}) {
                auto m = build_lp(g, h);
                auto sol = solve_lp(m);
                need(verify_solution(m, sol).ok, "lp flow h=" + std::to_string(h));
                auto r = round_solution(g, m, sol, 1);
                need(validate_hopset(g, r.hopset, h).pass, "lp h=" + std::to_string(h));
                if (h == 3) {
                    auto tm = build_lp_tradeoff(g, static_cast<double>(r.hopset.size()));
                    auto ts = solve_lp(tm);
                    need(verify_solution(tm, ts).ok, "lp3 flow");
                    need(validate_oracle(g, round_tradeoff(g, tm, ts, 1).oracle).pass, "lp3 oracle");
                }
            }
        }
    }
    if (o.pass) o.detail = std::to_string(checks) + " exact validations";
    return o;
}

Outcome criterion_query_identity() {
    Outcome o;
    auto g1 = make_usp(grid_graph(8, 8), 1).graph;
    auto g2 = make_usp(grid_graph(12, 12), 1).graph;
    struct Case {
        std::string name;
        const WeightedGraph* g;
        ThreeHopOracle o;
    };
    std::vector<Case> cases;
    cases.push_back({"treewidth grid8x8", &g1, tw_three_hop_oracle(g1, normalize_td(g1, heuristic_td(g1)))});
    cases.push_back({"skeleton grid12x12", &g2, build_skeleton_oracle(g2, 5, SkeletonOverrides{.dprime = 5}).oracle});
    auto tg = make_usp(balanced_tree(200, 2), 1).graph;
    cases.push_back({"tree btree200", &tg, tree_three_hop_oracle(tg)});
    for (const auto& c : cases) {
        const auto& g = *c.g;
        const auto n = g.num_nodes();
        auto dist = all_pairs_distances(g);
        std::mt19937_64 rng(2024);
        std::uniform_int_distribution<Node> pick(0, static_cast<Node>(n - 1));
        for (int i = 0; i < 10000; ++i) {
            Node u = pick(rng), v = pick(rng);
            auto q = c.o.query(u, v);
            if (q.lookups != c.o.n1(u).size() * c.o.n1(v).size()) o.fail(c.name + " sampled lookups");
            if (q.distance != dist[u][v]) o.fail(c.name + " sampled distance");
        }
        // Exhaustive: Σ_{u,v} lookups = (Σ_u |N1(u)|)^2, so the mean is (Σ|N1|)^2 / n^2 exactly.
        unsigned __int128 total = 0;
        for (Node u = 0; u < n; ++u)
            for (Node v = 0; v < n; ++v) total += c.o.query(u, v).lookups;
        unsigned __int128 s = 0;
        for (Node u = 0; u < n; ++u) s += c.o.n1(u).size();
        if (total != s * s) o.fail(c.name + " exhaustive mean");
        auto avg = average_query_cost(c.o);
        Ratio expect(static_cast<std::int64_t>(s * s), static_cast<std::int64_t>(n * n));
        if (avg.num != expect.num || avg.den != expect.den) o.fail(c.name + " average_query_cost");
    }
    if (o.pass) o.detail = "3 oracles, 10^4 sampled + exhaustive";
    return o;
}

std::vector<std::size_t> path_sizes() { return {1u << 8, 1u << 10, 1u << 12, 1u << 14}; }

Outcome criterion_tree_growth() {
    Outcome o;
    std::string detail;
    for (int h : {2, 3, 4}) {
        double lo = 1e18, hi = 0;
        for (auto n : path_sizes()) {
            auto g = path_graph(n);
            auto hs = tree_hopset(g, h);
            if (n <= (1u << 12) && !validate_hopset(g, hs, h).pass) o.fail("validation n=" + std::to_string(n));
            double r = static_cast<double>(hs.size()) / (static_cast<double>(n) * static_cast<double>(lambda(h, n)));
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        detail += fmt("h=%.0f band %.3f..%.3f; ", h, lo, hi);
        if (hi / lo >= 2.0) o.fail(fmt("h=%.0f ratio spread %.3f >= 2", h, hi / lo));
    }
    if (o.pass) o.detail = detail;
    return o;
}

Outcome criterion_linear() {
    Outcome o;
    double lo = 1e18, hi = 0;
    for (auto n : path_sizes()) {
        auto g = path_graph(n);
        auto lin = linear_tree_hopset(g);
        const int hb = 2 * (static_cast<int>(inv_ackermann(n)) + 1);
        if (lin.hopbound != hb) o.fail("hopbound " + std::to_string(lin.hopbound) + " != " + std::to_string(hb));
        if (!validate_hopset(g, lin.hopset, hb).pass) o.fail("validation n=" + std::to_string(n));
        double r = static_cast<double>(lin.hopset.size()) / static_cast<double>(n);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    if (hi / lo >= 2.0) o.fail(fmt("|H|/n spread %.3f >= 2", hi / lo));
    if (o.pass) o.detail = fmt("|H|/n in %.3f..%.3f", lo, hi);
    return o;
}

Outcome criterion_treewidth_degree() {
    Outcome o;
    double lo = 1e18, hi = 0;
    std::size_t tmax = 0;
    for (std::size_t cols : {16u, 64u, 256u}) {
        auto g = grid_graph(4, cols);
        auto td = normalize_td(g, heuristic_td(g));
        tmax = std::max(tmax, td.width());
        if (td.width() > 4) o.fail("heuristic width " + std::to_string(td.width()));
        auto orc = tw_three_hop_oracle(g, td);
        if (!validate_oracle(g, orc).pass) o.fail("oracle validation n=" + std::to_string(g.num_nodes()));
        double r = static_cast<double>(orc.max_n1()) /
                   (static_cast<double>(td.width() + 1) * static_cast<double>(lambda(3, g.num_nodes())));
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    // One constant for all sizes: the normalized degree may not drift by a factor 2 or more.
    if (hi / lo >= 2.0) o.fail(fmt("max|N1|/((t+1)lambda_3) spread %.3f >= 2", hi / lo));
    if (o.pass) o.detail = fmt("t<=%.0f, c in %.3f..%.3f", static_cast<double>(tmax), lo, hi);
    return o;
}

Outcome criterion_rset_bound() {
    Outcome o;
    std::size_t levels = 0;
    for (const auto& lc : rset_checks) {
        levels += lc.levels;
        if (lc.max_r > lc.k)
            o.fail(lc.name + " max|R|=" + std::to_string(lc.max_r) + " > k=" + std::to_string(lc.k));
    }
    if (rset_checks.empty()) o.fail("no skeleton builds recorded");
    if (o.pass) o.detail = std::to_string(rset_checks.size()) + " graphs, " + std::to_string(levels) + " levels";
    return o;
}

Outcome criterion_coverage() {
    Outcome o;
    auto g = make_usp(grid_graph(12, 12), 1).graph;
    const auto n = g.num_nodes();
    const auto k = skeleton_dimension(g).k;
    auto p = compute_params(g, k, 5, SkeletonOverrides{.dprime = 5});
    if (p.levels.size() < 2) o.fail("only " + std::to_string(p.levels.size()) + " levels");
    auto dist = all_pairs_distances(g);
    std::size_t pairs = 0;
    for (const auto& lv : p.levels) {
        auto L = build_level(g, lv.lower, lv.upper, p.rho);
        std::set<std::pair<Node, Node>> h2(L.h2.begin(), L.h2.end());
        for (Node u = 0; u < n; ++u)
            for (Node v = 0; v < n; ++v) {
                if (u == v || dist[u][v] < lv.lower || dist[u][v] > lv.upper) continue;
                ++pairs;
                Node q = L.window[u * n + v], r = L.window[v * n + u];
                bool ok = q != kNoNode && r != kNoNode && std::binary_search(L.R[u].begin(), L.R[u].end(), q) &&
                          std::binary_search(L.R[v].begin(), L.R[v].end(), r) &&
                          dist[u][q] + dist[q][r] + dist[r][v] == dist[u][v] &&
                          (q == r || h2.count({std::min(q, r), std::max(q, r)}));
                if (!ok) o.fail("no witness for " + std::to_string(u + 1) + " " + std::to_string(v + 1));
            }
    }
    if (o.pass) o.detail = std::to_string(p.levels.size()) + " levels, " + std::to_string(pairs) + " banded pairs";
    return o;
}

Outcome criterion_lp() {
    Outcome o;
    // Anchor by plain subset enumeration.
    auto p5 = make_usp(path_graph(5), 1).graph;
    if (oracle::brute_force_min_hopset(p5, 2, 3) != 2) o.fail("path5 h=2 ILP != 2");
    struct Inst {
        std::string name;
        WeightedGraph g;
        int h;
    };
    std::vector<Inst> inst{{"path5", path_graph(5), 2},
                           {"path8", path_graph(8), 2},
                           {"path12", path_graph(12), 3},
                           {"btree12", balanced_tree(12, 2), 2},
                           {"btree12x3", balanced_tree(12, 3), 2},
                           {"caterpillar4x2", caterpillar(4, 2, 3), 2},
                           {"gnm10a", gnm_graph(10, 13, 1), 2},
                           {"gnm10b", gnm_graph(10, 13, 2), 2},
                           {"gnm12", gnm_graph(12, 15, 1), 2},
                           {"gnm12h3", gnm_graph(12, 15, 2), 3}};
    std::string detail;
    for (auto& [name, raw, h] : inst) {
        auto g = make_usp(raw, 1).graph;
        auto m = build_lp(g, h);
        auto sol = solve_lp(m);
        int ilp = oracle::branching_min_hopset(g, h, 16);
        if (ilp < 0) {
            o.fail(name + " ILP search failed");
            continue;
        }
        if (sol.objective > ilp + 1e-6) o.fail(name + fmt(" LP %.3f > ILP %.0f", sol.objective, ilp));
        std::size_t worst = 0;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            try {
                auto r = round_solution(g, m, sol, seed);
                worst = std::max(worst, r.hopset.size());
                if (r.hopset.size() < static_cast<std::size_t>(ilp)) o.fail(name + " |H''| below ILP");
                if (!validate_hopset(g, r.hopset, h).pass) o.fail(name + " H'' invalid");
            } catch (const RoundingFailed& e) {
                o.fail(name + " seed " + std::to_string(seed) + ": " + e.what());
            }
        }
        detail += name + fmt(" %.2f<=%.0f<=%.0f; ", sol.objective, ilp, static_cast<double>(worst));
    }
    if (o.pass) o.detail = detail;
    return o;
}

Outcome criterion_prefix_minima() {
    Outcome o;
    const std::size_t len = 1000;
    std::vector<Node> path(len);
    std::iota(path.begin(), path.end(), 0);
    std::vector<std::uint32_t> pi(len);
    std::mt19937_64 rng(99);
    double total = 0;
    for (int t = 0; t < 1000; ++t) {
        std::iota(pi.begin(), pi.end(), 0);
        std::shuffle(pi.begin(), pi.end(), rng);
        total += static_cast<double>(prefix_minima(path, pi).size());
    }
    const double mean = total / 1000, ln = std::log(1000.0);
    if (mean < ln - 2 || mean > ln + 2) o.fail(fmt("mean %.3f outside [%.3f, %.3f]", mean, ln - 2, ln + 2));
    if (o.pass) o.detail = fmt("mean %.3f, ln 1000 = %.3f", mean, ln);
    return o;
}

Outcome criterion_tradeoff() {
    Outcome o;
    // c = 1, fixed in advance: |H''| / S <= ln^3 n at every size.
    const double c = 1.0;
    std::string detail;
    for (std::size_t n : {10u, 14u, 18u, 24u}) {
        for (bool path : {false, true}) {
            auto g = make_usp(path ? path_graph(n) : gnm_graph(n, n + n / 2, n), 1).graph;
            auto base = build_lp(g, 3);
            auto rounded = round_solution(g, base, solve_lp(base), 1);
            const double S = static_cast<double>(rounded.hopset.size());
            auto m = build_lp_tradeoff(g, S);
            auto sol = solve_lp(m);
            auto t = round_tradeoff(g, m, sol, 1);
            const std::string tag = (path ? "path" : "gnm") + std::to_string(n);
            if (!validate_oracle(g, t.oracle).pass) o.fail(tag + " oracle invalid");
            const double ratio = static_cast<double>(t.hopset.size()) / std::max(S, 1.0);
            const double ln = std::log(static_cast<double>(n));
            if (ratio > c * ln * ln * ln) o.fail(tag + fmt(" ratio %.3f > ln^3 n = %.3f", ratio, ln * ln * ln));
            detail += tag + fmt(" %.2f; ", ratio);
        }
    }
    if (o.pass) o.detail = "|H''|/S: " + detail;
    return o;
}

Outcome criterion_ackermann() {
    Outcome o;
    if (lambda(0, 7) != 4) o.fail("lambda_0(7)=" + std::to_string(lambda(0, 7)));
    if (lambda(1, 16) != 4) o.fail("lambda_1(16)=" + std::to_string(lambda(1, 16)));
    if (lambda(2, 16) != 4) o.fail("lambda_2(16)=" + std::to_string(lambda(2, 16)));
    if (lambda(3, 65536) != 4) o.fail("lambda_3(65536)=" + std::to_string(lambda(3, 65536)));
    std::vector<std::uint64_t> pts;
    for (std::uint64_t n = 1; n <= 5000; ++n) pts.push_back(n);
    for (int b = 13; b < 64; ++b) {
        pts.push_back((std::uint64_t{1} << b) - 1);
        pts.push_back(std::uint64_t{1} << b);
        pts.push_back((std::uint64_t{1} << b) + 1);
    }
    pts.push_back(~std::uint64_t{0});
    std::sort(pts.begin(), pts.end());
    std::uint64_t prev = 0;
    for (auto n : pts) {
        auto a = inv_ackermann(n);
        if (a < prev) o.fail("alpha decreases at " + std::to_string(n));
        if (a > 4) o.fail("alpha(" + std::to_string(n) + ")=" + std::to_string(a));
        prev = a;
    }
    if (o.pass) o.detail = std::to_string(pts.size()) + " sample points, alpha(2^64-1)=" + std::to_string(prev);
    return o;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        std::string title;
        std::function<Outcome()> run;
    };
    std::vector<Entry> all{{1, "exactness on the USP corpus", criterion_exactness},
                           {2, "query lookup identity", criterion_query_identity},
                           {3, "tree hopset growth", criterion_tree_growth},
                           {4, "linear-size tree hopset", criterion_linear},
                           {5, "treewidth oracle degrees", criterion_treewidth_degree},
                           {6, "skeleton R-set bound", criterion_rset_bound},
                           {7, "skeleton 3-hop coverage", criterion_coverage},
                           {8, "LP bound and rounding", criterion_lp},
                           {9, "prefix-minima mean", criterion_prefix_minima},
                           {10, "tradeoff size shape", criterion_tradeoff},
                           {11, "Ackermann tables", criterion_ackermann}};
    for (const auto& e : all) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = e.run();
        } catch (const std::exception& ex) {
            o.fail(std::string("exception: ") + ex.what());
        }
        report(e.id, e.title, o, seconds_since(t0));
    }
    std::printf("%d of %zu criteria failed\n", failures, all.size());
    return failures == 0 ? 0 : 1;
}
