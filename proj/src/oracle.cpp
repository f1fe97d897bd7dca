#include "hopset/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "hopset/parallel.hpp"
#include "hopset/shortest_paths.hpp"

namespace hopset {

namespace {

// Fills w[i] = d_G(pairs[i]) with one Dijkstra per distinct first endpoint.
void fill_distances(const WeightedGraph& g, const std::vector<std::pair<Node, Node>>& pairs, std::vector<Weight>& w,
                    const DistanceFn& dist) {
    w.assign(pairs.size(), 0);
    if (dist) {
        for (std::size_t i = 0; i < pairs.size(); ++i) w[i] = dist(pairs[i].first, pairs[i].second);
        return;
    }
    std::vector<std::size_t> idx(pairs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pairs[a] < pairs[b]; });
    std::vector<std::size_t> runs;
    for (std::size_t i = 0; i < idx.size(); ++i)
        if (i == 0 || pairs[idx[i]].first != pairs[idx[i - 1]].first) runs.push_back(i);
    runs.push_back(idx.size());
    parallel_for(runs.size() - 1, [&](std::size_t r) {
        auto d = distances_from(g, pairs[idx[runs[r]]].first);
        for (std::size_t i = runs[r]; i < runs[r + 1]; ++i) w[idx[i]] = d[pairs[idx[i]].second];
    });
}

}  // namespace

ThreeHopOracle ThreeHopOracle::build(const WeightedGraph& g, std::vector<OracleArc> arcs,
                                     std::vector<std::pair<Node, Node>> h2, const DistanceFn& dist) {
    const auto n = g.num_nodes();
    ThreeHopOracle o;

    std::vector<std::pair<Node, Node>> arc_pairs;
    arc_pairs.reserve(arcs.size());
    for (const auto& a : arcs) {
        if (a.from >= n || a.to >= n) throw GraphError("oracle arc endpoint out of range");
        if (a.from != a.to) arc_pairs.emplace_back(a.from, a.to);
    }
    std::sort(arc_pairs.begin(), arc_pairs.end());
    arc_pairs.erase(std::unique(arc_pairs.begin(), arc_pairs.end()), arc_pairs.end());

    std::vector<std::uint64_t> h1_keys;
    h1_keys.reserve(arc_pairs.size());
    for (auto [a, b] : arc_pairs) h1_keys.push_back(pair_key(a, b));
    std::sort(h1_keys.begin(), h1_keys.end());
    o.h1_size_ = static_cast<std::size_t>(std::unique(h1_keys.begin(), h1_keys.end()) - h1_keys.begin());

    std::vector<Weight> arc_w;
    fill_distances(g, arc_pairs, arc_w, dist);

    o.offsets_.assign(n + 1, 0);
    for (auto [a, b] : arc_pairs) ++o.offsets_[a + 1];
    for (std::size_t i = 0; i < n; ++i) o.offsets_[i + 1] += o.offsets_[i] + 1;
    o.entries_.resize(o.offsets_[n]);
    // arc_pairs is sorted by (from, to), so each list is emitted in target order with the self entry merged in.
    std::size_t k = 0;
    for (Node w = 0; w < n; ++w) {
        std::size_t pos = o.offsets_[w];
        bool self_done = false;
        for (; k < arc_pairs.size() && arc_pairs[k].first == w; ++k) {
            if (!self_done && arc_pairs[k].second > w) {
                o.entries_[pos++] = {w, 0};
                self_done = true;
            }
            o.entries_[pos++] = {arc_pairs[k].second, arc_w[k]};
        }
        if (!self_done) o.entries_[pos++] = {w, 0};
    }

    // Middle table: H2, E, and identities for every arc target.
    for (auto& [a, b] : h2) {
        if (a >= n || b >= n) throw GraphError("middle pair endpoint out of range");
        if (a > b) std::swap(a, b);
    }
    h2.erase(std::remove_if(h2.begin(), h2.end(), [](const auto& p) { return p.first == p.second; }), h2.end());
    std::sort(h2.begin(), h2.end());
    h2.erase(std::unique(h2.begin(), h2.end()), h2.end());

    std::vector<std::pair<Node, Node>> mid_pairs = h2;
    if (!g.is_tree()) {
        for (const auto& e : g.edges()) mid_pairs.emplace_back(e.u, e.v);
    }
    std::vector<Weight> mid_w;
    fill_distances(g, mid_pairs, mid_w, dist);
    o.mid_.reserve(mid_pairs.size() + g.num_edges() + n);
    for (std::size_t i = 0; i < mid_pairs.size(); ++i) o.mid_[pair_key(mid_pairs[i].first, mid_pairs[i].second)] = mid_w[i];
    if (g.is_tree()) {
        for (const auto& e : g.edges()) o.mid_[pair_key(e.u, e.v)] = e.w;
    }
    for (const auto& [a, b] : arc_pairs) o.mid_[pair_key(b, b)] = 0;

    std::size_t extra = 0;
    for (const auto& [a, b] : h2)
        if (!g.has_edge(a, b)) ++extra;
    o.h2_size_ = extra;
    o.h2_ = std::move(h2);
    return o;
}

ThreeHopOracle ThreeHopOracle::from_hopset(const WeightedGraph& g, const Hopset& hs, const DistanceFn& dist) {
    std::vector<OracleArc> arcs;
    std::vector<std::pair<Node, Node>> h2;
    for (const auto& e : hs.edges()) {
        if (e.part != Part::Middle) {
            arcs.push_back({e.u, e.v});
            arcs.push_back({e.v, e.u});
        }
        if (e.part != Part::FirstLast) h2.emplace_back(e.u, e.v);
    }
    if (!dist) {
        // Reuse the stored exact weights instead of rerunning Dijkstra.
        std::unordered_map<std::uint64_t, Weight> w;
        for (const auto& e : hs.edges()) w[pair_key(e.u, e.v)] = e.w;
        DistanceFn fn = [&](Node a, Node b) -> Weight {
            if (a == b) return 0;
            auto it = w.find(pair_key(a, b));
            if (it != w.end()) return it->second;
            return *g.edge_weight(a, b);  // tree edges only; non-tree graphs look up H2 ∪ H1 pairs
        };
        if (g.is_tree()) return build(g, std::move(arcs), std::move(h2), fn);
    }
    return build(g, std::move(arcs), std::move(h2), dist);
}

std::optional<Weight> ThreeHopOracle::mid(Node x, Node y) const {
    if (x == y) return Weight{0};
    auto it = mid_.find(pair_key(x, y));
    if (it == mid_.end()) return std::nullopt;
    return it->second;
}

QueryResult ThreeHopOracle::query(Node u, Node v) const {
    QueryResult r;
    auto a = n1(u), b = n1(v);
    r.lookups = a.size() * b.size();
    for (const auto& x : a) {
        for (const auto& y : b) {
            Weight m;
            if (x.to == y.to) {
                m = 0;  // identity entry
            } else {
                auto it = mid_.find(pair_key(x.to, y.to));
                if (it == mid_.end()) continue;
                m = it->second;
            }
            r.distance = std::min(r.distance, x.d + m + y.d);
        }
    }
    if (r.distance == kInfinity && u != v)
        throw NoCover("no middle entry covers the pair " + std::to_string(u + 1) + " " + std::to_string(v + 1));
    if (u == v) r.distance = 0;
    return r;
}

std::size_t ThreeHopOracle::max_n1() const {
    std::size_t best = 0;
    for (std::size_t w = 0; w + 1 < offsets_.size(); ++w) best = std::max(best, offsets_[w + 1] - offsets_[w]);
    return best;
}

std::vector<OracleArc> ThreeHopOracle::arcs() const {
    std::vector<OracleArc> out;
    for (Node w = 0; w < num_nodes(); ++w)
        for (const auto& e : n1(w))
            if (e.to != w) out.push_back({w, e.to});
    return out;
}

ValidationReport validate_oracle(const WeightedGraph& g, const ThreeHopOracle& o, const OracleValidationOptions& opts) {
    const auto n = g.num_nodes();
    ValidationReport rep;
    auto check = [&](Node u, Node v, Weight exact, std::vector<Violation>& out) -> bool {
        Weight got = kInfinity;
        try {
            got = o.query(u, v).distance;
        } catch (const NoCover&) {
        }
        if (got == exact) return true;
        if (out.size() < ValidationReport::kMaxListed) out.push_back({u, v, got, exact});
        return false;
    };
    std::vector<std::vector<Violation>> listed;
    std::vector<std::size_t> checked, failed;
    if (n <= opts.exhaustive_limit) {
        listed.resize(n);
        checked.assign(n, 0);
        failed.assign(n, 0);
        parallel_for(n, [&](std::size_t si) {
            const auto s = static_cast<Node>(si);
            auto d = distances_from(g, s);
            for (Node v = 0; v < n; ++v) {
                if (v == s) continue;
                ++checked[s];
                if (!check(s, v, d[v], listed[s])) ++failed[s];
            }
        });
    } else {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<Node> pick(0, static_cast<Node>(n - 1));
        std::vector<std::pair<Node, Node>> pairs;
        pairs.reserve(opts.samples);
        while (pairs.size() < opts.samples) {
            Node u = pick(rng), v = pick(rng);
            if (u != v) pairs.emplace_back(u, v);
        }
        std::sort(pairs.begin(), pairs.end());
        std::vector<std::size_t> runs;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (i == 0 || pairs[i].first != pairs[i - 1].first) runs.push_back(i);
        runs.push_back(pairs.size());
        const auto groups = runs.size() - 1;
        listed.resize(groups);
        checked.assign(groups, 0);
        failed.assign(groups, 0);
        parallel_for(groups, [&](std::size_t r) {
            auto d = distances_from(g, pairs[runs[r]].first);
            for (std::size_t i = runs[r]; i < runs[r + 1]; ++i) {
                ++checked[r];
                if (!check(pairs[i].first, pairs[i].second, d[pairs[i].second], listed[r])) ++failed[r];
            }
        });
    }
    for (std::size_t i = 0; i < listed.size(); ++i) {
        rep.pairs_checked += checked[i];
        rep.violation_count += failed[i];
        for (const auto& v : listed[i])
            if (rep.violations.size() < ValidationReport::kMaxListed) rep.violations.push_back(v);
    }
    rep.pass = rep.violation_count == 0;
    return rep;
}

Ratio average_query_cost(const ThreeHopOracle& o) {
    const auto n = static_cast<std::int64_t>(o.num_nodes());
    const auto s = static_cast<std::int64_t>(o.total_n1());
    return Ratio(s * s, n * n);
}

ThreeHopOracle read_oracle(std::istream& in, const WeightedGraph& g) {
    std::string line;
    std::size_t lineno = 0, want_arcs = 0, want_mids = 0;
    bool header = false;
    std::vector<OracleArc> arcs;
    std::vector<std::pair<Node, Node>> mids;
    const auto n = static_cast<long long>(g.num_nodes());
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            long long nn = 0, a = 0, m = 0;
            if (header) throw ParseError("duplicate header", lineno);
            if (!(ss >> kind >> nn >> a >> m) || kind != "oracle" || a < 0 || m < 0)
                throw ParseError("expected 'p oracle <n> <arcs> <mids>'", lineno);
            if (nn != n) throw ParseError("oracle node count does not match the graph", lineno);
            want_arcs = static_cast<std::size_t>(a);
            want_mids = static_cast<std::size_t>(m);
            header = true;
        } else if (tag == "a" || tag == "m") {
            if (!header) throw ParseError("entry before header", lineno);
            long long x = 0, y = 0;
            if (!(ss >> x >> y) || x < 1 || y < 1 || x > n || y > n) throw ParseError("bad node ids", lineno);
            if (tag == "a")
                arcs.push_back({static_cast<Node>(x - 1), static_cast<Node>(y - 1)});
            else
                mids.emplace_back(static_cast<Node>(x - 1), static_cast<Node>(y - 1));
        } else {
            throw ParseError("unknown line type '" + tag + "'", lineno);
        }
        std::string extra;
        if (ss >> extra) throw ParseError("trailing tokens", lineno);
    }
    if (!header) throw ParseError("missing header", lineno);
    if (arcs.size() != want_arcs || mids.size() != want_mids)
        throw ParseError("entry counts do not match the header", lineno);
    return ThreeHopOracle::build(g, std::move(arcs), std::move(mids));
}

ThreeHopOracle read_oracle(const std::string& path, const WeightedGraph& g) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    return read_oracle(in, g);
}

void write_oracle(std::ostream& out, const ThreeHopOracle& o) {
    auto arcs = o.arcs();
    out << "p oracle " << o.num_nodes() << ' ' << arcs.size() << ' ' << o.h2_pairs().size() << '\n';
    for (const auto& a : arcs) out << "a " << a.from + 1 << ' ' << a.to + 1 << '\n';
    for (const auto& [x, y] : o.h2_pairs()) out << "m " << x + 1 << ' ' << y + 1 << '\n';
}

void write_oracle(const std::string& path, const ThreeHopOracle& o) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path, 0);
    write_oracle(out, o);
}

}  // namespace hopset
