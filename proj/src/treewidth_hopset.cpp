#include "hopset/treewidth_hopset.hpp"

#include <algorithm>
#include <unordered_map>

#include "hopset/ackermann.hpp"
#include "hopset/tree_hopset.hpp"
#include "hopset/tree_split.hpp"

namespace hopset {

namespace {

enum Kind : std::uint8_t { kTree = 0, kSeparator = 1, kBag = 2 };

struct Builder {
    const TreeDecomposition& td;
    const RootedTd& rt;
    std::vector<std::vector<Node>> rooted_here;  // per bag: nodes u with R_u = bag
    std::size_t t = 1;
    int h = 2;

    std::vector<OracleArc> arcs;                 // separator and bag edges, oriented
    std::vector<std::pair<Node, Node>> tree;     // tree-hopset edges

    // Subtree of the bag tree: bag ids in preorder with local parent indices.
    void run(const std::vector<std::size_t>& bag, const std::vector<int>& parent) {
        const auto n = bag.size();
        if (n <= 1) return;
        std::uint64_t lam;
        Ratio p(1, 1);
        const auto nt = (n + t - 1) / t;  // ceil(n'/t)
        if (n > t && nt >= 2) lam = std::max<std::uint64_t>(lambda(static_cast<unsigned>(h - 2), nt), 1);
        else lam = 0;
        if (lam != 0 && lam * t < n) {
            p = Ratio(static_cast<std::int64_t>(n), static_cast<std::int64_t>(lam * t));
        } else {
            lam = std::max<std::uint64_t>(lambda(static_cast<unsigned>(h - 2), n), 1);
            lam = std::min<std::uint64_t>(lam, n - 1);
            p = Ratio(static_cast<std::int64_t>(n), static_cast<std::int64_t>(lam));
        }
        auto split = split_tree(parent, p);

        std::vector<char> in_p(n, 0);
        for (Node x : split.P) in_p[x] = 1;

        if (h == 2) {
            // Every node rooted in this subtree links to all nodes of all selected bags.
            for (std::size_t k = 0; k < n; ++k)
                for (Node u : rooted_here[bag[k]])
                    for (Node x : split.P)
                        for (Node y : td.bags[bag[x]]) arcs.push_back({u, y});
        } else {
            LocalForest tp;
            std::vector<int> p_anc(n, -1), p_index(n, -1);
            for (std::size_t k = 0; k < n; ++k) {
                int par = parent[k];
                int anc = par < 0 ? -1 : (in_p[par] ? par : p_anc[par]);
                p_anc[k] = anc;
                if (in_p[k]) {
                    p_index[k] = static_cast<int>(tp.node.size());
                    tp.node.push_back(static_cast<Node>(k));
                    tp.parent.push_back(anc < 0 ? -1 : p_index[anc]);
                }
            }
            auto hp = forest_hopset_pairs(tp, h - 2);
            for (std::size_t k = 0; k < tp.node.size(); ++k)
                if (tp.parent[k] >= 0) hp.push_back({tp.node[k], tp.node[tp.parent[k]], Part::Untagged});
            for (const auto& e : hp) {
                const auto& X = td.bags[bag[e.u]];
                const auto& Y = td.bags[bag[e.v]];
                for (Node x : X)
                    for (Node y : Y)
                        if (x != y) tree.emplace_back(x, y);
            }
            for (std::size_t c = 0; c < split.components.size(); ++c)
                for (Node k : split.components[c])
                    for (Node u : rooted_here[bag[k]])
                        for (Node a : split.attachments[c])
                            for (Node y : td.bags[bag[a]]) arcs.push_back({u, y});
        }

        for (const auto& comp : split.components) {
            std::vector<std::size_t> sub;
            std::vector<int> sub_parent, local(n, -1);
            for (Node k : comp) {
                local[k] = static_cast<int>(sub.size());
                sub.push_back(bag[k]);
                int par = parent[k];
                sub_parent.push_back(par >= 0 && local[par] >= 0 ? local[par] : -1);
            }
            run(sub, sub_parent);
        }
    }

    void add_bag_edges(std::size_t num_nodes) {
        for (Node u = 0; u < num_nodes; ++u)
            for (Node x : td.bags[rt.root_bag[u]]) arcs.push_back({u, x});
    }
};

void check_input(const WeightedGraph& g, const TreeDecomposition& td) {
    validate_td(g, td);
    if (!is_normalized(td)) throw InvalidDecomposition("decomposition is not normalized; run normalize_td first");
}

Builder make_builder(const TreeDecomposition& td, const RootedTd& rt, std::size_t n) {
    Builder b{td, rt, {}, std::max<std::size_t>(td.width(), 1), 2, {}, {}};
    b.rooted_here.resize(td.bags.size());
    for (Node u = 0; u < n; ++u) b.rooted_here[rt.root_bag[u]].push_back(u);
    return b;
}

void run_whole(Builder& b) {
    const auto& order = b.rt.order;
    std::vector<int> pos(b.td.bags.size());
    for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<int>(k);
    std::vector<int> parent(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) parent[k] = b.rt.parent[order[k]] < 0 ? -1 : pos[b.rt.parent[order[k]]];
    b.run(order, parent);
}

TwHopset assemble(const WeightedGraph& g, Builder& b, int hopbound, bool three_hop) {
    std::unordered_map<std::uint64_t, Kind> kind;
    auto note = [&](Node u, Node v, Kind k) {
        auto [it, fresh] = kind.emplace(pair_key(u, v), k);
        if (!fresh && k > it->second) it->second = k;
    };
    for (auto [u, v] : b.tree) note(u, v, kTree);
    // Bag edges are the last n·(t+1) arcs.
    const std::size_t bag_arcs = g.num_nodes() * (b.td.width() + 1);
    for (std::size_t i = 0; i < b.arcs.size(); ++i)
        note(b.arcs[i].from, b.arcs[i].to, i + bag_arcs >= b.arcs.size() ? kBag : kSeparator);

    std::vector<PairTag> pairs;
    pairs.reserve(b.arcs.size() + b.tree.size());
    const Part first = three_hop ? Part::FirstLast : Part::Untagged;
    const Part mid = three_hop ? Part::Middle : Part::Untagged;
    for (const auto& a : b.arcs) pairs.push_back({a.from, a.to, first});
    for (auto [u, v] : b.tree) pairs.push_back({u, v, mid});

    TwHopset out;
    out.hopset = Hopset::from_pairs(g, std::move(pairs), hopbound);
    for (const auto& e : out.hopset.edges()) {
        switch (kind.at(pair_key(e.u, e.v))) {
            case kTree: ++out.tree_edges; break;
            case kSeparator: ++out.separator_edges; break;
            case kBag: ++out.bag_edges; break;
        }
    }
    return out;
}

}  // namespace

TwHopset tw_hopset(const WeightedGraph& g, const TreeDecomposition& td, int h) {
    if (h < 2) throw InfeasibleParams("treewidth hopsets need h >= 2");
    check_input(g, td);
    auto rt = root_td(td, g.num_nodes());
    auto b = make_builder(td, rt, g.num_nodes());
    b.h = h;
    run_whole(b);
    b.add_bag_edges(g.num_nodes());
    return assemble(g, b, h, h == 3);
}

TwHopset tw_linear_hopset(const WeightedGraph& g, const TreeDecomposition& td) {
    check_input(g, td);
    auto rt = root_td(td, g.num_nodes());
    auto b = make_builder(td, rt, g.num_nodes());
    const auto nb = td.bags.size();
    const auto alpha = static_cast<int>(inv_ackermann(std::max<std::size_t>(nb, 2)));
    const int hopbound = 2 * (alpha + 1);

    const auto& order = rt.order;
    std::vector<int> pos(nb), parent(nb);
    for (std::size_t k = 0; k < nb; ++k) pos[order[k]] = static_cast<int>(k);
    for (std::size_t k = 0; k < nb; ++k) parent[k] = rt.parent[order[k]] < 0 ? -1 : pos[rt.parent[order[k]]];

    if (nb >= 2) {
        auto split = split_tree(parent, Ratio(static_cast<std::int64_t>(nb), alpha));
        std::vector<char> in_p(nb, 0);
        for (Node x : split.P) in_p[x] = 1;
        LocalForest tp;
        std::vector<int> p_anc(nb, -1), p_index(nb, -1);
        for (std::size_t k = 0; k < nb; ++k) {
            int par = parent[k];
            int anc = par < 0 ? -1 : (in_p[par] ? par : p_anc[par]);
            p_anc[k] = anc;
            if (in_p[k]) {
                p_index[k] = static_cast<int>(tp.node.size());
                tp.node.push_back(static_cast<Node>(k));
                tp.parent.push_back(anc < 0 ? -1 : p_index[anc]);
            }
        }
        auto hp = forest_hopset_pairs(tp, 2 * alpha);
        for (std::size_t k = 0; k < tp.node.size(); ++k)
            if (tp.parent[k] >= 0) hp.push_back({tp.node[k], tp.node[tp.parent[k]], Part::Untagged});
        auto cross = [&](std::size_t a, std::size_t c, bool skip_shared) {
            const auto& X = td.bags[order[a]];
            const auto& Y = td.bags[order[c]];
            for (Node x : X)
                for (Node y : Y) {
                    if (x == y) continue;
                    if (skip_shared && (std::binary_search(Y.begin(), Y.end(), x) || std::binary_search(X.begin(), X.end(), y)))
                        continue;
                    b.tree.emplace_back(x, y);
                }
        };
        for (const auto& e : hp) cross(e.u, e.v, false);
        // Tree edges inside components also contribute cross pairs.
        std::vector<int> comp_of(nb, -1);
        for (std::size_t c = 0; c < split.components.size(); ++c)
            for (Node k : split.components[c]) comp_of[k] = static_cast<int>(c);
        for (std::size_t k = 0; k < nb; ++k)
            if (parent[k] >= 0 && comp_of[k] >= 0 && comp_of[k] == comp_of[parent[k]])
                cross(k, static_cast<std::size_t>(parent[k]), true);
        for (std::size_t c = 0; c < split.components.size(); ++c)
            for (Node k : split.components[c])
                for (Node u : b.rooted_here[order[k]])
                    for (Node a : split.attachments[c])
                        for (Node y : td.bags[order[a]]) b.arcs.push_back({u, y});
    }
    b.add_bag_edges(g.num_nodes());
    return assemble(g, b, hopbound, false);
}

ThreeHopOracle tw_three_hop_oracle(const WeightedGraph& g, const TreeDecomposition& td) {
    check_input(g, td);
    auto rt = root_td(td, g.num_nodes());
    auto b = make_builder(td, rt, g.num_nodes());
    b.h = 3;
    run_whole(b);
    b.add_bag_edges(g.num_nodes());
    return ThreeHopOracle::build(g, std::move(b.arcs), std::move(b.tree));
}

}  // namespace hopset
