#include "hopset/tree_hopset.hpp"

#include <algorithm>

#include "hopset/ackermann.hpp"
#include "hopset/tree_split.hpp"

namespace hopset {

TreeDistance::TreeDistance(const WeightedGraph& t, Node root) {
    if (!t.is_tree()) throw GraphError("TreeDistance needs a tree");
    const auto n = t.num_nodes();
    std::vector<Node> order, parent;
    root_tree(t, root, order, parent);
    depth_.assign(n, 0);
    dist_.assign(n, 0);
    std::size_t levels = 1;
    while ((std::size_t{1} << levels) < n) ++levels;
    up_.assign(levels, std::vector<Node>(n, root));
    for (Node v : order) {
        if (v == root) continue;
        Node p = parent[v];
        up_[0][v] = p;
        depth_[v] = depth_[p] + 1;
        dist_[v] = dist_[p] + *t.edge_weight(p, v);
    }
    for (std::size_t k = 1; k < levels; ++k)
        for (Node v = 0; v < n; ++v) up_[k][v] = up_[k - 1][up_[k - 1][v]];
}

Node TreeDistance::lca(Node u, Node v) const {
    if (depth_[u] < depth_[v]) std::swap(u, v);
    auto diff = depth_[u] - depth_[v];
    for (std::size_t k = 0; diff; ++k, diff >>= 1)
        if (diff & 1) u = up_[k][u];
    if (u == v) return u;
    for (std::size_t k = up_.size(); k-- > 0;) {
        if (up_[k][u] != up_[k][v]) {
            u = up_[k][u];
            v = up_[k][v];
        }
    }
    return up_[0][u];
}

Weight TreeDistance::operator()(Node u, Node v) const { return dist_[u] + dist_[v] - 2 * dist_[lca(u, v)]; }

namespace {

enum class Role { Plain, Top3, Middle };

struct Sink {
    std::vector<PairTag> pairs;
    std::vector<OracleArc>* arcs = nullptr;  // set only when building an oracle

    void add(Node a, Node b, Part part) { pairs.push_back({a, b, part}); }
};

Part tag_of(Role r) { return r == Role::Middle ? Part::Middle : Part::Untagged; }

// Splits a forest into its trees, each re-indexed locally.
std::vector<LocalForest> trees_of(const LocalForest& f) {
    std::vector<int> which(f.node.size(), -1), local(f.node.size(), -1);
    std::vector<LocalForest> out;
    for (std::size_t k = 0; k < f.node.size(); ++k) {
        int p = f.parent[k];
        if (p < 0) {
            which[k] = static_cast<int>(out.size());
            out.emplace_back();
        } else {
            which[k] = which[p];
        }
        auto& t = out[which[k]];
        local[k] = static_cast<int>(t.node.size());
        t.node.push_back(f.node[k]);
        t.parent.push_back(p < 0 ? -1 : local[p]);
    }
    return out;
}

LocalForest sub_forest(const LocalForest& t, const std::vector<Node>& members) {
    // members are local indices of t in preorder.
    std::vector<int> local(t.node.size(), -1);
    LocalForest out;
    for (Node k : members) {
        local[k] = static_cast<int>(out.node.size());
        out.node.push_back(t.node[k]);
        int p = t.parent[k];
        out.parent.push_back(p >= 0 && local[p] >= 0 ? local[p] : -1);
    }
    return out;
}

void build_tree(const LocalForest& t, int h, Role role, Sink& out);

void build_forest(const LocalForest& f, int h, Role role, Sink& out) {
    for (const auto& t : trees_of(f)) build_tree(t, h, role, out);
}

void build_tree(const LocalForest& t, int h, Role role, Sink& out) {
    const auto n = t.node.size();
    if (n <= 2) return;
    if (h == 1) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) out.add(t.node[a], t.node[b], tag_of(role));
        return;
    }
    auto lam = std::max<std::uint64_t>(lambda(static_cast<unsigned>(h - 2), n), 1);
    lam = std::min<std::uint64_t>(lam, n - 1);
    auto split = split_tree(t.parent, Ratio(static_cast<std::int64_t>(n), static_cast<std::int64_t>(lam)));

    if (h == 2) {
        for (std::size_t u = 0; u < n; ++u)
            for (Node x : split.P) out.add(t.node[u], t.node[x], tag_of(role));
    } else {
        // Forest T' on P: each P-node hangs off its closest proper P-ancestor.
        std::vector<int> p_anc(n, -1), p_index(n, -1);
        LocalForest tp;
        for (std::size_t k = 0; k < n; ++k) {
            int par = t.parent[k];
            int anc = par < 0 ? -1 : (p_index[par] >= 0 ? par : p_anc[par]);
            p_anc[k] = anc;
            if (std::binary_search(split.P.begin(), split.P.end(), static_cast<Node>(k))) {
                p_index[k] = static_cast<int>(tp.node.size());
                tp.node.push_back(t.node[k]);
                tp.parent.push_back(anc < 0 ? -1 : p_index[anc]);
            }
        }
        const Part mid = role == Role::Top3 ? Part::Middle : tag_of(role);
        for (std::size_t k = 0; k < tp.node.size(); ++k)
            if (tp.parent[k] >= 0) out.add(tp.node[k], tp.node[tp.parent[k]], mid);
        build_forest(tp, h - 2, role == Role::Plain ? Role::Plain : Role::Middle, out);

        const Part attach = role == Role::Top3 ? Part::FirstLast : tag_of(role);
        for (std::size_t c = 0; c < split.components.size(); ++c) {
            for (Node u : split.components[c]) {
                for (Node x : split.attachments[c]) {
                    out.add(t.node[u], t.node[x], attach);
                    if (out.arcs && role == Role::Top3) out.arcs->push_back({t.node[u], t.node[x]});
                }
            }
        }
    }
    for (const auto& comp : split.components) build_tree(sub_forest(t, comp), h, role, out);
}

LocalForest whole_tree(const WeightedGraph& t) {
    std::vector<Node> order, parent;
    root_tree(t, 0, order, parent);
    std::vector<int> pos(t.num_nodes());
    for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<int>(k);
    LocalForest f;
    f.node = order;
    f.parent.resize(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) f.parent[k] = parent[order[k]] == kNoNode ? -1 : pos[parent[order[k]]];
    return f;
}

void require_tree(const WeightedGraph& t) {
    if (!t.is_tree()) throw GraphError("input graph is not a tree");
}

}  // namespace

std::vector<PairTag> forest_hopset_pairs(const LocalForest& f, int h) {
    if (h < 1) throw InfeasibleParams("hopbound must be >= 1");
    Sink s;
    build_forest(f, h, Role::Plain, s);
    return std::move(s.pairs);
}

Hopset tree_hopset(const WeightedGraph& t, int h) {
    require_tree(t);
    if (h < 1) throw InfeasibleParams("hopbound must be >= 1");
    TreeDistance dist(t);
    Sink s;
    build_tree(whole_tree(t), h, h == 3 ? Role::Top3 : Role::Plain, s);
    return Hopset::from_pairs(t, std::move(s.pairs), h, [&](Node a, Node b) { return dist(a, b); });
}

LinearTreeHopset linear_tree_hopset(const WeightedGraph& t) {
    require_tree(t);
    const auto n = t.num_nodes();
    if (n < 2) throw InfeasibleParams("linear tree hopset needs n >= 2");
    const auto alpha = static_cast<int>(inv_ackermann(n));
    TreeDistance dist(t);
    auto f = whole_tree(t);
    auto split = split_tree(f.parent, Ratio(static_cast<std::int64_t>(n), alpha));

    std::vector<PairTag> pairs;
    for (std::size_t c = 0; c < split.components.size(); ++c)
        for (Node u : split.components[c])
            for (Node x : split.attachments[c]) pairs.push_back({f.node[u], f.node[x], Part::Untagged});

    std::vector<int> p_anc(n, -1), p_index(n, -1);
    LocalForest tp;
    for (std::size_t k = 0; k < n; ++k) {
        int par = f.parent[k];
        int anc = par < 0 ? -1 : (p_index[par] >= 0 ? par : p_anc[par]);
        p_anc[k] = anc;
        if (std::binary_search(split.P.begin(), split.P.end(), static_cast<Node>(k))) {
            p_index[k] = static_cast<int>(tp.node.size());
            tp.node.push_back(f.node[k]);
            tp.parent.push_back(anc < 0 ? -1 : p_index[anc]);
        }
    }
    for (std::size_t k = 0; k < tp.node.size(); ++k)
        if (tp.parent[k] >= 0) pairs.push_back({tp.node[k], tp.node[tp.parent[k]], Part::Untagged});
    auto inner = forest_hopset_pairs(tp, 2 * alpha);
    pairs.insert(pairs.end(), inner.begin(), inner.end());

    const int hb = 2 * (alpha + 1);
    return {Hopset::from_pairs(t, std::move(pairs), hb, [&](Node a, Node b) { return dist(a, b); }), hb};
}

ThreeHopOracle tree_three_hop_oracle(const WeightedGraph& t) {
    require_tree(t);
    TreeDistance dist(t);
    std::vector<OracleArc> arcs;
    Sink s;
    s.arcs = &arcs;
    build_tree(whole_tree(t), 3, Role::Top3, s);
    std::vector<std::pair<Node, Node>> mids;
    for (const auto& p : s.pairs)
        if (p.part != Part::FirstLast) mids.emplace_back(p.u, p.v);
    return ThreeHopOracle::build(t, std::move(arcs), std::move(mids), [&](Node a, Node b) { return dist(a, b); });
}

}  // namespace hopset
