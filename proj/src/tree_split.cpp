#include "hopset/tree_split.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopset {

namespace {

using Big = __int128;

}  // namespace

TreeSplit split_tree(std::span<const int> parent, Ratio p) {
    const auto n = parent.size();
    if (p.num <= p.den) throw std::invalid_argument("split_tree needs p > 1");
    TreeSplit out;
    if (n == 0) return out;

    // size >= n/p  <=>  size * p.num >= n * p.den
    auto big_enough = [&](std::size_t size) {
        return static_cast<Big>(size) * p.num >= static_cast<Big>(n) * p.den;
    };

    std::vector<char> in_p(n, 0);
    std::vector<std::size_t> residual(n, 1);
    for (std::size_t k = n; k-- > 0;) {
        if (big_enough(residual[k])) {
            in_p[k] = 1;
            residual[k] = 0;
        }
        if (parent[k] >= 0) residual[parent[k]] += residual[k];
    }

    // P'': nodes with at least two child subtrees containing P' nodes.
    std::vector<char> below(n, 0);
    std::vector<int> marked_children(n, 0);
    for (std::size_t k = n; k-- > 0;) {
        if (in_p[k] == 1) below[k] = 1;
        if (marked_children[k] >= 2 && !in_p[k]) in_p[k] = 2;
        if (below[k] && parent[k] >= 0) {
            ++marked_children[parent[k]];
            below[parent[k]] = 1;
        }
    }

    std::vector<int> comp(n, -1);
    for (std::size_t k = 0; k < n; ++k) {
        if (in_p[k]) {
            out.P.push_back(static_cast<Node>(k));
            int par = parent[k];
            if (par >= 0 && !in_p[par]) {
                auto& att = out.attachments[comp[par]];
                if (std::find(att.begin(), att.end(), static_cast<Node>(k)) == att.end())
                    att.push_back(static_cast<Node>(k));
            }
            continue;
        }
        int par = parent[k];
        if (par >= 0 && !in_p[par]) {
            comp[k] = comp[par];
        } else {
            comp[k] = static_cast<int>(out.components.size());
            out.components.emplace_back();
            out.attachments.emplace_back();
            if (par >= 0) out.attachments.back().push_back(static_cast<Node>(par));
        }
        out.components[comp[k]].push_back(static_cast<Node>(k));
    }

    // Runtime check of the splitting guarantees.
    if (static_cast<Big>(out.P.size()) * p.den > static_cast<Big>(2) * p.num)
        throw std::logic_error("tree split selected more than 2p nodes");
    for (std::size_t c = 0; c < out.components.size(); ++c) {
        if (big_enough(out.components[c].size())) throw std::logic_error("tree split left a component of size >= n/p");
        if (out.attachments[c].size() > 2) throw std::logic_error("tree split component has more than 2 attachments");
        std::sort(out.attachments[c].begin(), out.attachments[c].end());
    }
    return out;
}

void root_tree(const WeightedGraph& t, Node root, std::vector<Node>& order, std::vector<Node>& parent) {
    const auto n = t.num_nodes();
    order.clear();
    order.reserve(n);
    parent.assign(n, kNoNode);
    std::vector<char> seen(n, 0);
    std::vector<Node> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
        Node u = stack.back();
        stack.pop_back();
        order.push_back(u);
        auto nb = t.neighbors(u);
        for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
            if (seen[it->to]) continue;
            seen[it->to] = 1;
            parent[it->to] = u;
            stack.push_back(it->to);
        }
    }
}

TreeSplit split_tree(const WeightedGraph& t, Node root, Ratio p) {
    if (!t.is_tree()) throw GraphError("split_tree needs a tree");
    std::vector<Node> order, parent;
    root_tree(t, root, order, parent);
    std::vector<int> pos(t.num_nodes());
    for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<int>(k);
    std::vector<int> local(order.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        local[k] = parent[order[k]] == kNoNode ? -1 : pos[parent[order[k]]];
    auto s = split_tree(local, p);
    auto map = [&](std::vector<Node>& v) {
        for (auto& x : v) x = order[x];
    };
    map(s.P);
    std::sort(s.P.begin(), s.P.end());
    for (auto& c : s.components) map(c);
    for (auto& a : s.attachments) {
        map(a);
        std::sort(a.begin(), a.end());
    }
    return s;
}

}  // namespace hopset
