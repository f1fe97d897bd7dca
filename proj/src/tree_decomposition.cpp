#include "hopset/tree_decomposition.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace hopset {

std::size_t TreeDecomposition::width() const {
    std::size_t w = 0;
    for (const auto& b : bags) w = std::max(w, b.size());
    return w == 0 ? 0 : w - 1;
}

namespace {

std::vector<std::vector<std::size_t>> bag_adjacency(const TreeDecomposition& td) {
    std::vector<std::vector<std::size_t>> adj(td.bags.size());
    for (auto [a, b] : td.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& l : adj) std::sort(l.begin(), l.end());
    return adj;
}

std::string node_name(Node u) { return std::to_string(u + 1); }

}  // namespace

RootedTd root_td(const TreeDecomposition& td, std::size_t num_nodes) {
    RootedTd r;
    const auto nb = td.bags.size();
    r.parent.assign(nb, -1);
    r.root_bag.assign(num_nodes, SIZE_MAX);
    if (nb == 0) return r;
    auto adj = bag_adjacency(td);
    std::vector<char> seen(nb, 0);
    std::vector<std::size_t> stack{td.root};
    seen[td.root] = 1;
    while (!stack.empty()) {
        auto b = stack.back();
        stack.pop_back();
        r.order.push_back(b);
        for (Node u : td.bags[b])
            if (r.root_bag[u] == SIZE_MAX) r.root_bag[u] = b;
        for (auto it = adj[b].rbegin(); it != adj[b].rend(); ++it) {
            if (seen[*it]) continue;
            seen[*it] = 1;
            r.parent[*it] = static_cast<int>(b);
            stack.push_back(*it);
        }
    }
    return r;
}

void validate_td(const WeightedGraph& g, const TreeDecomposition& td) {
    const auto n = g.num_nodes();
    const auto nb = td.bags.size();
    if (nb == 0) throw InvalidDecomposition("decomposition has no bags");
    if (td.root >= nb) throw InvalidDecomposition("root bag out of range");
    for (std::size_t b = 0; b < nb; ++b)
        for (Node u : td.bags[b])
            if (u >= n) throw InvalidDecomposition("bag " + std::to_string(b + 1) + " holds unknown node " + node_name(u));
    // Bag tree must be a tree.
    if (td.edges.size() + 1 != nb) throw InvalidDecomposition("bag graph is not a tree: wrong number of edges");
    for (auto [a, b] : td.edges)
        if (a >= nb || b >= nb || a == b) throw InvalidDecomposition("bad bag tree edge");
    auto r = root_td(td, n);
    if (r.order.size() != nb) throw InvalidDecomposition("bag tree is disconnected");
    // Node coverage.
    for (Node u = 0; u < n; ++u)
        if (r.root_bag[u] == SIZE_MAX) throw InvalidDecomposition("node " + node_name(u) + " is in no bag");
    // Edge coverage: some bag holds both ends.
    std::vector<std::vector<std::size_t>> bags_of(n);
    for (std::size_t b = 0; b < nb; ++b)
        for (Node u : td.bags[b]) bags_of[u].push_back(b);
    for (const auto& e : g.edges()) {
        const auto& a = bags_of[e.u];
        bool found = false;
        for (auto b : a)
            if (std::binary_search(td.bags[b].begin(), td.bags[b].end(), e.v)) {
                found = true;
                break;
            }
        if (!found)
            throw InvalidDecomposition("edge (" + node_name(e.u) + "," + node_name(e.v) + ") is not inside any bag");
    }
    // Connectivity: in a rooted tree, the bags of u form a subtree iff exactly
    // one of them has a parent that does not contain u.
    for (Node u = 0; u < n; ++u) {
        std::size_t tops = 0;
        for (auto b : bags_of[u]) {
            int p = r.parent[b];
            if (p < 0 || !std::binary_search(td.bags[p].begin(), td.bags[p].end(), u)) ++tops;
        }
        if (tops != 1) throw InvalidDecomposition("bags containing node " + node_name(u) + " are not connected");
    }
}

bool is_normalized(const TreeDecomposition& td) {
    const auto t1 = td.width() + 1;
    for (const auto& b : td.bags)
        if (b.size() != t1) return false;
    for (auto [a, b] : td.edges) {
        std::vector<Node> common;
        std::set_intersection(td.bags[a].begin(), td.bags[a].end(), td.bags[b].begin(), td.bags[b].end(),
                              std::back_inserter(common));
        if (common.size() + 1 != t1) return false;
    }
    return true;
}

TreeDecomposition normalize_td(const WeightedGraph& g, const TreeDecomposition& in) {
    validate_td(g, in);
    const auto t1 = in.width() + 1;
    std::size_t root = 0;
    for (std::size_t b = 0; b < in.bags.size(); ++b)
        if (in.bags[b].size() > in.bags[root].size()) root = b;
    TreeDecomposition td = in;
    td.root = root;
    auto r = root_td(td, g.num_nodes());

    // Pad each bag with vertices of its (already padded) parent.
    for (auto b : r.order) {
        int p = r.parent[b];
        if (p < 0) continue;
        auto& bag = td.bags[b];
        for (Node x : td.bags[p]) {
            if (bag.size() >= t1) break;
            if (!std::binary_search(bag.begin(), bag.end(), x)) bag.insert(std::lower_bound(bag.begin(), bag.end(), x), x);
        }
    }

    // Rebuild top-down: merge bags equal to their parent, insert chains where
    // neighbours share fewer than t nodes.
    TreeDecomposition out;
    std::vector<std::size_t> image(td.bags.size());
    out.bags.push_back(td.bags[root]);
    out.root = 0;
    image[root] = 0;
    for (auto b : r.order) {
        int p = r.parent[b];
        if (p < 0) continue;
        auto above = image[p];
        const auto& cur = td.bags[b];
        if (out.bags[above] == cur) {
            image[b] = above;
            continue;
        }
        std::vector<Node> leaving, entering;
        std::set_difference(out.bags[above].begin(), out.bags[above].end(), cur.begin(), cur.end(),
                            std::back_inserter(leaving));
        std::set_difference(cur.begin(), cur.end(), out.bags[above].begin(), out.bags[above].end(),
                            std::back_inserter(entering));
        // Swap one vertex per step; the last step lands on cur itself.
        auto bag = out.bags[above];
        for (std::size_t k = 0; k < leaving.size(); ++k) {
            bag.erase(std::lower_bound(bag.begin(), bag.end(), leaving[k]));
            bag.insert(std::lower_bound(bag.begin(), bag.end(), entering[k]), entering[k]);
            out.bags.push_back(bag);
            out.edges.emplace_back(above, out.bags.size() - 1);
            above = out.bags.size() - 1;
        }
        image[b] = above;
    }
    if (!is_normalized(out)) throw std::logic_error("normalization failed");
    validate_td(g, out);
    return out;
}

TreeDecomposition heuristic_td(const WeightedGraph& g) {
    const auto n = g.num_nodes();
    std::vector<std::set<Node>> adj(n);
    for (const auto& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    auto fill_of = [&](Node v) {
        std::size_t missing = 0;
        for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
            for (auto b = std::next(a); b != adj[v].end(); ++b)
                if (!adj[*a].count(*b)) ++missing;
        return missing;
    };
    using Key = std::tuple<std::size_t, std::size_t, Node>;  // fill, degree, id
    std::set<Key> queue;
    std::vector<Key> key(n);
    for (Node v = 0; v < n; ++v) {
        key[v] = {fill_of(v), adj[v].size(), v};
        queue.insert(key[v]);
    }
    std::vector<char> gone(n, 0);
    std::vector<Node> order;
    std::vector<std::vector<Node>> bag_of(n);
    while (!queue.empty()) {
        Node v = std::get<2>(*queue.begin());
        queue.erase(queue.begin());
        gone[v] = 1;
        order.push_back(v);
        std::vector<Node> nb(adj[v].begin(), adj[v].end());
        bag_of[v] = nb;
        bag_of[v].push_back(v);
        std::sort(bag_of[v].begin(), bag_of[v].end());
        for (std::size_t i = 0; i < nb.size(); ++i) {
            adj[nb[i]].erase(v);
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                adj[nb[i]].insert(nb[j]);
                adj[nb[j]].insert(nb[i]);
            }
        }
        std::set<Node> touched(nb.begin(), nb.end());
        for (Node x : nb)
            for (Node y : adj[x]) touched.insert(y);
        for (Node x : touched) {
            if (gone[x]) continue;
            queue.erase(key[x]);
            key[x] = {fill_of(x), adj[x].size(), x};
            queue.insert(key[x]);
        }
    }
    // Bag of v hangs below the bag of its earliest-eliminated later neighbour.
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    TreeDecomposition td;
    td.bags.resize(n);
    for (std::size_t i = 0; i < n; ++i) td.bags[i] = bag_of[order[i]];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::size_t up = n - 1;
        for (Node x : bag_of[order[i]])
            if (x != order[i]) up = std::min(up, pos[x]);
        // Separate components of the elimination forest are chained to the last bag.
        td.edges.emplace_back(i, up);
    }
    td.root = n - 1;
    validate_td(g, td);
    return td;
}

TreeDecomposition read_td(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    long long nbags = -1, maxsize = 0, n = 0;
    TreeDecomposition td;
    std::vector<char> defined;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag == "c") continue;
        if (tag == "s") {
            std::string kind;
            if (nbags >= 0) throw ParseError("duplicate header", lineno);
            if (!(ss >> kind >> nbags >> maxsize >> n) || kind != "td" || nbags < 1 || maxsize < 0 || n < 1)
                throw ParseError("expected 's td <bags> <max bag size> <n>'", lineno);
            td.bags.resize(static_cast<std::size_t>(nbags));
            defined.assign(static_cast<std::size_t>(nbags), 0);
        } else if (tag == "b") {
            if (nbags < 0) throw ParseError("bag before header", lineno);
            long long id = 0, v = 0;
            if (!(ss >> id) || id < 1 || id > nbags) throw ParseError("bad bag id", lineno);
            if (defined[id - 1]) throw ParseError("bag defined twice", lineno);
            defined[id - 1] = 1;
            auto& bag = td.bags[id - 1];
            while (ss >> v) {
                if (v < 1 || v > n) throw ParseError("node id out of range", lineno);
                bag.push_back(static_cast<Node>(v - 1));
            }
            if (!ss.eof()) throw ParseError("bad node id", lineno);
            std::sort(bag.begin(), bag.end());
            if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) throw ParseError("repeated node in bag", lineno);
            if (static_cast<long long>(bag.size()) > maxsize) throw ParseError("bag exceeds declared size", lineno);
        } else {
            if (nbags < 0) throw ParseError("edge before header", lineno);
            std::istringstream es(line);
            long long a = 0, b = 0;
            std::string extra;
            if (!(es >> a >> b) || (es >> extra) || a < 1 || b < 1 || a > nbags || b > nbags)
                throw ParseError("expected a bag tree edge '<id1> <id2>'", lineno);
            td.edges.emplace_back(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
        }
    }
    if (nbags < 0) throw ParseError("missing header", lineno);
    for (std::size_t b = 0; b < defined.size(); ++b)
        if (!defined[b]) throw ParseError("bag " + std::to_string(b + 1) + " never defined", lineno);
    return td;
}

TreeDecomposition read_td(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    return read_td(in);
}

void write_td(std::ostream& out, const TreeDecomposition& td, std::size_t num_nodes) {
    out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << num_nodes << '\n';
    for (std::size_t b = 0; b < td.bags.size(); ++b) {
        out << "b " << b + 1;
        for (Node u : td.bags[b]) out << ' ' << u + 1;
        out << '\n';
    }
    for (auto [a, b] : td.edges) out << a + 1 << ' ' << b + 1 << '\n';
}

}  // namespace hopset
