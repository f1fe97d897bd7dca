#include "hopset/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace hopset {

WeightedGraph read_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    long long n = -1, m = 0;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (n >= 0) throw ParseError("duplicate header", lineno);
            if (!(ss >> kind >> n >> m) || kind != "hop") throw ParseError("expected 'p hop <n> <m>'", lineno);
            if (n < 1 || m < 0) throw ParseError("bad node or edge count", lineno);
            if (n > static_cast<long long>(kNoNode)) throw ParseError("too many nodes", lineno);
        } else if (tag == "e") {
            if (n < 0) throw ParseError("edge before header", lineno);
            long long u = 0, v = 0, w = 0;
            if (!(ss >> u >> v >> w)) throw ParseError("expected 'e <u> <v> <w>'", lineno);
            if (u < 1 || v < 1 || u > n || v > n) throw ParseError("node id out of range", lineno);
            if (u == v) throw ParseError("self-loop on node " + std::to_string(u), lineno);
            if (w < 1) throw ParseError("weight must be >= 1", lineno);
            if (w > (1LL << 62)) throw ParseError("weight too large", lineno);
            if (!seen.insert(pair_key(static_cast<Node>(u - 1), static_cast<Node>(v - 1))).second)
                throw ParseError("parallel edge " + std::to_string(u) + " " + std::to_string(v), lineno);
            edges.push_back({static_cast<Node>(u - 1), static_cast<Node>(v - 1), w});
        } else {
            throw ParseError("unknown line type '" + tag + "'", lineno);
        }
        std::string extra;
        if (ss >> extra) throw ParseError("trailing tokens", lineno);
    }
    if (n < 0) throw ParseError("missing header", lineno);
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()),
                         lineno);
    return WeightedGraph(static_cast<std::size_t>(n), std::move(edges));
}

WeightedGraph read_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    return read_graph(in);
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
    out << "p hop " << g.num_nodes() << ' ' << g.num_edges() << '\n';
    for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
}

void write_graph(const std::string& path, const WeightedGraph& g) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path, 0);
    write_graph(out, g);
}

}  // namespace hopset
