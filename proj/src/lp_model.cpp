#include "hopset/lp_model.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "lp_flow.hpp"
#include "hopset/parallel.hpp"
#include "hopset/shortest_paths.hpp"

namespace hopset {

namespace {

std::uint64_t key(Node u, Node v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

LpModel build_model(const WeightedGraph& g, int h, LpMode mode, double size_bound) {
    if (!g.has_usp()) throw MissingUspCertificate("the LP formulation needs a graph with unique shortest paths");
    if (h < 2) throw InfeasibleParams("LP hopbound must be >= 2");
    const auto n = g.num_nodes();
    LpModel m;
    m.mode = mode;
    m.h = h;
    m.n = n;
    m.size_bound = size_bound;

    std::vector<std::vector<Commodity>> per_source(n);
    parallel_for(n, [&](std::size_t si) {
        auto t = dijkstra(g, static_cast<Node>(si));
        for (Node v = static_cast<Node>(si) + 1; v < n; ++v) {
            if (t.dist[v] == kInfinity) throw ConnectivityError("graph is not connected");
            auto path = t.path_to(v);
            if (static_cast<int>(path.size()) - 1 > h) per_source[si].push_back({static_cast<Node>(si), v, std::move(path)});
        }
    });
    for (auto& cs : per_source)
        for (auto& c : cs) m.commodities.push_back(std::move(c));

    for (const auto& c : m.commodities)
        for (std::size_t a = 0; a < c.path.size(); ++a)
            for (std::size_t b = a + 2; b < c.path.size(); ++b) m.pairs.emplace_back(std::min(c.path[a], c.path[b]), std::max(c.path[a], c.path[b]));
    std::sort(m.pairs.begin(), m.pairs.end());
    m.pairs.erase(std::unique(m.pairs.begin(), m.pairs.end()), m.pairs.end());
    for (std::size_t i = 0; i < m.pairs.size(); ++i) m.index.emplace(key(m.pairs[i].first, m.pairs[i].second), static_cast<int>(i));

    // Sizes of the explicit formulation.
    for (const auto& c : m.commodities) {
        const std::size_t len = c.path.size();
        const std::size_t forward = len * (len - 1) / 2 - (len - 1);  // variable-capacity arcs per layer
        const std::size_t arcs = static_cast<std::size_t>(h) * (len * (len + 1) / 2);
        m.num_flow_vars += arcs;
        m.num_rows += len * static_cast<std::size_t>(h + 1) + forward * static_cast<std::size_t>(h);
        m.num_nonzeros += 2 * arcs + 2 * forward * static_cast<std::size_t>(h);
    }
    if (mode == LpMode::Tradeoff) {
        m.num_rows += m.pairs.size() + 1;
        m.num_nonzeros += 3 * m.pairs.size();
    }
    return m;
}

}  // namespace

int LpModel::var_of(Node u, Node v) const {
    auto it = index.find(key(u, v));
    return it == index.end() ? -1 : it->second;
}

ArcCapacity LpModel::capacity(Node u, Node v, int layer) const {
    if (u == v) return {};
    int var = var_of(u, v);
    if (var < 0) return {};
    if (mode == LpMode::Tradeoff && layer != 1) return {ArcCapacity::X1, var};
    return {ArcCapacity::X, var};
}

LpModel build_lp(const WeightedGraph& g, int h) { return build_model(g, h, LpMode::Base, 0); }

LpModel build_lp_tradeoff(const WeightedGraph& g, double size_bound) {
    if (size_bound < 0) throw InfeasibleParams("size bound must be >= 0");
    return build_model(g, 3, LpMode::Tradeoff, size_bound);
}

double commodity_max_flow(const LpModel& m, const Commodity& c, std::span<const double> x, std::span<const double> x1) {
    LayeredNetwork net(m, c, x, x1);
    return net.max_flow();
}

LpCheck verify_solution(const LpModel& m, const LpSolution& sol, double tol) {
    LpCheck chk;
    auto note = [&](double v, const std::string& what) {
        if (v > chk.max_violation) {
            chk.max_violation = v;
            chk.worst = what;
        }
    };
    auto name = [&](const char* p, std::size_t i) {
        return std::string(p) + "_" + std::to_string(m.pairs[i].first + 1) + "_" + std::to_string(m.pairs[i].second + 1);
    };
    if (sol.x.size() != m.pairs.size() || (m.mode == LpMode::Tradeoff && sol.x1.size() != m.pairs.size()))
        throw SolverFailure("solution does not match the model's variable count");
    double sum = 0;
    for (std::size_t i = 0; i < m.pairs.size(); ++i) {
        note(-sol.x[i], name("x", i) + " below 0");
        note(sol.x[i] - 1, name("x", i) + " above 1");
        sum += sol.x[i];
        if (m.mode == LpMode::Tradeoff) {
            note(-sol.x1[i], name("x1", i) + " below 0");
            note(sol.x1[i] - sol.x[i], name("x1", i) + " above " + name("x", i));
        }
    }
    if (m.mode == LpMode::Tradeoff) note((sum - m.size_bound) / std::max(1.0, m.size_bound), "size bound exceeded");

    std::vector<double> flow(m.commodities.size(), 0);
    std::vector<double> worst_flow_err(m.commodities.size(), 0);
    parallel_for(m.commodities.size(), [&](std::size_t k) {
        LayeredNetwork net(m, m.commodities[k], sol.x, sol.x1);
        flow[k] = net.max_flow();
        if (flow[k] > 0) worst_flow_err[k] = net.unit_flow_violation();
    });
    for (std::size_t k = 0; k < m.commodities.size(); ++k) {
        const auto& c = m.commodities[k];
        chk.min_flow = std::min(chk.min_flow, flow[k]);
        std::string pair = std::to_string(c.s + 1) + "," + std::to_string(c.t + 1);
        note(1 - flow[k], "commodity (" + pair + ") carries flow " + std::to_string(flow[k]));
        note(worst_flow_err[k], "commodity (" + pair + ") unit flow breaks a row");
    }
    chk.ok = chk.max_violation <= tol;
    return chk;
}

namespace {

class TermWriter {
public:
    explicit TermWriter(std::ostream& out) : out_(out) {}
    void term(double coef, const std::string& var) {
        if (count_ > 0 && count_ % 6 == 0) out_ << "\n   ";
        if (coef == 1)
            out_ << (count_ ? " + " : " ") << var;
        else if (coef == -1)
            out_ << " - " << var;
        else
            out_ << (coef < 0 ? " - " : (count_ ? " + " : " ")) << std::abs(coef) << " " << var;
        ++count_;
    }
    bool empty() const { return count_ == 0; }

private:
    std::ostream& out_;
    std::size_t count_ = 0;
};

std::string xname(const char* p, Node u, Node v) {
    return std::string(p) + "_" + std::to_string(u + 1) + "_" + std::to_string(v + 1);
}

std::string fname(const Commodity& c, Node u, int i, Node v, int j) {
    std::ostringstream s;
    s << "f_" << c.s + 1 << "_" << c.t + 1 << "_" << u + 1 << "_" << i << "_" << v + 1 << "_" << j;
    return s.str();
}

}  // namespace

void write_lp(std::ostream& out, const LpModel& m) {
    out.precision(17);
    const bool trade = m.mode == LpMode::Tradeoff;
    out << "\\ hopset LP: n=" << m.n << " h=" << m.h << (trade ? " tradeoff" : "") << " commodities=" << m.commodities.size()
        << "\n";
    out << "Minimize\n obj:";
    {
        TermWriter w(out);
        for (const auto& [u, v] : m.pairs) w.term(1, xname(trade ? "x1" : "x", u, v));
        if (w.empty()) out << " 0 " << (trade ? "x1_dummy" : "x_dummy");
    }
    out << "\nSubject To\n";
    std::vector<std::string> unit_bounded;
    for (const auto& c : m.commodities) {
        const auto len = c.path.size();
        // Conservation: out - in = +1 at s_0, -1 at t_h, 0 elsewhere.
        for (std::size_t a = 0; a < len; ++a) {
            for (int j = 0; j <= m.h; ++j) {
                out << " flow_" << c.s + 1 << "_" << c.t + 1 << "_" << c.path[a] + 1 << "_" << j << ":";
                TermWriter w(out);
                if (j < m.h)
                    for (std::size_t b = a; b < len; ++b) w.term(1, fname(c, c.path[a], j, c.path[b], j + 1));
                if (j > 0)
                    for (std::size_t b = 0; b <= a; ++b) w.term(-1, fname(c, c.path[b], j - 1, c.path[a], j));
                if (w.empty()) out << " 0 " << fname(c, c.path[a], j, c.path[a], j);
                int rhs = (a == 0 && j == 0) ? 1 : (a + 1 == len && j == m.h) ? -1 : 0;
                out << " = " << rhs << "\n";
            }
        }
        for (int i = 0; i < m.h; ++i) {
            for (std::size_t a = 0; a < len; ++a) {
                for (std::size_t b = a; b < len; ++b) {
                    Node u = c.path[a], v = c.path[b];
                    auto cap = m.capacity(u, v, i);
                    auto f = fname(c, u, i, v, i + 1);
                    if (cap.kind == ArcCapacity::One) {
                        unit_bounded.push_back(f);
                        continue;
                    }
                    out << " cap_" << f.substr(2) << ": " << f << " - "
                        << xname(cap.kind == ArcCapacity::X1 ? "x1" : "x", std::min(u, v), std::max(u, v)) << " <= 0\n";
                }
            }
        }
    }
    if (trade) {
        for (const auto& [u, v] : m.pairs) out << " link_" << u + 1 << "_" << v + 1 << ": " << xname("x1", u, v) << " - " << xname("x", u, v) << " <= 0\n";
        out << " budget:";
        TermWriter w(out);
        for (const auto& [u, v] : m.pairs) w.term(1, xname("x", u, v));
        if (w.empty()) out << " 0 x_dummy";
        out << " <= " << m.size_bound << "\n";
    }
    out << "Bounds\n";
    for (const auto& [u, v] : m.pairs) {
        out << " 0 <= " << xname("x", u, v) << " <= 1\n";
        if (trade) out << " 0 <= " << xname("x1", u, v) << " <= 1\n";
    }
    for (const auto& f : unit_bounded) out << " 0 <= " << f << " <= 1\n";
    out << "End\n";
}

LpSolution read_lp_solution(std::istream& in, const LpModel& m) {
    LpSolution sol;
    sol.status = LpStatus::Imported;
    sol.x.assign(m.pairs.size(), 0);
    if (m.mode == LpMode::Tradeoff) sol.x1.assign(m.pairs.size(), 0);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string name;
        double value;
        if (!(ls >> name) || name[0] == '#') continue;
        if (!(ls >> value)) throw ParseError("missing value for " + name, lineno);
        if (name.rfind("f_", 0) == 0) continue;
        bool is_x1 = name.rfind("x1_", 0) == 0;
        if (!is_x1 && name.rfind("x_", 0) != 0) {
            if (name == "obj" || name == "objective") continue;
            throw ParseError("unknown variable " + name, lineno);
        }
        unsigned long u = 0, v = 0;
        char sep = 0;
        std::istringstream ns(name.substr(is_x1 ? 3 : 2));
        if (!(ns >> u >> sep >> v) || sep != '_' || u < 1 || v < 1 || u > m.n || v > m.n)
            throw ParseError("malformed variable name " + name, lineno);
        int var = m.var_of(static_cast<Node>(u - 1), static_cast<Node>(v - 1));
        if (var < 0) {
            if (value != 0) throw ParseError("variable " + name + " is not in the model", lineno);
            continue;
        }
        if (is_x1) {
            if (m.mode != LpMode::Tradeoff) throw ParseError("x1 variables belong to the tradeoff model", lineno);
            sol.x1[var] = value;
        } else {
            sol.x[var] = value;
        }
    }
    for (double v : (m.mode == LpMode::Tradeoff ? sol.x1 : sol.x)) sol.objective += v;
    return sol;
}

}  // namespace hopset
