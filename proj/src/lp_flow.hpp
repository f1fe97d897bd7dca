#ifndef HOPSET_SRC_LP_FLOW_HPP
#define HOPSET_SRC_LP_FLOW_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <span>
#include <vector>

#include "hopset/lp_model.hpp"

namespace hopset {

// Layered graph of one commodity with real capacities; Dinic max-flow.
class LayeredNetwork {
public:
    struct Arc {
        int to;
        int rev;
        double cap;
        double flow = 0;
        ArcCapacity kind;
        bool forward;
    };

    struct CutTerm {
        bool x1;
        int var;
        double coef;
    };

    LayeredNetwork(const LpModel& m, const Commodity& c, std::span<const double> x, std::span<const double> x1)
        : len_(static_cast<int>(c.path.size())), h_(m.h), adj_(static_cast<std::size_t>(len_ * (h_ + 1))) {
        for (int i = 0; i < h_; ++i)
            for (int a = 0; a < len_; ++a)
                for (int b = a; b < len_; ++b) {
                    auto kind = m.capacity(c.path[a], c.path[b], i);
                    double cap = 1;
                    if (kind.kind == ArcCapacity::X) cap = std::clamp(x[kind.var], 0.0, 1.0);
                    if (kind.kind == ArcCapacity::X1) cap = std::clamp(x1[kind.var], 0.0, 1.0);
                    add(id(a, i), id(b, i + 1), cap, kind);
                }
    }

    double max_flow() {
        const int s = id(0, 0), t = id(len_ - 1, h_);
        double total = 0;
        while (bfs(s, t)) {
            it_.assign(adj_.size(), 0);
            while (double f = dfs(s, t, std::numeric_limits<double>::infinity())) total += f;
        }
        value_ = total;
        return total;
    }

    // Arcs leaving the source side of a minimum cut (after max_flow()).
    std::vector<CutTerm> min_cut() const {
        std::vector<char> seen(adj_.size(), 0);
        std::vector<int> stack{id(0, 0)};
        seen[id(0, 0)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const auto& a : adj_[u])
                if (residual(a) > kEps && !seen[a.to]) {
                    seen[a.to] = 1;
                    stack.push_back(a.to);
                }
        }
        std::vector<CutTerm> cut;
        for (std::size_t u = 0; u < adj_.size(); ++u) {
            if (!seen[u]) continue;
            for (const auto& a : adj_[u]) {
                if (!a.forward || seen[a.to] || a.kind.kind == ArcCapacity::One) continue;
                cut.push_back({a.kind.kind == ArcCapacity::X1, a.kind.var, 1.0});
            }
        }
        std::sort(cut.begin(), cut.end(), [](const CutTerm& p, const CutTerm& q) {
            return std::pair(p.x1, p.var) < std::pair(q.x1, q.var);
        });
        std::vector<CutTerm> merged;
        for (const auto& t : cut) {
            if (!merged.empty() && merged.back().x1 == t.x1 && merged.back().var == t.var)
                merged.back().coef += 1;
            else
                merged.push_back(t);
        }
        return merged;
    }

    // Scales the max flow to value 1 and returns the largest row violation of
    // the resulting unit flow (conservation and capacity).
    double unit_flow_violation() const {
        if (value_ <= 0) return 1;
        const double scale = 1 / value_;
        double worst = 0;
        const int s = id(0, 0), t = id(len_ - 1, h_);
        for (std::size_t u = 0; u < adj_.size(); ++u) {
            double balance = 0;
            for (const auto& a : adj_[u]) {
                if (a.forward) {
                    balance += a.flow * scale;
                    worst = std::max(worst, a.flow * scale - a.cap);
                    worst = std::max(worst, -a.flow * scale);
                } else {
                    balance -= adj_[a.to][a.rev].flow * scale;
                }
            }
            double want = static_cast<int>(u) == s ? 1 : static_cast<int>(u) == t ? -1 : 0;
            worst = std::max(worst, std::abs(balance - want));
        }
        return worst;
    }

private:
    static constexpr double kEps = 1e-13;

    int id(int a, int i) const { return a * (h_ + 1) + i; }

    void add(int u, int v, double cap, ArcCapacity kind) {
        adj_[u].push_back({v, static_cast<int>(adj_[v].size()), cap, 0, kind, true});
        adj_[v].push_back({u, static_cast<int>(adj_[u].size()) - 1, 0, 0, kind, false});
    }

    double residual(const Arc& a) const { return a.forward ? a.cap - a.flow : adj_[a.to][a.rev].flow; }

    void push(Arc& a, double f) {
        if (a.forward)
            a.flow += f;
        else
            adj_[a.to][a.rev].flow -= f;
    }

    bool bfs(int s, int t) {
        level_.assign(adj_.size(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const auto& a : adj_[u])
                if (level_[a.to] < 0 && residual(a) > kEps) {
                    level_[a.to] = level_[u] + 1;
                    q.push(a.to);
                }
        }
        return level_[t] >= 0;
    }

    double dfs(int u, int t, double limit) {
        if (u == t) return limit;
        for (auto& i = it_[u]; i < adj_[u].size(); ++i) {
            Arc& a = adj_[u][i];
            double r = residual(a);
            if (r <= kEps || level_[a.to] != level_[u] + 1) continue;
            if (double f = dfs(a.to, t, std::min(limit, r)); f > 0) {
                push(a, f);
                return f;
            }
        }
        return 0;
    }

    int len_;
    int h_;
    std::vector<std::vector<Arc>> adj_;
    std::vector<int> level_;
    std::vector<std::size_t> it_;
    double value_ = 0;
};

}  // namespace hopset

#endif  // HOPSET_SRC_LP_FLOW_HPP
