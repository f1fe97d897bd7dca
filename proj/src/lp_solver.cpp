#include "hopset/lp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "hopset/parallel.hpp"
#include "lp_flow.hpp"

namespace hopset {

namespace {
constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-11;
constexpr double kFlowTol = 1e-9;
}  // namespace

PackingSimplex::PackingSimplex(std::vector<double> c) : m_(c.size()), c_(std::move(c)) {
    for (double v : c_)
        if (v < 0) throw SolverFailure("packing simplex needs a non-negative right-hand side");
    basis_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) basis_[r] = r;
    binv_.assign(m_ * m_, 0.0);
    for (std::size_t r = 0; r < m_; ++r) binv_[r * m_ + r] = 1;
    xb_ = c_;
    price_.assign(m_, 0.0);
}

std::size_t PackingSimplex::add_column(Column col, double b) {
    cols_.push_back(std::move(col));
    b_.push_back(b);
    in_basis_.push_back(0);
    return cols_.size() - 1;
}

double PackingSimplex::objective() const {
    double z = 0;
    for (std::size_t r = 0; r < m_; ++r) z += price_[r] * c_[r];
    return z;
}

std::vector<double> PackingSimplex::ftran(std::size_t id) const {
    std::vector<double> d(m_, 0.0);
    if (id < m_) {
        for (std::size_t r = 0; r < m_; ++r) d[r] = binv_[r * m_ + id];
        return d;
    }
    for (const auto& [k, a] : cols_[id - m_])
        for (std::size_t r = 0; r < m_; ++r) d[r] += binv_[r * m_ + k] * a;
    return d;
}

double PackingSimplex::reduced_cost(std::size_t j) const {
    double d = -b_[j];
    for (const auto& [k, a] : cols_[j]) d += price_[k] * a;
    return d;
}

void PackingSimplex::recompute_prices() {
    std::fill(price_.begin(), price_.end(), 0.0);
    for (std::size_t r = 0; r < m_; ++r) {
        if (basis_[r] < m_) continue;
        const double cb = b_[basis_[r] - m_];
        if (cb == 0) continue;
        const double* row = &binv_[r * m_];
        for (std::size_t k = 0; k < m_; ++k) price_[k] += cb * row[k];
    }
}

void PackingSimplex::pivot(std::size_t r, std::size_t id, const std::vector<double>& d) {
    const double p = d[r];
    double* prow = &binv_[r * m_];
    for (std::size_t k = 0; k < m_; ++k) prow[k] /= p;
    xb_[r] /= p;
    for (std::size_t i = 0; i < m_; ++i) {
        if (i == r || d[i] == 0) continue;
        const double f = d[i];
        double* row = &binv_[i * m_];
        for (std::size_t k = 0; k < m_; ++k) row[k] -= f * prow[k];
        xb_[i] -= f * xb_[r];
        if (xb_[i] < 0 && xb_[i] > -1e-12) xb_[i] = 0;
    }
    if (basis_[r] >= m_) in_basis_[basis_[r] - m_] = 0;
    basis_[r] = id;
    if (id >= m_) in_basis_[id - m_] = 1;
    ++pivots_;
    if (++since_reinvert_ >= 100)
        reinvert();
    else
        recompute_prices();
}

// Gauss-Jordan inversion of the basis; also refreshes basic values and prices.
void PackingSimplex::reinvert() {
    std::vector<double> B(m_ * m_, 0.0);
    for (std::size_t r = 0; r < m_; ++r) {
        if (basis_[r] < m_)
            B[basis_[r] * m_ + r] = 1;
        else
            for (const auto& [k, a] : cols_[basis_[r] - m_]) B[k * m_ + r] = a;
    }
    std::vector<double> inv(m_ * m_, 0.0);
    for (std::size_t r = 0; r < m_; ++r) inv[r * m_ + r] = 1;
    for (std::size_t col = 0; col < m_; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < m_; ++r)
            if (std::abs(B[r * m_ + col]) > std::abs(B[piv * m_ + col])) piv = r;
        if (std::abs(B[piv * m_ + col]) < 1e-12) throw SolverFailure("singular simplex basis");
        if (piv != col)
            for (std::size_t k = 0; k < m_; ++k) {
                std::swap(B[piv * m_ + k], B[col * m_ + k]);
                std::swap(inv[piv * m_ + k], inv[col * m_ + k]);
            }
        const double p = B[col * m_ + col];
        for (std::size_t k = 0; k < m_; ++k) {
            B[col * m_ + k] /= p;
            inv[col * m_ + k] /= p;
        }
        for (std::size_t r = 0; r < m_; ++r) {
            if (r == col) continue;
            const double f = B[r * m_ + col];
            if (f == 0) continue;
            for (std::size_t k = 0; k < m_; ++k) {
                B[r * m_ + k] -= f * B[col * m_ + k];
                inv[r * m_ + k] -= f * inv[col * m_ + k];
            }
        }
    }
    // Row i of inv now belongs to the basic variable of basis row i.
    binv_ = std::move(inv);
    for (std::size_t r = 0; r < m_; ++r) {
        double v = 0;
        for (std::size_t k = 0; k < m_; ++k) v += binv_[r * m_ + k] * c_[k];
        xb_[r] = std::max(v, 0.0);
    }
    recompute_prices();
    since_reinvert_ = 0;
}

PackingSimplex::Result PackingSimplex::solve(std::size_t max_pivots) {
    std::size_t degenerate = 0;
    for (std::size_t it = 0; it < max_pivots; ++it) {
        // Dantzig pricing over structurals and slacks; Bland's rule after a
        // long run of degenerate pivots.
        const bool bland = degenerate > 50;
        std::size_t enter = SIZE_MAX;
        double best = -kCostTol;
        for (std::size_t k = 0; k < m_ && !(bland && enter != SIZE_MAX); ++k) {
            if (price_[k] < best) {
                enter = k;
                best = bland ? best : price_[k];
            }
        }
        for (std::size_t j = 0; j < cols_.size() && !(bland && enter != SIZE_MAX); ++j) {
            if (in_basis_[j]) continue;
            double d = reduced_cost(j);
            if (d < best) {
                enter = m_ + j;
                best = bland ? best : d;
            }
        }
        if (enter == SIZE_MAX) {
            if (since_reinvert_ > 0) {
                reinvert();
                continue;  // confirm optimality on fresh prices
            }
            return Result::Optimal;
        }
        auto d = ftran(enter);
        // Two-pass ratio test: among rows within tolerance of the minimum
        // ratio take the largest pivot element (smallest basis id under Bland).
        double ratio = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < m_; ++r)
            if (d[r] > kPivotTol) ratio = std::min(ratio, (xb_[r] + 1e-12) / d[r]);
        std::size_t leave = m_;
        for (std::size_t r = 0; r < m_; ++r) {
            if (d[r] <= kPivotTol || xb_[r] / d[r] > ratio) continue;
            if (leave == m_ || (bland ? basis_[r] < basis_[leave] : d[r] > d[leave])) leave = r;
        }
        if (leave != m_) ratio = xb_[leave] / d[leave];
        if (leave == m_) return Result::Unbounded;
        degenerate = ratio <= 1e-15 ? degenerate + 1 : 0;
        pivot(leave, enter, d);
    }
    return Result::IterationLimit;
}

LpSolution solve_lp(const LpModel& m) {
    const bool trade = m.mode == LpMode::Tradeoff;
    const std::size_t np = m.pairs.size();
    // Primal variables: x (base) or x1 then x (tradeoff). Their objective
    // coefficients are the simplex right-hand side.
    std::vector<double> c(trade ? 2 * np : np, 0.0);
    std::fill(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(np), 1.0);
    PackingSimplex lp(c);
    auto x1_row = [&](int var) { return static_cast<std::size_t>(var); };
    auto x_row = [&](int var) { return static_cast<std::size_t>(var) + (trade ? np : 0); };
    if (trade) {
        for (std::size_t e = 0; e < np; ++e) lp.add_column({{e, -1.0}, {np + e, 1.0}}, 0.0);  // x - x1 >= 0
        std::vector<std::pair<std::size_t, double>> budget;
        for (std::size_t e = 0; e < np; ++e) budget.emplace_back(np + e, -1.0);  // -Σx >= -S
        lp.add_column(budget, -m.size_bound);
    }

    LpSolution sol;
    sol.x.assign(np, 0.0);
    if (trade) sol.x1.assign(np, 0.0);
    auto read_prices = [&] {
        auto p = lp.row_prices();
        for (std::size_t e = 0; e < np; ++e) {
            if (trade) {
                sol.x1[e] = std::max(0.0, p[x1_row(static_cast<int>(e))]);
                sol.x[e] = std::max(0.0, p[x_row(static_cast<int>(e))]);
            } else {
                sol.x[e] = std::max(0.0, p[e]);
            }
        }
    };

    std::set<std::vector<std::pair<std::size_t, double>>> known;
    std::vector<double> flow(m.commodities.size());
    std::vector<std::vector<LayeredNetwork::CutTerm>> cuts(m.commodities.size());
    constexpr std::size_t kMaxRounds = 2000;
    for (std::size_t round = 0;; ++round) {
        if (round == kMaxRounds) throw SolverFailure("cutting-plane loop did not converge");
        parallel_for(m.commodities.size(), [&](std::size_t k) {
            LayeredNetwork net(m, m.commodities[k], sol.x, sol.x1);
            flow[k] = net.max_flow();
            cuts[k].clear();
            if (flow[k] < 1 - kFlowTol) cuts[k] = net.min_cut();
        });
        std::size_t added = 0;
        bool violated = false;
        for (std::size_t k = 0; k < m.commodities.size(); ++k) {
            if (flow[k] >= 1 - kFlowTol) continue;
            violated = true;
            std::vector<std::pair<std::size_t, double>> col;
            for (const auto& t : cuts[k]) col.emplace_back(t.x1 ? x1_row(t.var) : x_row(t.var), t.coef);
            if (col.empty()) throw Infeasible("a commodity cannot be routed even with every shortcut");
            if (!known.insert(col).second) continue;
            lp.add_column(col, 1.0);
            ++added;
        }
        sol.rounds = round;
        if (!violated) break;
        if (added == 0) throw SolverFailure("separation repeated a known cut; numerical trouble");
        auto res = lp.solve();
        if (res == PackingSimplex::Result::Unbounded)
            throw Infeasible("size bound " + std::to_string(m.size_bound) + " is below what 3-hop coverage needs");
        if (res != PackingSimplex::Result::Optimal) throw SolverFailure("simplex hit its pivot limit");
        read_prices();
    }

    // Lift the solution so every commodity carries at least unit flow, then cap at 1.
    double min_flow = 1;
    for (double f : flow) min_flow = std::min(min_flow, f);
    if (min_flow < 1 && min_flow > 0) {
        for (auto& v : sol.x) v /= min_flow;
        for (auto& v : sol.x1) v /= min_flow;
    }
    for (auto& v : sol.x) v = std::min(v, 1.0);
    for (std::size_t e = 0; e < sol.x1.size(); ++e) sol.x1[e] = std::min(sol.x1[e], sol.x[e]);
    sol.objective = 0;
    for (double v : trade ? sol.x1 : sol.x) sol.objective += v;
    sol.cuts = known.size();
    sol.pivots = lp.pivots();
    sol.status = LpStatus::Optimal;
    return sol;
}

}  // namespace hopset
