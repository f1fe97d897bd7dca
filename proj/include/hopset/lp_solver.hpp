#ifndef HOPSET_LP_SOLVER_HPP
#define HOPSET_LP_SOLVER_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "hopset/lp_model.hpp"

namespace hopset {

/// Revised simplex for max b·y s.t. M y <= c, y >= 0 with c >= 0, so the
/// slack basis is feasible from the start. Columns are sparse and can be
/// appended between solves; the current basis stays feasible. The basis
/// inverse is kept dense and rebuilt from scratch periodically.
class PackingSimplex {
public:
    explicit PackingSimplex(std::vector<double> c);

    using Column = std::vector<std::pair<std::size_t, double>>;

    // Sparse column (row, coefficient) with objective b; returns its index.
    std::size_t add_column(Column col, double b);

    enum class Result { Optimal, Unbounded, IterationLimit };
    Result solve(std::size_t max_pivots = 1000000);

    double objective() const;
    // Optimal prices of the rows: the solution of min c·x, Mᵀx >= b, x >= 0.
    const std::vector<double>& row_prices() const { return price_; }
    std::size_t pivots() const { return pivots_; }
    std::size_t rows() const { return m_; }
    std::size_t columns() const { return cols_.size(); }

private:
    // Column ids: 0..m-1 are the slacks, m + j the structural column j.
    std::vector<double> ftran(std::size_t id) const;  // B^-1 a
    double reduced_cost(std::size_t j) const;
    void pivot(std::size_t r, std::size_t id, const std::vector<double>& d);
    void reinvert();
    void recompute_prices();

    std::size_t m_;
    std::vector<double> c_;
    std::vector<Column> cols_;
    std::vector<double> b_;
    std::vector<char> in_basis_;
    std::vector<std::size_t> basis_;  // column id per basis row
    std::vector<double> binv_;        // row-major m x m
    std::vector<double> xb_;          // basic values
    std::vector<double> price_;       // c_B^T B^-1
    std::size_t pivots_ = 0;
    std::size_t since_reinvert_ = 0;
};

/// Cutting-plane LP solve: min-cuts of violated commodities become covering
/// constraints on x, whose packing dual is re-optimized until every commodity
/// carries unit flow. Throws Infeasible (tradeoff size bound too small) or
/// SolverFailure.
LpSolution solve_lp(const LpModel& m);

}  // namespace hopset

#endif  // HOPSET_LP_SOLVER_HPP
