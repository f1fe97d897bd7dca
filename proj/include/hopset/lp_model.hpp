#ifndef HOPSET_LP_MODEL_HPP
#define HOPSET_LP_MODEL_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopset/graph.hpp"

namespace hopset {

enum class LpMode { Base, Tradeoff };

// A pair (s, t) whose shortest path has more than h edges.
struct Commodity {
    Node s = 0;
    Node t = 0;
    std::vector<Node> path;  // P^st from s to t
};

// Capacity of a layered arc: a constant 1 (stay arcs and graph edges) or a variable.
struct ArcCapacity {
    enum Kind : std::uint8_t { One, X, X1 } kind = One;
    int var = -1;  // index into LpModel::pairs for X / X1
};

/// Flow formulation of the minimum h-hopset problem over a USP graph.
///
/// Per commodity the layered graph has nodes (a, i), a the position on P^st
/// and i in 0..h, and arcs (a, i) -> (b, i+1) for a <= b. Flow variables are
/// kept implicit; their counts are reported and write_lp() spells them out.
struct LpModel {
    LpMode mode = LpMode::Base;
    int h = 2;
    std::size_t n = 0;
    double size_bound = 0;  // tradeoff only

    std::vector<std::pair<Node, Node>> pairs;  // x variables, u < v, sorted
    std::vector<Commodity> commodities;

    std::size_t num_flow_vars = 0;
    std::size_t num_rows = 0;
    std::size_t num_nonzeros = 0;

    std::size_t num_vars() const { return pairs.size() * (mode == LpMode::Tradeoff ? 2 : 1) + num_flow_vars; }
    // Variable index of {u, v}, or -1 for graph edges and pairs outside the model.
    int var_of(Node u, Node v) const;
    ArcCapacity capacity(Node u, Node v, int layer) const;

    std::unordered_map<std::uint64_t, int> index;
};

/// Base model: minimize Σ x subject to unit s0 -> t_h flow for every commodity.
/// Throws MissingUspCertificate, InfeasibleParams (h < 2).
LpModel build_lp(const WeightedGraph& g, int h);

/// h = 3 model minimizing Σ x1 with Σ x <= size_bound; first and third layers
/// are capped by x1, the middle layer by x.
LpModel build_lp_tradeoff(const WeightedGraph& g, double size_bound);

enum class LpStatus { Optimal, Imported };

struct LpSolution {
    LpStatus status = LpStatus::Optimal;
    std::vector<double> x;   // per model pair
    std::vector<double> x1;  // tradeoff only
    double objective = 0;    // Σ x (base) or Σ x1 (tradeoff)
    std::size_t cuts = 0;
    std::size_t rounds = 0;
    std::size_t pivots = 0;
};

struct LpCheck {
    bool ok = true;
    double max_violation = 0;
    double min_flow = 1;  // smallest commodity max-flow
    std::string worst;    // description of the largest violation
};

// Max s0 -> t_h flow of one commodity under the given capacities (x1 empty in base mode).
double commodity_max_flow(const LpModel& m, const Commodity& c, std::span<const double> x,
                          std::span<const double> x1);

/// Re-checks bounds, x1 <= x, the size bound and, per commodity, that a unit
/// flow obeying conservation and capacities exists (derived by max-flow).
LpCheck verify_solution(const LpModel& m, const LpSolution& sol, double tol = 1e-9);

// CPLEX-style LP text with variables x_u_v, x1_u_v and f_s_t_u_i_v_j (nodes 1-indexed).
void write_lp(std::ostream& out, const LpModel& m);
// "<name> <value>" lines; flow variables are ignored and re-derived on verify.
LpSolution read_lp_solution(std::istream& in, const LpModel& m);

}  // namespace hopset

#endif  // HOPSET_LP_MODEL_HPP
