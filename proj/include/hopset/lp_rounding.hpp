#ifndef HOPSET_LP_ROUNDING_HPP
#define HOPSET_LP_ROUNDING_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hopset/graph.hpp"
#include "hopset/hopset.hpp"
#include "hopset/lp_model.hpp"
#include "hopset/oracle.hpp"

namespace hopset {

// Positions i of path with π(path[i]) below every earlier value.
std::vector<std::size_t> prefix_minima(std::span<const Node> path, std::span<const std::uint32_t> pi);
// Positions i with π(path[i]) below every later value, in increasing order.
std::vector<std::size_t> suffix_minima(std::span<const Node> path, std::span<const std::uint32_t> pi);
// All pairs {prefix minimum, suffix minimum} along the path, self pairs left out.
std::vector<std::pair<Node, Node>> shortcut_set(std::span<const Node> path, std::span<const std::uint32_t> pi);

// C = 8 h ln n with ln n rounded up to a multiple of 1/1024.
double amplification(int h, std::size_t n);

struct RoundingResult {
    Hopset hopset;
    std::size_t h_prime_size = 0;    // pairs with some indicator set
    std::size_t max_set_size = 0;    // max |S({u,v})|
    int attempts = 0;
    std::uint64_t seed_used = 0;
};

/// Randomized rounding: indicators per (pair, layer) with probability
/// min(C·x, 1) drawn in (u, v, layer) order, then a seeded permutation π and
/// H'' = ∪ S({u,v}). Validated at h; retried with seed + 1 up to 8 times,
/// then RoundingFailed.
RoundingResult round_solution(const WeightedGraph& g, const LpModel& m, const LpSolution& sol, std::uint64_t seed);

struct TradeoffResult {
    ThreeHopOracle oracle;
    Hopset hopset;                 // FirstLast dominates when a pair has both roles
    std::size_t first_last = 0;    // pairs with the first/last role
    std::size_t middle = 0;        // pairs with the middle role
    std::size_t h_prime_size = 0;
    int attempts = 0;
    std::uint64_t seed_used = 0;
};

/// Tradeoff rounding (h = 3): first and third layers draw with x1, the middle
/// layer with x. A shortcut from S({u,v}) gets the first/last role if {u,v}
/// had a first- or third-layer indicator and the middle role for a second-layer
/// one. First hops may also use graph edges, so those are added to N1.
TradeoffResult round_tradeoff(const WeightedGraph& g, const LpModel& m, const LpSolution& sol, std::uint64_t seed);

}  // namespace hopset

#endif  // HOPSET_LP_ROUNDING_HPP
