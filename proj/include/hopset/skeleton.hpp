#ifndef HOPSET_SKELETON_HPP
#define HOPSET_SKELETON_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopset/graph.hpp"
#include "hopset/hopset.hpp"
#include "hopset/oracle.hpp"

namespace hopset {

struct SkeletonProfile {
    Ratio alpha{1, 2};
    std::size_t k = 0;                  // max over roots and radii
    std::vector<std::size_t> per_node;  // max width per root
    Node witness_node = 0;
    double witness_radius = 0;          // in graph weight units
};

/// α-skeleton dimension of a USP graph. Per root, every shortest-path tree
/// edge contributes the radii at which its points have reach >= α·radius;
/// the width is maximized over interval endpoints. Throws MissingUspCertificate.
SkeletonProfile skeleton_dimension(const WeightedGraph& g, Ratio alpha = {1, 2});

// Width of the α-skeleton of root u at exact radius r (graph weight units).
std::size_t skeleton_width_at(const WeightedGraph& g, Node u, Ratio r, Ratio alpha = {1, 2});

struct SkeletonOverrides {
    std::optional<double> dprime;       // original weight units
    std::optional<double> epsilon;
    std::optional<std::size_t> max_levels;
};

// Distance band covered by one level, in the graph's (scaled) units.
struct Level {
    double D = 0;      // original units
    Weight lower = 0;  // ceil(D · unit)
    Weight upper = 0;  // floor(D^(1+ε) · unit)
};

struct SkeletonParams {
    double epsilon = 0.5;
    double dprime_formula = 0;  // L_max^4 k^6 log2^12 n
    double dprime = 0;          // after clamping / override, original units
    Weight dprime_scaled = 0;
    bool dprime_from_formula = true;
    std::vector<Level> levels;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> rho;  // distinct ranks
    std::vector<std::string> warnings;
};

// ε = 1/(2 log2 max(k,2)); D' from the formula with C = 1, clamped to the
// diameter and to at least 4·L_max + 1, or the override; levels D_0 = D',
// D_{i+1} = D_i^(1+ε) until the diameter is passed.
SkeletonParams compute_params(const WeightedGraph& g, std::size_t k, std::uint64_t seed,
                              const SkeletonOverrides& overrides = {});

/// Replaces every edge longer than floor(k·L) by a chain of pieces of that
/// length (the last one shorter). New nodes get ids after the original ones.
/// Throws BlowupExceeded if the node count more than triples.
WeightedGraph subdivide_long_edges(const WeightedGraph& g, std::size_t k, Ratio L);

// Average edge weight as an exact ratio.
Ratio average_edge_length(const WeightedGraph& g);

struct HPrime {
    std::vector<OracleArc> arcs;  // u -> m, m the ρ-minimum of P_uv
    Hopset hopset;                // the same pairs, hopbound 2
};

// Short-range hub shortcuts covering all pairs with d_G(u,v) <= dprime (graph units).
HPrime build_h_prime(const WeightedGraph& g, Weight dprime, const std::vector<std::uint64_t>& rho);

struct LevelSets {
    Weight lower = 0;
    Weight upper = 0;
    std::vector<std::vector<Node>> R;          // per node, sorted
    std::vector<std::pair<Node, Node>> h2;     // middle pairs, sorted, q < r
    // window[u * n + v]: ρ-minimum on P_uv at distance [lower/4, lower/2] from u,
    // kNoNode when d(u,v) < lower or the window is empty.
    std::vector<Node> window;
};

LevelSets build_level(const WeightedGraph& g, Weight lower, Weight upper, const std::vector<std::uint64_t>& rho);

struct SkeletonOracle {
    ThreeHopOracle oracle;
    SkeletonParams params;
    std::vector<LevelSets> levels;
    HPrime h_prime;
    std::size_t k = 0;
    int attempts = 0;
};

/// H' plus all levels; validated, retried with seed + 1 up to 8 times.
/// Throws OracleBuildFailed naming a violating pair.
SkeletonOracle build_skeleton_oracle(const WeightedGraph& g, std::uint64_t seed, const SkeletonOverrides& overrides = {},
                                     const OracleValidationOptions& validation = {});

}  // namespace hopset

#endif  // HOPSET_SKELETON_HPP
