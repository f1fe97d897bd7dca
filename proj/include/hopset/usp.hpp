#ifndef HOPSET_USP_HPP
#define HOPSET_USP_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hopset/graph.hpp"

namespace hopset {

struct UspResult {
    WeightedGraph graph;  // carries the certificate
    UspCertificate certificate;
    std::uint64_t seed_used = 0;
};

/// Reweights g so that every ordered pair has exactly one shortest path.
///
/// Weights become w * scale + jitter with scale = 2n^2 rounded up to a power of
/// two and distinct jitter values below scale / n. Uniqueness is verified by
/// path counting from every source; a failed seed is retried with seed + 1, at
/// most 16 times, before UspFailure is thrown.
UspResult make_usp(const WeightedGraph& g, std::uint64_t seed);

// Per-edge original weights of a graph produced by make_usp (identity otherwise).
std::vector<Weight> original_weights(const WeightedGraph& g);

// True when every ordered pair has a unique shortest path.
bool has_unique_shortest_paths(const WeightedGraph& g);

}  // namespace hopset

#endif  // HOPSET_USP_HPP
