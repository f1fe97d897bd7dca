#ifndef HOPSET_ORACLE_HPP
#define HOPSET_ORACLE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopset/graph.hpp"
#include "hopset/hopset.hpp"

namespace hopset {

struct OracleArc {
    Node from = 0;
    Node to = 0;
};

struct QueryResult {
    Weight distance = kInfinity;
    std::size_t lookups = 0;
};

/// Three-hop distance oracle: oriented first-hop lists N1(w) and a middle
/// table over H2 ∪ E ∪ {x,x}. A query probes every (x, y) in N1(u) × N1(v).
class ThreeHopOracle {
public:
    struct Entry {
        Node to = 0;
        Weight d = 0;
    };

    ThreeHopOracle() = default;

    // Weights come from `dist` when given, otherwise from per-source Dijkstra
    // runs memoized over the distinct sources.
    static ThreeHopOracle build(const WeightedGraph& g, std::vector<OracleArc> arcs,
                                std::vector<std::pair<Node, Node>> h2, const DistanceFn& dist = {});
    // FirstLast edges become arcs in both directions, Middle edges go to the
    // middle table, untagged edges go to both.
    static ThreeHopOracle from_hopset(const WeightedGraph& g, const Hopset& hs, const DistanceFn& dist = {});

    QueryResult query(Node u, Node v) const;  // throws NoCover

    std::size_t num_nodes() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    // N1(w) sorted by target, including the self entry.
    std::span<const Entry> n1(Node w) const {
        return {entries_.data() + offsets_[w], entries_.data() + offsets_[w + 1]};
    }
    std::optional<Weight> mid(Node x, Node y) const;
    std::size_t mid_size() const { return mid_.size(); }

    std::size_t arc_count() const { return entries_.size() - num_nodes(); }  // |H⃗1|
    std::size_t h1_size() const { return h1_size_; }                        // |H1|, unordered
    std::size_t h2_size() const { return h2_size_; }                        // |H2| without E and identities
    std::size_t total_n1() const { return entries_.size(); }                // Σ|N1(u)|
    std::size_t max_n1() const;

    // Non-self arcs and the H2 pairs, as given to build().
    std::vector<OracleArc> arcs() const;
    const std::vector<std::pair<Node, Node>>& h2_pairs() const { return h2_; }

private:
    std::vector<std::size_t> offsets_;
    std::vector<Entry> entries_;
    std::unordered_map<std::uint64_t, Weight> mid_;
    std::vector<std::pair<Node, Node>> h2_;
    std::size_t h1_size_ = 0;
    std::size_t h2_size_ = 0;
};

struct OracleValidationOptions {
    // Above this node count, `samples` seeded random pairs are checked instead of all pairs.
    std::size_t exhaustive_limit = 300;
    std::size_t samples = 10000;
    std::uint64_t seed = 1;
};

ValidationReport validate_oracle(const WeightedGraph& g, const ThreeHopOracle& o,
                                 const OracleValidationOptions& opts = {});

// (Σ_u |N1(u)|)² / n²: the mean lookup count over uniformly random ordered pairs.
Ratio average_query_cost(const ThreeHopOracle& o);

// Sidecar format: "p oracle <n> <arcs> <mids>", then "a <w> <x>" and "m <x> <y>" lines.
// Weights are not stored; they are recomputed on load.
ThreeHopOracle read_oracle(std::istream& in, const WeightedGraph& g);
ThreeHopOracle read_oracle(const std::string& path, const WeightedGraph& g);
void write_oracle(std::ostream& out, const ThreeHopOracle& o);
void write_oracle(const std::string& path, const ThreeHopOracle& o);

}  // namespace hopset

#endif  // HOPSET_ORACLE_HPP
