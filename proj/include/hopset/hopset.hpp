#ifndef HOPSET_HOPSET_HPP
#define HOPSET_HOPSET_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hopset/graph.hpp"

namespace hopset {

// Role of a shortcut in a 3-hop oracle. The numeric values are the file codes.
enum class Part : std::uint8_t { Untagged = 0, FirstLast = 1, Middle = 2 };

struct Shortcut {
    Node u = 0;  // u < v
    Node v = 0;
    Weight w = 0;
    Part part = Part::Untagged;

    friend bool operator==(const Shortcut&, const Shortcut&) = default;
};

struct PairTag {
    Node u = 0;
    Node v = 0;
    Part part = Part::Untagged;
};

using DistanceFn = std::function<Weight(Node, Node)>;

/// A set of weighted shortcuts together with the hopbound it is meant for.
///
/// Every stored weight is the exact graph distance between the endpoints.
/// Self pairs are never stored; a pair that duplicates a graph edge which is
/// itself a shortest path is dropped unless it is tagged FirstLast.
class Hopset {
public:
    Hopset() = default;

    // Canonicalizes the candidate pairs and assigns exact weights via `dist`.
    // Duplicates keep the strongest tag (FirstLast > Middle > Untagged).
    static Hopset from_pairs(const WeightedGraph& g, std::vector<PairTag> pairs, int hopbound,
                             const DistanceFn& dist);
    // As above, with weights from memoized Dijkstra runs.
    static Hopset from_pairs(const WeightedGraph& g, std::vector<PairTag> pairs, int hopbound);
    // Takes shortcuts with claimed weights and re-verifies every weight.
    static Hopset from_shortcuts(const WeightedGraph& g, std::vector<Shortcut> edges, int hopbound);

    int hopbound() const { return hopbound_; }
    std::span<const Shortcut> edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    std::size_t count(Part p) const;

    Hopset with_hopbound(int h) const;

    // Throws InvalidShortcut naming the first edge whose weight is not d_G.
    void verify_weights(const WeightedGraph& g) const;

private:
    Hopset(std::vector<Shortcut> edges, int hopbound) : edges_(std::move(edges)), hopbound_(hopbound) {}

    std::vector<Shortcut> edges_;
    int hopbound_ = 1;
};

struct Violation {
    Node u = 0;
    Node v = 0;
    Weight limited = kInfinity;  // d^h over G ∪ H
    Weight exact = 0;            // d_G
};

struct ValidationReport {
    bool pass = true;
    std::size_t pairs_checked = 0;
    std::size_t violation_count = 0;
    std::vector<Violation> violations;  // the first <= 32, in (u, v) order

    static constexpr std::size_t kMaxListed = 32;
};

struct ValidationOptions {
    // Only ordered pairs with d_G(u,v) <= max_distance are checked.
    Weight max_distance = kInfinity;
};

/// Checks d^h_{G∪H}(u,v) = d_G(u,v) for all ordered pairs.
ValidationReport validate_hopset(const WeightedGraph& g, const Hopset& hs, int h,
                                 const ValidationOptions& opts = {});

// Minimal number of hops needed over G ∪ H to realize d_G(s, v), per v.
std::vector<int> min_hops_from(const WeightedGraph& g, const Hopset& hs, Node s);

struct GenericQueryResult {
    Weight distance = kInfinity;
    std::size_t meets = 0;  // nodes reached from both sides
};

// min over w of d^{ceil(h/2)}(u,w) + d^{floor(h/2)}(v,w), h = hs.hopbound().
Weight generic_query(const WeightedGraph& g, const Hopset& hs, Node u, Node v);
GenericQueryResult generic_query_counted(const WeightedGraph& g, const Hopset& hs, Node u, Node v);

// Text format: "p hopset <n> <h> <k>" then k lines "s <u> <v> <w> <part>".
Hopset read_hopset(std::istream& in, const WeightedGraph& g);
Hopset read_hopset(const std::string& path, const WeightedGraph& g);
void write_hopset(std::ostream& out, const Hopset& hs, std::size_t n);
void write_hopset(const std::string& path, const Hopset& hs, std::size_t n);

}  // namespace hopset

#endif  // HOPSET_HOPSET_HPP
