#ifndef HOPSET_GRAPH_IO_HPP
#define HOPSET_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "hopset/graph.hpp"

namespace hopset {

// Text format: optional "c" comment lines, "p hop <n> <m>", then m lines "e <u> <v> <w>", 1-indexed.
WeightedGraph read_graph(std::istream& in);
WeightedGraph read_graph(const std::string& path);
void write_graph(std::ostream& out, const WeightedGraph& g);
void write_graph(const std::string& path, const WeightedGraph& g);

}  // namespace hopset

#endif  // HOPSET_GRAPH_IO_HPP
