#ifndef WLCIRC_GRAPH_IO_HPP
#define WLCIRC_GRAPH_IO_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "wlcirc/graph.hpp"

namespace wlcirc {

/// What a parser did to the raw input: how external vertex ids were mapped to
/// the dense range and how many duplicate arcs were collapsed.
struct ParseReport {
  std::vector<std::pair<long long, int>> relabeling;  // (external id, dense id)
  int duplicate_arcs = 0;
  bool had_header = false;
};

/// Edge-list format: one "u v" pair per line, '#' starts a comment, optional
/// header line "n <count>". Vertex ids need not be dense; they are relabeled
/// in order of first appearance unless a header pins n (then ids must already
/// lie in [0, n)).
Graph read_edge_list(std::istream& in, ParseReport* report = nullptr);
Graph read_edge_list_file(const std::string& path, ParseReport* report = nullptr);
void write_edge_list(std::ostream& out, const Graph& g);

/// graph6 (undirected) and digraph6 ('&'-prefixed) byte encodings.
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);      // requires undirected, loop-free
Graph parse_digraph6(const std::string& line);
std::string to_digraph6(const Graph& g);

/// Dispatch: "circ:<n>:<list>" connection-set spec, else a file path whose
/// contents are sniffed (graph6/digraph6 one-liner vs edge list).
Graph load_graph_spec(const std::string& spec, ParseReport* report = nullptr);

}  // namespace wlcirc

#endif
