#ifndef WLCIRC_GRAPH_HPP
#define WLCIRC_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "wlcirc/perm.hpp"

namespace wlcirc {

using Arc = std::pair<int, int>;

/// Directed graph on the dense vertex set {0..n-1}. Arcs are a set; loops are
/// permitted. Immutable after construction.
class Graph {
 public:
  Graph(int n, std::vector<Arc> arcs);

  int vertex_count() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t arc_count() const { return arcs_.size(); }

  bool has_arc(int u, int v) const {
    return (adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  int out_degree(int u) const { return out_deg_[u]; }
  int in_degree(int u) const { return in_deg_[u]; }

  /// Arc set closed under reversal.
  bool is_undirected() const;

  /// Row u of the adjacency matrix as a bitset of ceil(n/64) words.
  const std::uint64_t* out_row(int u) const { return adj_.data() + static_cast<std::size_t>(u) * words_; }
  const std::uint64_t* in_row(int u) const { return radj_.data() + static_cast<std::size_t>(u) * words_; }
  int row_words() const { return words_; }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && arcs_ == other.arcs_;
  }

 private:
  int n_;
  int words_;
  std::vector<Arc> arcs_;            // sorted, deduplicated
  std::vector<std::uint64_t> adj_;   // out-adjacency bit rows
  std::vector<std::uint64_t> radj_;  // in-adjacency bit rows
  std::vector<int> out_deg_, in_deg_;
};

/// Connection set of a circulant graph: residues mod n, 0 excluded.
struct ConnectionSet {
  int modulus = 0;
  std::vector<int> elements;  // sorted, unique, in [1, modulus)

  ConnectionSet() = default;
  ConnectionSet(int modulus, std::vector<int> elements);

  bool is_symmetric() const;  // elements == -elements (mod n)

  /// Parses "circ:<n>:<s1>,<s2>,..."; empty element list is allowed as
  /// "circ:<n>:".
  static ConnectionSet parse(const std::string& spec);
  std::string to_spec_string() const;
};

Graph build_circulant(const ConnectionSet& c);

/// Paley graph on GF(q), q prime, q = 1 (mod 4): x ~ y iff x-y is a nonzero
/// square. Undirected by construction.
Graph build_paley(int q);

Graph apply_permutation(const Graph& g, const Perm& f);

bool is_prime(int n);
bool is_prime_power(int n, int* prime = nullptr, int* exponent = nullptr);

}  // namespace wlcirc

#endif
