#ifndef WLCIRC_WL_HPP
#define WLCIRC_WL_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "wlcirc/graph.hpp"

namespace wlcirc::wl {

/// Coloring of Omega^m stored as a flat row-major array:
/// index(x) = x_1*n^(m-1) + ... + x_m. Color ids are dense 0..num_colors-1
/// and canonical: classes are numbered by their lexicographically least
/// tuple.
struct TupleColoring {
  int m = 0;
  int n = 0;
  std::vector<int> color_of;
  int num_colors = 0;
  int round = 0;
  bool stable = false;
};

/// Partition of Omega^m in the same flat layout, canonical numbering.
struct TuplePartition {
  int m = 0;
  int n = 0;
  std::vector<int> class_of;
  int num_classes = 0;
};

struct WlOptions {
  /// Refinement refuses to allocate more than this many tuples (n^m).
  std::size_t max_tuples = std::size_t{1} << 25;
};

std::size_t tuple_space_size(int n, int m, const WlOptions& opts);

/// Initial coloring: two tuples share a color iff they have the same arc
/// pattern {(i,j) : (x_i,x_j) in D} and the same equality pattern
/// {(i,j) : x_i = x_j}. For m = 1 the signature is the loop flag.
TupleColoring initial_coloring(const Graph& g, int m, const WlOptions& opts = {});

/// One refinement round; output refines input. For m >= 2 the new color of x
/// is (old color, multiset over alpha of the m substitution colors); for
/// m = 1 it is classical refinement by in-/out-neighborhood color multisets.
TupleColoring refine_round(const Graph& g, const TupleColoring& c);

/// Iterated refinement until the class count stops growing.
TupleColoring stable_coloring(const Graph& g, int m, const WlOptions& opts = {});

struct EquivalenceOutcome {
  bool equivalent = false;
  int rounds = 0;          ///< lockstep rounds executed
  int diverged_round = -1; ///< first round with unequal histograms, -1 if none
  /// Shared-id color histograms at the divergence round (or at stability);
  /// index = shared color id.
  std::vector<long long> histogram_a, histogram_b;
};

/// Lockstep m-WL equivalence: both graphs are refined simultaneously with a
/// shared signature dictionary per round, so colors are comparable across
/// graphs; returns false as soon as per-round histograms diverge. Graphs of
/// different order are inequivalent.
EquivalenceOutcome wl_equivalence(const Graph& g, const Graph& h, int m,
                                  const WlOptions& opts = {});
bool wl_equivalent(const Graph& g, const Graph& h, int m, const WlOptions& opts = {});

/// k-skeleton of a stable coloring: the partition {pr_k(X)} of Omega^k.
TuplePartition skeleton(const TupleColoring& c, int k);

/// Residue at y in Omega^(m-k): classes {xbar : (xbar, y) in X} over classes
/// X meeting the fiber over y.
TuplePartition residue(const TupleColoring& c, const std::vector<int>& y);

/// True iff every class of p is contained in a class of q (p is finer).
bool partition_refines(const TuplePartition& p, const TuplePartition& q);

// --- pair-table engine, shared with the coherent-configuration layer ---

/// 2-WL stabilization of an arbitrary coloring of Omega^2 (row-major n*n
/// table). Returns the canonical stable table and the number of rounds run.
std::pair<std::vector<int>, int> stabilize_pair_table(int n, std::vector<int> table);

/// Lockstep 2-WL stabilization of two pair tables whose entries are already
/// comparable keys (the same key in `a` and `b` means "same initial color").
struct PairedStabilization {
  bool match = false;
  int rounds = 0;
  int diverged_round = -1;
  std::vector<int> table_a, table_b;  ///< shared ids; meaningful when match
  int num_colors = 0;
};
PairedStabilization lockstep_stabilize_pair_tables(int na, std::vector<int> a,
                                                   int nb, std::vector<int> b);

}  // namespace wlcirc::wl

#endif
