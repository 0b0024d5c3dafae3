#ifndef WLCIRC_CC_HPP
#define WLCIRC_CC_HPP

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wlcirc/graph.hpp"
#include "wlcirc/wl.hpp"

namespace wlcirc::cc {

/// Axiom violation found by validate(): which condition failed and a witness.
struct Violation {
  std::string axiom;  ///< "partition", "C1", "C2" or "C3"
  std::string detail;
  std::vector<int> witness;  ///< points/colors involved, axiom-specific
};

/// Coherent configuration on {0..n-1}: a partition of Omega^2 into basis
/// relations satisfying
///   (C1) the diagonal is a union of basis relations,
///   (C2) the class of (b,a) depends only on the class of (a,b),
///   (C3) |a r  meet  b s*| is constant over (a,b) in t, giving c_{rs}^t.
/// Color ids are canonical (numbered by least pair index), so two
/// configurations are equal iff their tables are equal. Immutable.
class CoherentConfiguration {
 public:
  /// Empty placeholder; real instances come from validate()/from_table().
  CoherentConfiguration() = default;

  /// Checks the axioms on an arbitrary partition table; returns the
  /// configuration (with structure constants populated) or the violation.
  static std::variant<CoherentConfiguration, Violation> validate(int n, std::vector<int> table);

  /// validate() that throws InvalidInput on violation.
  static CoherentConfiguration from_table(int n, std::vector<int> table);

  int size() const { return n_; }
  int rank() const { return rank_; }
  int color(int u, int v) const { return table_[static_cast<std::size_t>(u) * n_ + v]; }
  const std::vector<int>& table() const { return table_; }

  int transpose(int r) const { return transpose_[r]; }
  bool is_diagonal_class(int r) const { return diagonal_class_[r]; }

  int num_fibers() const { return static_cast<int>(fibers_.size()); }
  int fiber_of(int point) const { return fiber_of_point_[point]; }
  const std::vector<std::vector<int>>& fibers() const { return fibers_; }
  /// Fibers containing the sources / targets of pairs in class r.
  int source_fiber(int r) const { return source_fiber_[r]; }
  int target_fiber(int r) const { return target_fiber_[r]; }
  int diagonal_color_of_fiber(int fiber) const { return diag_color_[fiber]; }

  /// c_{rs}^t; zero when the triple does not occur.
  int constant(int r, int s, int t) const;
  /// All nonzero (r,s,t,c) sorted lexicographically.
  const std::vector<std::array<int, 4>>& constants() const { return constants_; }

  /// |alpha r| for alpha in the source fiber of r.
  int valency(int r) const { return valency_[r]; }
  long long class_size(int r) const { return class_size_[r]; }

  bool is_scheme() const { return fibers_.size() == 1; }
  bool is_commutative() const;

  bool operator==(const CoherentConfiguration& o) const {
    return n_ == o.n_ && table_ == o.table_;
  }

 private:
  void populate(int n, std::vector<int> table);  // derived data, no axiom checks

  int n_ = 0, rank_ = 0;
  std::vector<int> table_;
  std::vector<int> transpose_;
  std::vector<char> diagonal_class_;
  std::vector<int> fiber_of_point_;
  std::vector<std::vector<int>> fibers_;
  std::vector<int> source_fiber_, target_fiber_, diag_color_;
  std::vector<int> valency_;
  std::vector<long long> class_size_;
  std::vector<std::array<int, 4>> constants_;
};

/// WL(G): the coherent configuration of the graph, i.e. the 2-WL stable
/// partition of Omega^2; the smallest configuration with D a relation.
CoherentConfiguration cc_of_graph(const Graph& g, const wl::WlOptions& opts = {});

/// True iff every basis relation of x is a union of basis relations of y
/// (x <= y: y is an extension of x).
bool refines(const CoherentConfiguration& x, const CoherentConfiguration& y);

/// Parabolic: a relation of the configuration that is an equivalence
/// relation, stored as its block partition plus the basis colors it unites.
struct Parabolic {
  int n = 0;
  std::vector<int> block_of;  ///< block label per point, canonical numbering
  int num_blocks = 0;
  std::vector<int> relation_colors;  ///< sorted basis indices
};

/// The smallest parabolic containing the relation given as a union of basis
/// colors. Throws InvalidInput when the closure is not a relation of x.
Parabolic parabolic_closure(const CoherentConfiguration& x, const std::vector<int>& colors);

/// rad(s): the largest parabolic e such that s is a union of blocks
/// Delta x Delta' over (Delta,Delta') in s_{Omega/e}. For relations of a
/// valid configuration this always exists; failure is an internal error.
Parabolic radical(const CoherentConfiguration& x, const std::vector<int>& colors);

/// E(x): closure of the single-class parabolic closures under join/meet,
/// plus the diagonal. Sorted by (num_blocks desc, blocks).
std::vector<Parabolic> all_parabolics(const CoherentConfiguration& x);
/// Cross-check variant scanning all 2^rank unions; rank <= 20 enforced.
std::vector<Parabolic> all_parabolics_exhaustive(const CoherentConfiguration& x);
/// Does e describe an equivalence relation that is a relation of x?
bool is_parabolic_of(const CoherentConfiguration& x, const Parabolic& e);

/// Builds a Parabolic from a block assignment when the block equivalence is
/// a relation of x; nullopt otherwise.
std::optional<Parabolic> parabolic_from_blocks(const CoherentConfiguration& x,
                                               std::vector<int> block_of);

CoherentConfiguration quotient(const CoherentConfiguration& x, const Parabolic& e);

/// Restriction to a class of a parabolic. The two-argument form verifies the
/// precondition by scanning all parabolics; the three-argument form takes the
/// parabolic and block index directly.
CoherentConfiguration restriction(const CoherentConfiguration& x, const std::vector<int>& delta);
CoherentConfiguration restriction(const CoherentConfiguration& x, const Parabolic& e, int block);

/// Section Delta/e: quotient(restriction(x, Delta), e restricted to Delta).
/// Requires e to be contained in a parabolic having Delta as a class.
CoherentConfiguration section(const CoherentConfiguration& x, const std::vector<int>& delta,
                              const Parabolic& e);

/// Smallest configuration >= x with 1_alpha a class for each given point.
CoherentConfiguration point_extension(const CoherentConfiguration& x, const std::vector<int>& points);

/// A point alpha with |alpha s| <= 1 for every basis relation, if any
/// (least such point).
std::optional<int> partly_regular_point(const CoherentConfiguration& x);

/// Largest configuration z with z <= x and z <= y (intersection of the
/// coherent algebras).
CoherentConfiguration meet(const CoherentConfiguration& x, const CoherentConfiguration& y);

}  // namespace wlcirc::cc

#endif
