#ifndef WLCIRC_ISO_HPP
#define WLCIRC_ISO_HPP

#include <functional>
#include <optional>
#include <vector>

#include "wlcirc/cc.hpp"
#include "wlcirc/errors.hpp"
#include "wlcirc/graph.hpp"
#include "wlcirc/perm.hpp"

namespace wlcirc::iso {

using cc::CoherentConfiguration;

/// All arc-preserving bijections g -> h, in deterministic (lexicographic
/// image) order. Pure backtracking with degree and arc-consistency pruning;
/// independent of the WL engine. Throws ResourceLimit past the node budget.
std::vector<Perm> graph_isomorphisms(const Graph& g, const Graph& h,
                                     const SearchLimits& limits = {},
                                     SearchStats* stats = nullptr);

/// Automorphism group of a configuration via color-guided backtracking over
/// a stabilizer chain: base points are individualized one at a time and coset
/// representatives are found by individualization-refinement searches.
PermGroup cc_automorphisms(const CoherentConfiguration& x, const SearchLimits& limits = {});

/// x is schurian iff the orbits of aut(x) on Omega^2 are exactly the basis
/// relations.
bool is_schurian(const CoherentConfiguration& x, const SearchLimits& limits = {});

/// Bijection between basis-relation indices preserving all structure
/// constants; maps diagonal classes to diagonal classes and commutes with
/// transposition (implied, but checked on construction).
struct AlgebraicIso {
  CoherentConfiguration source, target;
  std::vector<int> map;  ///< source basis index -> target basis index

  int apply(int r) const { return map[r]; }
  bool is_identity() const;
};

/// Verifies the structure-constant condition; nullopt when violated.
std::optional<AlgebraicIso> make_algebraic_iso(const CoherentConfiguration& src,
                                               const CoherentConfiguration& tgt,
                                               std::vector<int> map);
AlgebraicIso identity_algebraic_iso(const CoherentConfiguration& x);

/// Complete enumeration by backtracking over basis indices, pruned by
/// (diagonal flag, valency, class size, transpose pairing, constant profile).
std::vector<AlgebraicIso> algebraic_isos(const CoherentConfiguration& x,
                                         const CoherentConfiguration& y,
                                         const SearchLimits& limits = {});

/// phi_f : s -> s^f for a combinatorial isomorphism f. Throws InvalidInput
/// when f does not carry basis relations of x onto basis relations of y.
AlgebraicIso induced_algebraic_iso(const Perm& f, const CoherentConfiguration& x,
                                   const CoherentConfiguration& y);

/// The unique algebraic isomorphism x_alpha -> y_alpha' extending phi with
/// 1_alpha -> 1_alpha', or nullopt. Requires matching fibers
/// (fiber(alpha)^phi = fiber(alpha')). Computed by lockstep stabilization of
/// the individualized phi-paired pair tables, then verified against the full
/// structure constants.
std::optional<AlgebraicIso> extension_of(const AlgebraicIso& phi, int alpha, int alpha_prime);

/// phi has the (alpha,alpha')-extension for every fiber-compatible pair.
bool is_sesquiclosed_iso(const AlgebraicIso& phi);

/// (S1) for all alpha: the fibers of x_alpha are exactly the nonempty alpha s;
/// (S2) the identity algebraic automorphism is sesquiclosed.
bool is_sesquiclosed_cc(const CoherentConfiguration& x);

/// Searches for f with s^f = phi(s) for all s (i.e. f in iso(x,y,phi)).
std::optional<Perm> find_iso_inducing(const CoherentConfiguration& x,
                                      const CoherentConfiguration& y,
                                      const AlgebraicIso& phi,
                                      const SearchLimits& limits = {},
                                      SearchStats* stats = nullptr);

/// For each phi: is iso(x,y,phi) nonempty? Indices into the input list.
struct RealizationReport {
  std::vector<std::size_t> realized;
  std::vector<std::size_t> unrealized;
  std::vector<std::size_t> skipped;  ///< sesqui variant: phi not sesquiclosed
};
RealizationReport separable_wrt(const CoherentConfiguration& x, const CoherentConfiguration& y,
                                const std::vector<AlgebraicIso>& phis,
                                const SearchLimits& limits = {});
/// Same check restricted to sesquiclosed phi; others land in `skipped`.
RealizationReport sesquiseparable_wrt(const CoherentConfiguration& x,
                                      const CoherentConfiguration& y,
                                      const std::vector<AlgebraicIso>& phis,
                                      const SearchLimits& limits = {});

struct Distinguisher {
  int m = 0;
  int round = 0;
  std::vector<long long> histogram_a, histogram_b;  ///< shared-id histograms
};

struct IsoCertificate {
  enum class Verdict { isomorphic, non_isomorphic, undecided };
  Verdict verdict = Verdict::undecided;
  std::optional<Perm> witness;
  std::optional<Distinguisher> distinguisher;
  SearchStats stats;

  /// Validates that the witness maps arcs bijectively onto arcs.
  static IsoCertificate make_isomorphic(const Graph& g, const Graph& h, Perm witness,
                                        SearchStats stats = {});
  static IsoCertificate make_non_isomorphic(SearchStats stats = {},
                                            std::optional<Distinguisher> d = std::nullopt);
  static IsoCertificate make_undecided(SearchStats stats = {});
};

struct OracleOptions {
  int max_n = 32;
  long long max_nodes = 200'000'000;
};

/// Independent brute-force oracle: degree-sequence pruning plus naive
/// backtracking, no WL machinery. Exact verdict within caps, else undecided.
IsoCertificate oracle_isomorphic(const Graph& g, const Graph& h, const OracleOptions& opts = {});

// --- shared color-respecting search engine ---

/// Isomorphism search between two pair tables with comparable color keys:
/// finds f with b(f(u),f(v)) = a(u,v), by lockstep stabilization plus
/// individualization-refinement backtracking. Complete within the node
/// budget (throws ResourceLimit past it).
std::optional<Perm> find_table_iso(int na, const std::vector<int>& a, int nb,
                                   const std::vector<int>& b, const SearchLimits& limits = {},
                                   SearchStats* stats = nullptr);

/// Enumeration variant: invokes collect for every such f (deterministic
/// order). Returns the count.
long long for_each_table_iso(int na, const std::vector<int>& a, int nb,
                             const std::vector<int>& b,
                             const std::function<void(const Perm&)>& collect,
                             const SearchLimits& limits = {}, SearchStats* stats = nullptr);

/// Initial paired pair-tables of two graphs (absolute signature keys:
/// equality pattern, arcs both ways, loops), for find_table_iso.
std::pair<std::vector<int>, std::vector<int>> paired_graph_tables(const Graph& g, const Graph& h);

}  // namespace wlcirc::iso

#endif
