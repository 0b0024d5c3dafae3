#ifndef WLCIRC_CORPUS_HPP
#define WLCIRC_CORPUS_HPP

#include <cstdint>
#include <vector>

#include "wlcirc/circulant.hpp"

namespace wlcirc::circ {

/// How the per-order scheme corpus is generated. Connection sets are taken
/// up to the symmetry S -> mS (m coprime to n): exhaustively when
/// 2^(n-1) <= 2^exhaustive_exponent_cap, otherwise a structured family
/// (unions of multiplier orbits, subgroup/coset wreath-type sets) plus
/// `random_sets` seeded random sets. Schemes are deduplicated; meets of
/// pairs are added when `include_meets`.
struct CorpusOptions {
  int random_sets = 200;
  std::uint64_t seed = 0;
  bool include_meets = true;
  int exhaustive_exponent_cap = 15;  ///< exhaustive when n-1 <= this
};

/// Representative connection sets (canonical under S -> mS), deterministic.
std::vector<ConnectionSet> corpus_connection_sets(int n, const CorpusOptions& opts = {});

/// Distinct circulant schemes on Z_n arising as WL closures of the corpus
/// Cayley graphs (plus pairwise meets), sorted deterministically by
/// (rank, table).
std::vector<CirculantScheme> circulant_corpus(int n, const CorpusOptions& opts = {});

}  // namespace wlcirc::circ

#endif
