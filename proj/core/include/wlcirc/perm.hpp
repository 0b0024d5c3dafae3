#ifndef WLCIRC_PERM_HPP
#define WLCIRC_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace wlcirc {

/// A permutation of [0, n) stored as its image vector: f[i] is the image of i.
using Perm = std::vector<int>;

bool is_permutation(const Perm& f);
Perm identity_perm(int n);
Perm inverse_perm(const Perm& f);
/// (f * g)(x) = g(f(x)): apply f first, then g.
Perm compose_perms(const Perm& f, const Perm& g);

/// Permutation group given by generators, with enough orbit machinery for
/// schurity and normality tests. The order is computed by the callers that
/// build groups through a stabilizer chain (see iso.hpp) and carried along;
/// it can exceed 64 bits (e.g. symmetric groups), hence the 128-bit count.
struct PermGroup {
  int degree = 0;
  std::vector<Perm> generators;
  unsigned __int128 order = 1;

  /// Orbit labels for the natural action on points; labels are 0-based and
  /// numbered by least orbit element.
  std::vector<int> point_orbits() const;
  /// Orbit labels for the coordinatewise action on ordered pairs, as a
  /// row-major n*n table numbered by least pair index.
  std::vector<int> pair_orbit_partition() const;
  bool is_transitive() const;

  std::string order_string() const;
};

std::string uint128_to_string(unsigned __int128 v);

}  // namespace wlcirc

#endif
