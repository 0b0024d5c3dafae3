#ifndef WLCIRC_TESTS_SUPPORT_NAIVE_HPP
#define WLCIRC_TESTS_SUPPORT_NAIVE_HPP

// Independent brute-force oracles for the test suites. These deliberately use
// slow, obviously-correct data structures (maps of vectors, next_permutation)
// and share no code with the engine they check.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "wlcirc/graph.hpp"
#include "wlcirc/perm.hpp"
#include "wlcirc/util.hpp"
#include "wlcirc/wl.hpp"

namespace naive {

using wlcirc::Graph;
using wlcirc::Perm;

inline std::vector<int> tuple_at(std::size_t index, int n, int m) {
  std::vector<int> x(m);
  for (int i = m - 1; i >= 0; --i) {
    x[i] = static_cast<int>(index % n);
    index /= n;
  }
  return x;
}

inline std::size_t tuple_count(int n, int m) {
  std::size_t c = 1;
  for (int i = 0; i < m; ++i) c *= static_cast<std::size_t>(n);
  return c;
}

/// Per-tuple initial signature: the literal pair of patterns.
inline std::vector<int> initial_signature(const Graph& g, const std::vector<int>& x) {
  const int m = static_cast<int>(x.size());
  std::vector<int> sig;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) sig.push_back(g.has_arc(x[i], x[j]) ? 1 : 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) sig.push_back(x[i] == x[j] ? 1 : 0);
  return sig;
}

/// Initial coloring by signature enumeration; colors numbered by least tuple.
inline std::vector<int> initial_coloring(const Graph& g, int m) {
  const std::size_t total = tuple_count(g.vertex_count(), m);
  std::map<std::vector<int>, int> ids;
  std::vector<int> colors(total);
  for (std::size_t t = 0; t < total; ++t) {
    auto sig = initial_signature(g, tuple_at(t, g.vertex_count(), m));
    auto [it, fresh] = ids.emplace(std::move(sig), static_cast<int>(ids.size()));
    colors[t] = it->second;
  }
  // renumber by first appearance
  std::vector<int> remap(ids.size(), -1);
  int next = 0;
  for (int& c : colors) {
    if (remap[c] == -1) remap[c] = next++;
    c = remap[c];
  }
  return colors;
}

/// One refinement round (m >= 2), multisets built with sorted vectors.
inline std::vector<int> refine_round(const Graph& g, const std::vector<int>& colors, int m) {
  const int n = g.vertex_count();
  const std::size_t total = colors.size();
  std::map<std::vector<int>, int> ids;
  std::vector<int> out(total);
  for (std::size_t t = 0; t < total; ++t) {
    std::vector<int> x = tuple_at(t, n, m);
    std::vector<std::vector<int>> entries;
    for (int a = 0; a < n; ++a) {
      std::vector<int> subs;
      for (int i = 0; i < m; ++i) {
        std::vector<int> y = x;
        y[i] = a;
        std::size_t idx = 0;
        for (int j = 0; j < m; ++j) idx = idx * n + y[j];
        subs.push_back(colors[idx]);
      }
      entries.push_back(std::move(subs));
    }
    std::sort(entries.begin(), entries.end());
    std::vector<int> sig{colors[t]};
    for (auto& e : entries) sig.insert(sig.end(), e.begin(), e.end());
    auto [it, fresh] = ids.emplace(std::move(sig), static_cast<int>(ids.size()));
    out[t] = it->second;
  }
  std::vector<int> remap(ids.size(), -1);
  int next = 0;
  for (int& c : out) {
    if (remap[c] == -1) remap[c] = next++;
    c = remap[c];
  }
  return out;
}

inline int class_count(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

inline bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  std::map<int, int> ab, ba;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [it1, f1] = ab.emplace(a[i], b[i]);
    auto [it2, f2] = ba.emplace(b[i], a[i]);
    if (it1->second != b[i] || it2->second != a[i]) return false;
  }
  return true;
}

/// All arc-preserving bijections by scanning every permutation (n <= 9).
inline std::vector<Perm> brute_isomorphisms(const Graph& g, const Graph& h) {
  std::vector<Perm> found;
  if (g.vertex_count() != h.vertex_count()) return found;
  const int n = g.vertex_count();
  Perm f(n);
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = g.arc_count() == h.arc_count();
    for (const auto& [u, v] : g.arcs()) {
      if (!h.has_arc(f[u], f[v])) {
        ok = false;
        break;
      }
    }
    if (ok) found.push_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  return found;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<wlcirc::Arc> arcs = a.arcs();
  for (const auto& [u, v] : b.arcs()) arcs.emplace_back(a.vertex_count() + u, a.vertex_count() + v);
  return Graph(a.vertex_count() + b.vertex_count(), std::move(arcs));
}

inline Graph random_graph(int n, std::uint64_t seed, int percent = 30) {
  wlcirc::SplitMix64 rng(seed);
  std::vector<wlcirc::Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (rng.below(100) < static_cast<std::uint64_t>(percent)) arcs.emplace_back(u, v);
    }
  return Graph(n, std::move(arcs));
}

inline wlcirc::ConnectionSet random_connection_set(int n, std::uint64_t seed) {
  wlcirc::SplitMix64 rng(seed);
  std::vector<int> elems;
  for (;;) {
    elems.clear();
    for (int s = 1; s < n; ++s)
      if (rng.coin()) elems.push_back(s);
    if (!elems.empty()) return wlcirc::ConnectionSet(n, elems);
  }
}

inline Perm random_permutation(int n, std::uint64_t seed) {
  wlcirc::SplitMix64 rng(seed);
  Perm f(n);
  std::iota(f.begin(), f.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(f[i], f[static_cast<int>(rng.below(i + 1))]);
  return f;
}

inline Graph cycle(int n) {
  std::vector<int> elems{1};
  if (n > 2) elems.push_back(n - 1);
  return wlcirc::build_circulant(wlcirc::ConnectionSet(n, elems));
}

}  // namespace naive

#endif
