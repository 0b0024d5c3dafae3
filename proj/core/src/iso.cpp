#include "wlcirc/iso.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

#include "wlcirc/errors.hpp"
#include "wlcirc/wl.hpp"

namespace wlcirc::iso {

namespace {

void bump(SearchStats* stats, const SearchLimits& limits) {
  if (stats && ++stats->nodes > limits.max_nodes)
    throw ResourceLimit("search node budget exceeded");
}

// ---------------------------------------------------------------------------
// plain graph backtracking (no WL): used by graph_isomorphisms and the oracle
// ---------------------------------------------------------------------------

/// Static vertex order maximizing arcs to already-placed vertices.
std::vector<int> constrained_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1, best_links = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int u : order) links += g.has_arc(v, u) + g.has_arc(u, v);
      int deg = g.out_degree(v) + g.in_degree(v);
      if (links > best_links || (links == best_links && best != -1 &&
                                 deg > g.out_degree(best) + g.in_degree(best))) {
        best = v;
        best_links = links;
      } else if (best == -1) {
        best = v;
        best_links = links;
      }
    }
    order.push_back(best);
    placed[best] = 1;
  }
  return order;
}

struct GraphBacktrack {
  const Graph& g;
  const Graph& h;
  const SearchLimits& limits;
  SearchStats* stats;
  bool find_first;
  std::vector<int> order;       // g-vertices in placement order
  Perm f;                       // g-vertex -> h-vertex, -1 unplaced
  std::uint64_t used = 0;       // h-vertices taken (n <= 64)
  std::vector<std::uint64_t> degree_mask;  // per g-vertex: h candidates by degree+loop
  std::vector<Perm> found;

  GraphBacktrack(const Graph& g, const Graph& h, const SearchLimits& limits, SearchStats* stats,
                 bool find_first)
      : g(g), h(h), limits(limits), stats(stats), find_first(find_first) {
    const int n = g.vertex_count();
    order = constrained_order(g);
    f.assign(n, -1);
    degree_mask.assign(n, 0);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (g.out_degree(u) == h.out_degree(v) && g.in_degree(u) == h.in_degree(v) &&
            g.has_arc(u, u) == h.has_arc(v, v))
          degree_mask[u] |= std::uint64_t{1} << v;
  }

  bool dfs(int depth) {
    bump(stats, limits);
    const int n = g.vertex_count();
    if (depth == n) {
      found.push_back(f);
      return find_first;
    }
    int gu = order[depth];
    std::uint64_t allowed = degree_mask[gu] & ~used;
    for (int i = 0; i < depth && allowed; ++i) {
      int gi = order[i], fi = f[gi];
      std::uint64_t into = h.in_row(fi)[0];   // c with arc c -> fi
      std::uint64_t from = h.out_row(fi)[0];  // c with arc fi -> c
      allowed &= g.has_arc(gu, gi) ? into : ~into;
      allowed &= g.has_arc(gi, gu) ? from : ~from;
    }
    while (allowed) {
      int v = __builtin_ctzll(allowed);
      allowed &= allowed - 1;
      f[gu] = v;
      used |= std::uint64_t{1} << v;
      if (dfs(depth + 1)) return true;
      used &= ~(std::uint64_t{1} << v);
      f[gu] = -1;
    }
    return false;
  }
};

bool degree_sequences_match(const Graph& g, const Graph& h) {
  auto seq = [](const Graph& x) {
    std::vector<std::pair<int, int>> d;
    for (int v = 0; v < x.vertex_count(); ++v) d.emplace_back(x.out_degree(v), x.in_degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  return seq(g) == seq(h);
}

// ---------------------------------------------------------------------------
// color-respecting individualization-refinement engine on pair tables
// ---------------------------------------------------------------------------

std::vector<int> individualize(const std::vector<int>& table, int n, int point) {
  std::vector<int> out(table.size());
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      std::size_t i = static_cast<std::size_t>(u) * n + v;
      out[i] = table[i] * 4 + (u == point ? 2 : 0) + (v == point ? 1 : 0);
    }
  return out;
}

struct TableIsoSearch {
  int n;
  const SearchLimits& limits;
  SearchStats* stats;
  bool enumerate;
  const std::function<void(const Perm&)>* callback = nullptr;
  std::optional<Perm> first;
  long long count = 0;

  /// Returns true when the search can stop (find-mode hit).
  bool step(const std::vector<int>& ta, const std::vector<int>& tb) {
    bump(stats, limits);
    auto ls = wl::lockstep_stabilize_pair_tables(n, ta, n, tb);
    if (!ls.match) return false;

    // group points by shared diagonal color
    std::map<int, std::pair<std::vector<int>, std::vector<int>>> fibers;
    for (int u = 0; u < n; ++u) {
      fibers[ls.table_a[static_cast<std::size_t>(u) * n + u]].first.push_back(u);
      fibers[ls.table_b[static_cast<std::size_t>(u) * n + u]].second.push_back(u);
    }
    int branch_color = -1;
    std::size_t branch_size = 0;
    for (auto& [color, fiber] : fibers) {
      if (fiber.first.size() != fiber.second.size()) return false;  // cannot happen post-match
      if (fiber.first.size() > 1 &&
          (branch_color == -1 || fiber.first.size() < branch_size)) {
        branch_color = color;
        branch_size = fiber.first.size();
      }
    }
    if (branch_color == -1) {
      // discrete fibers: the bijection is forced by diagonal colors
      Perm f(n, -1);
      for (auto& [color, fiber] : fibers) f[fiber.first[0]] = fiber.second[0];
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (ls.table_b[static_cast<std::size_t>(f[u]) * n + f[v]] !=
              ls.table_a[static_cast<std::size_t>(u) * n + v])
            throw InternalInvariantFailure("discrete lockstep tables disagree off-diagonal");
      ++count;
      if (enumerate) {
        if (callback) (*callback)(f);
        return false;
      }
      first = std::move(f);
      return true;
    }
    auto& fiber = fibers[branch_color];
    int u = fiber.first.front();
    std::vector<int> ia = individualize(ls.table_a, n, u);
    for (int v : fiber.second) {
      std::vector<int> ib = individualize(ls.table_b, n, v);
      if (step(ia, ib)) return true;
    }
    return false;
  }
};

std::pair<std::vector<int>, std::vector<int>> phi_paired_tables(const CoherentConfiguration& x,
                                                                const CoherentConfiguration& y,
                                                                const std::vector<int>& phi) {
  std::vector<int> inverse(phi.size(), -1);
  for (std::size_t r = 0; r < phi.size(); ++r) inverse[phi[r]] = static_cast<int>(r);
  std::vector<int> tb(y.table().size());
  for (std::size_t i = 0; i < tb.size(); ++i) tb[i] = inverse[y.table()[i]];
  return {x.table(), std::move(tb)};
}

// ---------------------------------------------------------------------------
// algebraic isomorphism helpers
// ---------------------------------------------------------------------------

bool constants_preserved(const CoherentConfiguration& x, const CoherentConfiguration& y,
                         const std::vector<int>& map) {
  if (x.constants().size() != y.constants().size()) return false;
  for (const auto& [r, s, t, c] : x.constants())
    if (y.constant(map[r], map[s], map[t]) != c) return false;
  return true;
}

/// Per-class invariant used to prune the algebraic-isomorphism search.
std::vector<std::vector<long long>> class_profiles(const CoherentConfiguration& x) {
  std::vector<std::vector<long long>> profile(x.rank());
  for (int r = 0; r < x.rank(); ++r) {
    profile[r].push_back(x.is_diagonal_class(r) ? 1 : 0);
    profile[r].push_back(x.transpose(r) == r ? 1 : 0);
    profile[r].push_back(x.valency(r));
    profile[r].push_back(x.valency(x.transpose(r)));
    profile[r].push_back(x.class_size(r));
    profile[r].push_back(x.fibers()[x.source_fiber(r)].size());
    profile[r].push_back(x.fibers()[x.target_fiber(r)].size());
  }
  // multiset of structure-constant values per slot occupied by the class
  std::vector<std::array<std::vector<long long>, 3>> occ(x.rank());
  for (const auto& [r, s, t, c] : x.constants()) {
    occ[r][0].push_back(c);
    occ[s][1].push_back(c);
    occ[t][2].push_back(c);
  }
  for (int r = 0; r < x.rank(); ++r)
    for (int slot = 0; slot < 3; ++slot) {
      auto& v = occ[r][slot];
      std::sort(v.begin(), v.end());
      profile[r].push_back(static_cast<long long>(v.size()));
      profile[r].insert(profile[r].end(), v.begin(), v.end());
    }
  return profile;
}

struct AlgIsoSearch {
  const CoherentConfiguration& x;
  const CoherentConfiguration& y;
  const SearchLimits& limits;
  SearchStats* stats;
  std::vector<std::vector<int>> candidates;  // per x-class
  std::vector<int> order;                    // assignment order
  std::vector<int> map;                      // x-class -> y-class or -1
  std::vector<char> used;                    // y-class taken
  std::vector<std::vector<std::array<int, 4>>> triples_by_class;  // x constants touching r
  std::vector<AlgebraicIso> results;

  AlgIsoSearch(const CoherentConfiguration& x, const CoherentConfiguration& y,
               const SearchLimits& limits, SearchStats* stats)
      : x(x), y(y), limits(limits), stats(stats) {
    map.assign(x.rank(), -1);
    used.assign(y.rank(), 0);
    auto px = class_profiles(x);
    auto py = class_profiles(y);
    candidates.resize(x.rank());
    for (int r = 0; r < x.rank(); ++r)
      for (int s = 0; s < y.rank(); ++s)
        if (px[r] == py[s]) candidates[r].push_back(s);
    order.resize(x.rank());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return candidates[a].size() < candidates[b].size();
    });
    triples_by_class.resize(x.rank());
    for (const auto& quad : x.constants()) {
      auto [r, s, t, c] = quad;
      triples_by_class[r].push_back(quad);
      if (s != r) triples_by_class[s].push_back(quad);
      if (t != r && t != s) triples_by_class[t].push_back(quad);
    }
  }

  bool partial_ok(int just_assigned) {
    for (const auto& [r, s, t, c] : triples_by_class[just_assigned]) {
      if (map[r] < 0 || map[s] < 0 || map[t] < 0) continue;
      if (y.constant(map[r], map[s], map[t]) != c) return false;
    }
    return true;
  }

  void assign(int r, int v, std::vector<std::pair<int, int>>& trail) {
    map[r] = v;
    used[v] = 1;
    trail.emplace_back(r, v);
  }

  void dfs(std::size_t depth) {
    bump(stats, limits);
    if (depth == order.size()) {
      auto iso = make_algebraic_iso(x, y, map);
      if (iso) results.push_back(std::move(*iso));
      return;
    }
    int r = order[depth];
    if (map[r] >= 0) {  // already forced through a transpose partner
      dfs(depth + 1);
      return;
    }
    for (int v : candidates[r]) {
      if (used[v]) continue;
      // transpose pairing must commute
      int rt = x.transpose(r), vt = y.transpose(v);
      std::vector<std::pair<int, int>> trail;
      bool ok = true;
      if (rt == r) {
        if (vt != v) continue;
        assign(r, v, trail);
      } else if (map[rt] >= 0) {
        if (map[rt] != vt) continue;
        assign(r, v, trail);
      } else {
        if (vt == v || used[vt] ||
            !std::binary_search(candidates[rt].begin(), candidates[rt].end(), vt)) {
          continue;
        }
        assign(r, v, trail);
        assign(rt, vt, trail);
      }
      for (auto& [ar, av] : trail)
        if (ok) ok = partial_ok(ar);
      if (ok) dfs(depth + 1);
      for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
        map[it->first] = -1;
        used[it->second] = 0;
      }
    }
  }
};

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Perm> graph_isomorphisms(const Graph& g, const Graph& h, const SearchLimits& limits,
                                     SearchStats* stats) {
  if (g.vertex_count() != h.vertex_count() || g.arc_count() != h.arc_count()) return {};
  if (g.vertex_count() > 64) throw ResourceLimit("graph_isomorphisms limited to n <= 64");
  SearchStats local;
  GraphBacktrack search(g, h, limits, stats ? stats : &local, /*find_first=*/false);
  search.dfs(0);
  std::sort(search.found.begin(), search.found.end());
  return std::move(search.found);
}

IsoCertificate oracle_isomorphic(const Graph& g, const Graph& h, const OracleOptions& opts) {
  SearchStats stats;
  if (g.vertex_count() > opts.max_n || h.vertex_count() > opts.max_n)
    return IsoCertificate::make_undecided(stats);
  if (g.vertex_count() != h.vertex_count() || g.arc_count() != h.arc_count() ||
      !degree_sequences_match(g, h))
    return IsoCertificate::make_non_isomorphic(stats);
  SearchLimits limits{opts.max_nodes};
  GraphBacktrack search(g, h, limits, &stats, /*find_first=*/true);
  try {
    if (search.dfs(0)) return IsoCertificate::make_isomorphic(g, h, search.found.front(), stats);
    return IsoCertificate::make_non_isomorphic(stats);
  } catch (const ResourceLimit&) {
    return IsoCertificate::make_undecided(stats);
  }
}

std::optional<Perm> find_table_iso(int na, const std::vector<int>& a, int nb,
                                   const std::vector<int>& b, const SearchLimits& limits,
                                   SearchStats* stats) {
  if (na != nb) return std::nullopt;
  TableIsoSearch search{na, limits, stats, /*enumerate=*/false};
  search.step(a, b);
  return search.first;
}

long long for_each_table_iso(int na, const std::vector<int>& a, int nb, const std::vector<int>& b,
                             const std::function<void(const Perm&)>& collect,
                             const SearchLimits& limits, SearchStats* stats) {
  if (na != nb) return 0;
  TableIsoSearch search{na, limits, stats, /*enumerate=*/true};
  search.callback = &collect;
  search.step(a, b);
  return search.count;
}

std::pair<std::vector<int>, std::vector<int>> paired_graph_tables(const Graph& g, const Graph& h) {
  auto table = [](const Graph& x) {
    const int n = x.vertex_count();
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        t[static_cast<std::size_t>(u) * n + v] = ((u == v) << 4) | (x.has_arc(u, v) << 3) |
                                                 (x.has_arc(v, u) << 2) | (x.has_arc(u, u) << 1) |
                                                 x.has_arc(v, v);
    return t;
  };
  return {table(g), table(h)};
}

PermGroup cc_automorphisms(const CoherentConfiguration& x, const SearchLimits& limits) {
  const int n = x.size();
  SearchStats stats;

  // stabilizer chain: individualize base points until all fibers are
  // singletons; level tables are the stabilized individualized colorings
  std::vector<std::vector<int>> level_tables;
  std::vector<int> base;
  std::vector<int> current = x.table();
  current = wl::stabilize_pair_table(n, std::move(current)).first;
  for (;;) {
    level_tables.push_back(current);
    // smallest fiber of size > 1, by (size, diagonal color)
    std::map<int, std::vector<int>> fibers;
    for (int u = 0; u < n; ++u) fibers[current[static_cast<std::size_t>(u) * n + u]].push_back(u);
    int pick = -1;
    std::size_t pick_size = 0;
    for (auto& [color, pts] : fibers)
      if (pts.size() > 1 && (pick == -1 || pts.size() < pick_size)) {
        pick = color;
        pick_size = pts.size();
      }
    if (pick == -1) break;
    int beta = fibers[pick].front();
    base.push_back(beta);
    current = wl::stabilize_pair_table(n, individualize(current, n, beta)).first;
  }

  const int k = static_cast<int>(base.size());
  std::vector<Perm> generators;
  unsigned __int128 order = 1;

  auto orbit_of = [&](int point, const std::vector<Perm>& gens) {
    std::vector<char> in_orbit(n, 0);
    std::vector<int> queue{point};
    in_orbit[point] = 1;
    while (!queue.empty()) {
      int p = queue.back();
      queue.pop_back();
      for (const Perm& g : gens)
        if (!in_orbit[g[p]]) {
          in_orbit[g[p]] = 1;
          queue.push_back(g[p]);
        }
    }
    return in_orbit;
  };

  for (int level = k - 1; level >= 0; --level) {
    const std::vector<int>& table = level_tables[level];
    int beta = base[level];
    // candidates: points sharing beta's diagonal color at this level
    std::vector<int> fiber;
    int diag = table[static_cast<std::size_t>(beta) * n + beta];
    for (int u = 0; u < n; ++u)
      if (table[static_cast<std::size_t>(u) * n + u] == diag) fiber.push_back(u);

    std::vector<int> ind_beta = individualize(table, n, beta);
    long long orbit_size = 1;
    for (int gamma : fiber) {
      if (gamma == beta) continue;
      auto in_orbit = orbit_of(beta, generators);
      if (in_orbit[gamma]) {
        ++orbit_size;
        continue;
      }
      auto f = find_table_iso(n, ind_beta, n, individualize(table, n, gamma), limits, &stats);
      if (f) {
        generators.push_back(std::move(*f));
        ++orbit_size;
      }
    }
    order *= static_cast<unsigned __int128>(orbit_size);
  }

  PermGroup group;
  group.degree = n;
  group.order = order;
  if (generators.empty()) generators.push_back(identity_perm(n));
  group.generators = std::move(generators);
  return group;
}

bool is_schurian(const CoherentConfiguration& x, const SearchLimits& limits) {
  PermGroup group = cc_automorphisms(x, limits);
  std::vector<int> orbits = group.pair_orbit_partition();
  // compare partitions (both canonically numbered by least pair)
  std::vector<int> table = x.table();
  if (orbits.size() != table.size()) return false;
  std::vector<int> to_color(orbits.size(), -1), to_orbit(x.rank(), -1);
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    int o = orbits[i], c = table[i];
    if (to_color[o] == -1) to_color[o] = c;
    if (to_orbit[c] == -1) to_orbit[c] = o;
    if (to_color[o] != c || to_orbit[c] != o) return false;
  }
  return true;
}

bool AlgebraicIso::is_identity() const {
  for (std::size_t r = 0; r < map.size(); ++r)
    if (map[r] != static_cast<int>(r)) return false;
  return source == target;
}

std::optional<AlgebraicIso> make_algebraic_iso(const CoherentConfiguration& src,
                                               const CoherentConfiguration& tgt,
                                               std::vector<int> map) {
  if (src.rank() != tgt.rank() || src.size() != tgt.size()) return std::nullopt;
  if (static_cast<int>(map.size()) != src.rank()) return std::nullopt;
  std::vector<char> hit(tgt.rank(), 0);
  for (int v : map) {
    if (v < 0 || v >= tgt.rank() || hit[v]) return std::nullopt;
    hit[v] = 1;
  }
  for (int r = 0; r < src.rank(); ++r) {
    if (src.is_diagonal_class(r) != tgt.is_diagonal_class(map[r])) return std::nullopt;
    if (map[src.transpose(r)] != tgt.transpose(map[r])) return std::nullopt;
  }
  if (!constants_preserved(src, tgt, map)) return std::nullopt;
  AlgebraicIso iso;
  iso.source = src;
  iso.target = tgt;
  iso.map = std::move(map);
  return iso;
}

AlgebraicIso identity_algebraic_iso(const CoherentConfiguration& x) {
  std::vector<int> map(x.rank());
  std::iota(map.begin(), map.end(), 0);
  auto iso = make_algebraic_iso(x, x, std::move(map));
  if (!iso) throw InternalInvariantFailure("identity map rejected as an algebraic isomorphism");
  return *std::move(iso);
}

std::vector<AlgebraicIso> algebraic_isos(const CoherentConfiguration& x,
                                         const CoherentConfiguration& y,
                                         const SearchLimits& limits) {
  if (x.rank() != y.rank() || x.size() != y.size()) return {};
  SearchStats stats;
  AlgIsoSearch search(x, y, limits, &stats);
  for (int r = 0; r < x.rank(); ++r)
    if (search.candidates[r].empty()) return {};
  search.dfs(0);
  std::sort(search.results.begin(), search.results.end(),
            [](const AlgebraicIso& a, const AlgebraicIso& b) { return a.map < b.map; });
  return std::move(search.results);
}

AlgebraicIso induced_algebraic_iso(const Perm& f, const CoherentConfiguration& x,
                                   const CoherentConfiguration& y) {
  if (static_cast<int>(f.size()) != x.size() || x.size() != y.size() || !is_permutation(f))
    throw InvalidInput("induced_algebraic_iso: f must be a bijection on the domain");
  std::vector<int> map(x.rank(), -1);
  for (int u = 0; u < x.size(); ++u)
    for (int v = 0; v < x.size(); ++v) {
      int r = x.color(u, v), s = y.color(f[u], f[v]);
      if (map[r] == -1)
        map[r] = s;
      else if (map[r] != s)
        throw InvalidInput("induced_algebraic_iso: f is not a combinatorial isomorphism");
    }
  auto iso = make_algebraic_iso(x, y, std::move(map));
  if (!iso)
    throw InternalInvariantFailure("combinatorial isomorphism induced a non-algebraic class map");
  return *std::move(iso);
}

std::optional<AlgebraicIso> extension_of(const AlgebraicIso& phi, int alpha, int alpha_prime) {
  const CoherentConfiguration& x = phi.source;
  const CoherentConfiguration& y = phi.target;
  if (alpha < 0 || alpha >= x.size() || alpha_prime < 0 || alpha_prime >= y.size())
    throw InvalidInput("extension_of: point out of range");
  int delta_diag = x.diagonal_color_of_fiber(x.fiber_of(alpha));
  int delta_image = phi.map[delta_diag];
  if (y.diagonal_color_of_fiber(y.fiber_of(alpha_prime)) != delta_image)
    throw InvalidInput("extension_of: fibers do not correspond under phi");

  auto [ta, tb] = phi_paired_tables(x, y, phi.map);
  ta = individualize(ta, x.size(), alpha);
  tb = individualize(tb, y.size(), alpha_prime);
  auto ls = wl::lockstep_stabilize_pair_tables(x.size(), std::move(ta), y.size(), std::move(tb));
  if (!ls.match) return std::nullopt;

  auto xa_result = CoherentConfiguration::validate(x.size(), ls.table_a);
  auto yb_result = CoherentConfiguration::validate(y.size(), ls.table_b);
  if (std::holds_alternative<cc::Violation>(xa_result) ||
      std::holds_alternative<cc::Violation>(yb_result))
    throw InternalInvariantFailure("stabilized point extension failed the axioms");
  auto xa = std::get<CoherentConfiguration>(std::move(xa_result));
  auto yb = std::get<CoherentConfiguration>(std::move(yb_result));

  // candidate class map from the shared ids
  std::vector<int> shared_to_a(ls.num_colors, -1), shared_to_b(ls.num_colors, -1);
  for (std::size_t i = 0; i < ls.table_a.size(); ++i) {
    shared_to_a[ls.table_a[i]] = xa.table()[i];
    shared_to_b[ls.table_b[i]] = yb.table()[i];
  }
  std::vector<int> psi(xa.rank(), -1);
  for (int c = 0; c < ls.num_colors; ++c)
    if (shared_to_a[c] != -1) {
      if (shared_to_b[c] == -1) return std::nullopt;
      psi[shared_to_a[c]] = shared_to_b[c];
    }

  auto iso = make_algebraic_iso(xa, yb, std::move(psi));
  if (!iso) return std::nullopt;

  // must extend phi ...
  std::vector<int> rep_y(yb.rank(), -1);
  for (int u = 0; u < y.size(); ++u)
    for (int v = 0; v < y.size(); ++v) rep_y[yb.color(u, v)] = y.color(u, v);
  for (int u = 0; u < x.size(); ++u)
    for (int v = 0; v < x.size(); ++v)
      if (rep_y[iso->map[xa.color(u, v)]] != phi.map[x.color(u, v)]) return std::nullopt;
  // ... and send 1_alpha to 1_alpha'
  if (iso->map[xa.color(alpha, alpha)] != yb.color(alpha_prime, alpha_prime)) return std::nullopt;
  return iso;
}

bool is_sesquiclosed_iso(const AlgebraicIso& phi) {
  const CoherentConfiguration& x = phi.source;
  const CoherentConfiguration& y = phi.target;
  for (int alpha = 0; alpha < x.size(); ++alpha) {
    int image_diag = phi.map[x.diagonal_color_of_fiber(x.fiber_of(alpha))];
    for (int alpha_prime = 0; alpha_prime < y.size(); ++alpha_prime) {
      if (y.diagonal_color_of_fiber(y.fiber_of(alpha_prime)) != image_diag) continue;
      if (!extension_of(phi, alpha, alpha_prime)) return false;
    }
  }
  return true;
}

bool is_sesquiclosed_cc(const CoherentConfiguration& x) {
  // (S1): the fibers of x_alpha are exactly the nonempty alpha s
  for (int alpha = 0; alpha < x.size(); ++alpha) {
    CoherentConfiguration ext = cc::point_extension(x, {alpha});
    std::vector<int> by_row(x.size()), by_fiber(x.size());
    for (int v = 0; v < x.size(); ++v) {
      by_row[v] = x.color(alpha, v);
      by_fiber[v] = ext.fiber_of(v);
    }
    std::vector<int> to_f(x.rank(), -1), to_r(ext.num_fibers(), -1);
    for (int v = 0; v < x.size(); ++v) {
      if (to_f[by_row[v]] == -1) to_f[by_row[v]] = by_fiber[v];
      if (to_r[by_fiber[v]] == -1) to_r[by_fiber[v]] = by_row[v];
      if (to_f[by_row[v]] != by_fiber[v] || to_r[by_fiber[v]] != by_row[v]) return false;
    }
  }
  // (S2)
  return is_sesquiclosed_iso(identity_algebraic_iso(x));
}

std::optional<Perm> find_iso_inducing(const CoherentConfiguration& x,
                                      const CoherentConfiguration& y, const AlgebraicIso& phi,
                                      const SearchLimits& limits, SearchStats* stats) {
  if (x.rank() != y.rank() || x.size() != y.size()) return std::nullopt;
  auto [ta, tb] = phi_paired_tables(x, y, phi.map);
  return find_table_iso(x.size(), ta, y.size(), tb, limits, stats);
}

RealizationReport separable_wrt(const CoherentConfiguration& x, const CoherentConfiguration& y,
                                const std::vector<AlgebraicIso>& phis, const SearchLimits& limits) {
  RealizationReport report;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    if (find_iso_inducing(x, y, phis[i], limits))
      report.realized.push_back(i);
    else
      report.unrealized.push_back(i);
  }
  return report;
}

RealizationReport sesquiseparable_wrt(const CoherentConfiguration& x,
                                      const CoherentConfiguration& y,
                                      const std::vector<AlgebraicIso>& phis,
                                      const SearchLimits& limits) {
  RealizationReport report;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    if (!is_sesquiclosed_iso(phis[i])) {
      report.skipped.push_back(i);
      continue;
    }
    if (find_iso_inducing(x, y, phis[i], limits))
      report.realized.push_back(i);
    else
      report.unrealized.push_back(i);
  }
  return report;
}

IsoCertificate IsoCertificate::make_isomorphic(const Graph& g, const Graph& h, Perm witness,
                                               SearchStats stats) {
  if (static_cast<int>(witness.size()) != g.vertex_count() || !is_permutation(witness) ||
      g.vertex_count() != h.vertex_count())
    throw InvalidInput("certificate witness is not a bijection on the vertex set");
  if (g.arc_count() != h.arc_count())
    throw InvalidInput("certificate witness cannot map arcs bijectively");
  for (const auto& [u, v] : g.arcs())
    if (!h.has_arc(witness[u], witness[v]))
      throw InvalidInput("certificate witness does not map arcs onto arcs");
  IsoCertificate cert;
  cert.verdict = Verdict::isomorphic;
  cert.witness = std::move(witness);
  cert.stats = stats;
  return cert;
}

IsoCertificate IsoCertificate::make_non_isomorphic(SearchStats stats,
                                                   std::optional<Distinguisher> d) {
  IsoCertificate cert;
  cert.verdict = Verdict::non_isomorphic;
  cert.distinguisher = std::move(d);
  cert.stats = stats;
  return cert;
}

IsoCertificate IsoCertificate::make_undecided(SearchStats stats) {
  IsoCertificate cert;
  cert.verdict = Verdict::undecided;
  cert.stats = stats;
  return cert;
}

}  // namespace wlcirc::iso
