#include "wlcirc/cc.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "wlcirc/errors.hpp"

namespace wlcirc::cc {

namespace {

int canonicalize_table(std::vector<int>& table) {
  std::unordered_map<int, int> remap;
  int next = 0;
  for (int& c : table) {
    auto [it, fresh] = remap.emplace(c, next);
    if (fresh) ++next;
    c = it->second;
  }
  return next;
}

std::vector<int> canonical_blocks(std::vector<int> block_of) {
  // labels may be arbitrary ints (e.g. block labels surviving a restriction)
  std::unordered_map<int, int> remap;
  int next = 0;
  for (int& b : block_of) {
    auto [it, fresh] = remap.emplace(b, next);
    if (fresh) ++next;
    b = it->second;
  }
  return block_of;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::optional<Parabolic> parabolic_from_blocks(const CoherentConfiguration& x,
                                               std::vector<int> block_of) {
  const int n = x.size();
  std::vector<char> inside(x.rank(), 0), outside(x.rank(), 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (block_of[u] == block_of[v])
        inside[x.color(u, v)] = 1;
      else
        outside[x.color(u, v)] = 1;
    }
  Parabolic e;
  e.n = n;
  e.block_of = canonical_blocks(std::move(block_of));
  e.num_blocks = *std::max_element(e.block_of.begin(), e.block_of.end()) + 1;
  for (int r = 0; r < x.rank(); ++r) {
    if (inside[r] && outside[r]) return std::nullopt;
    if (inside[r]) e.relation_colors.push_back(r);
  }
  return e;
}

void CoherentConfiguration::populate(int n, std::vector<int> table) {
  n_ = n;
  table_ = std::move(table);
  rank_ = *std::max_element(table_.begin(), table_.end()) + 1;

  class_size_.assign(rank_, 0);
  for (int c : table_) ++class_size_[c];

  transpose_.assign(rank_, -1);
  diagonal_class_.assign(rank_, 0);
  for (int u = 0; u < n_; ++u) {
    diagonal_class_[color(u, u)] = 1;
    for (int v = 0; v < n_; ++v) transpose_[color(u, v)] = color(v, u);
  }

  // fibers from diagonal colors, numbered by least point
  fiber_of_point_.assign(n_, -1);
  std::unordered_map<int, int> fiber_of_diag;
  for (int u = 0; u < n_; ++u) {
    auto [it, fresh] = fiber_of_diag.emplace(color(u, u), static_cast<int>(fibers_.size()));
    if (fresh) fibers_.emplace_back();
    fiber_of_point_[u] = it->second;
    fibers_[it->second].push_back(u);
  }
  diag_color_.assign(fibers_.size(), -1);
  for (auto& [diag, fi] : fiber_of_diag) diag_color_[fi] = diag;

  source_fiber_.assign(rank_, -1);
  target_fiber_.assign(rank_, -1);
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v) {
      int r = color(u, v);
      source_fiber_[r] = fiber_of_point_[u];
      target_fiber_[r] = fiber_of_point_[v];
    }

  valency_.assign(rank_, 0);
  std::vector<char> seen(rank_, 0);
  for (int r = 0; r < rank_; ++r) {
    int alpha = fibers_[source_fiber_[r]].front();
    int count = 0;
    for (int v = 0; v < n_; ++v)
      if (color(alpha, v) == r) ++count;
    valency_[r] = count;
    (void)seen;
  }

  // structure constants from one representative pair per class
  std::vector<std::pair<int, int>> rep(rank_, {-1, -1});
  for (int u = n_ - 1; u >= 0; --u)
    for (int v = n_ - 1; v >= 0; --v) rep[color(u, v)] = {u, v};
  std::map<std::pair<int, std::pair<int, int>>, int> accum;  // ((t,(r,s)) -> c)
  for (int t = 0; t < rank_; ++t) {
    auto [a, b] = rep[t];
    for (int g = 0; g < n_; ++g) ++accum[{t, {color(a, g), color(g, b)}}];
  }
  constants_.reserve(accum.size());
  for (auto& [key, c] : accum)
    constants_.push_back({key.second.first, key.second.second, key.first, c});
  std::sort(constants_.begin(), constants_.end());
}

int CoherentConfiguration::constant(int r, int s, int t) const {
  std::array<int, 4> probe{r, s, t, 0};
  auto it = std::lower_bound(constants_.begin(), constants_.end(), probe,
                             [](const std::array<int, 4>& a, const std::array<int, 4>& b) {
                               return std::tie(a[0], a[1], a[2]) < std::tie(b[0], b[1], b[2]);
                             });
  if (it != constants_.end() && (*it)[0] == r && (*it)[1] == s && (*it)[2] == t) return (*it)[3];
  return 0;
}

bool CoherentConfiguration::is_commutative() const {
  for (const auto& [r, s, t, c] : constants_)
    if (constant(s, r, t) != c) return false;
  return true;
}

std::variant<CoherentConfiguration, Violation> CoherentConfiguration::validate(
    int n, std::vector<int> table) {
  if (n <= 0) return Violation{"partition", "domain must be nonempty", {}};
  if (table.size() != static_cast<std::size_t>(n) * n)
    return Violation{"partition", "table must have n*n entries", {}};
  canonicalize_table(table);
  auto color = [&](int u, int v) { return table[static_cast<std::size_t>(u) * n + v]; };
  int rank = *std::max_element(table.begin(), table.end()) + 1;

  // C1: the diagonal is a union of classes
  std::vector<char> on_diag(rank, 0), off_diag(rank, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) (u == v ? on_diag : off_diag)[color(u, v)] = 1;
  for (int r = 0; r < rank; ++r)
    if (on_diag[r] && off_diag[r]) {
      int du = -1, ou = -1, ov = -1;
      for (int u = 0; u < n && (du < 0 || ou < 0); ++u)
        for (int v = 0; v < n; ++v)
          if (color(u, v) == r) {
            if (u == v && du < 0) du = u;
            if (u != v && ou < 0) ou = u, ov = v;
          }
      return Violation{"C1", "class mixes diagonal and off-diagonal pairs", {r, du, ou, ov}};
    }

  // C2: the class of (v,u) depends only on the class of (u,v)
  std::vector<int> trans(rank, -1);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int r = color(u, v), rt = color(v, u);
      if (trans[r] == -1)
        trans[r] = rt;
      else if (trans[r] != rt)
        return Violation{"C2", "transpose color is not class-constant", {r, trans[r], rt, u, v}};
    }

  // C3: |alpha r  meet  beta s*| constant over (alpha,beta) in t
  std::vector<std::pair<int, int>> rep(rank, {-1, -1});
  for (int u = n - 1; u >= 0; --u)
    for (int v = n - 1; v >= 0; --v) rep[color(u, v)] = {u, v};
  std::vector<std::unordered_map<long long, int>> expected(rank);
  for (int t = 0; t < rank; ++t) {
    auto [a, b] = rep[t];
    for (int g = 0; g < n; ++g)
      ++expected[t][static_cast<long long>(color(a, g)) * rank + color(g, b)];
  }
  std::unordered_map<long long, int> counts;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int t = color(a, b);
      counts.clear();
      for (int g = 0; g < n; ++g) ++counts[static_cast<long long>(color(a, g)) * rank + color(g, b)];
      if (counts != expected[t]) {
        // find a differing (r,s)
        for (auto& [key, c] : expected[t]) {
          auto it = counts.find(key);
          int got = it == counts.end() ? 0 : it->second;
          if (got != c) {
            int r = static_cast<int>(key / rank), s = static_cast<int>(key % rank);
            return Violation{"C3", "intersection number varies within a class", {r, s, t, a, b, c, got}};
          }
        }
        for (auto& [key, c] : counts) {
          if (!expected[t].count(key)) {
            int r = static_cast<int>(key / rank), s = static_cast<int>(key % rank);
            return Violation{"C3", "intersection number varies within a class", {r, s, t, a, b, 0, c}};
          }
        }
      }
    }

  CoherentConfiguration x;
  x.populate(n, std::move(table));
  return x;
}

CoherentConfiguration CoherentConfiguration::from_table(int n, std::vector<int> table) {
  auto result = validate(n, std::move(table));
  if (auto* v = std::get_if<Violation>(&result)) {
    std::ostringstream os;
    os << "not a coherent configuration: axiom " << v->axiom << ": " << v->detail;
    throw InvalidInput(os.str());
  }
  return std::get<CoherentConfiguration>(std::move(result));
}

CoherentConfiguration cc_of_graph(const Graph& g, const wl::WlOptions& opts) {
  wl::TupleColoring c = wl::stable_coloring(g, 2, opts);
  auto result = CoherentConfiguration::validate(g.vertex_count(), std::move(c.color_of));
  if (std::holds_alternative<Violation>(result))
    throw InternalInvariantFailure("2-WL stable partition failed the configuration axioms");
  return std::get<CoherentConfiguration>(std::move(result));
}

bool refines(const CoherentConfiguration& x, const CoherentConfiguration& y) {
  if (x.size() != y.size()) throw InvalidInput("refines: domain sizes differ");
  const int n = x.size();
  std::vector<int> image(y.rank(), -1);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int& img = image[y.color(u, v)];
      if (img == -1)
        img = x.color(u, v);
      else if (img != x.color(u, v))
        return false;
    }
  return true;
}

bool is_parabolic_of(const CoherentConfiguration& x, const Parabolic& e) {
  if (e.n != x.size()) return false;
  if (e.block_of.size() != static_cast<std::size_t>(x.size())) return false;
  auto built = parabolic_from_blocks(x, e.block_of);
  if (!built) return false;
  return built->relation_colors == e.relation_colors &&
         canonical_blocks(e.block_of) == built->block_of;
}

Parabolic parabolic_closure(const CoherentConfiguration& x, const std::vector<int>& colors) {
  const int n = x.size();
  std::vector<char> in_s(x.rank(), 0);
  for (int c : colors) {
    if (c < 0 || c >= x.rank()) throw InvalidInput("parabolic_closure: color out of range");
    in_s[c] = 1;
  }
  UnionFind uf(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (in_s[x.color(u, v)]) uf.unite(u, v);
  std::vector<int> block_of(n);
  for (int u = 0; u < n; ++u) block_of[u] = uf.find(u);
  auto e = parabolic_from_blocks(x, std::move(block_of));
  if (!e)
    throw InvalidInput("parabolic_closure: the equivalence closure is not a relation of the configuration");
  return *std::move(e);
}

Parabolic radical(const CoherentConfiguration& x, const std::vector<int>& colors) {
  const int n = x.size();
  std::vector<char> in_s(x.rank(), 0);
  for (int c : colors) {
    if (c < 0 || c >= x.rank()) throw InvalidInput("radical: color out of range");
    in_s[c] = 1;
  }
  // candidate: alpha ~ beta iff alpha s = beta s and alpha s* = beta s*
  std::vector<std::vector<char>> row(n, std::vector<char>(2 * n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (in_s[x.color(u, v)]) {
        row[u][v] = 1;           // v in u s
        row[v][n + u] = 1;       // u in v s*
      }
  std::map<std::vector<char>, int> sig;
  std::vector<int> block_of(n);
  for (int u = 0; u < n; ++u) block_of[u] = sig.emplace(row[u], static_cast<int>(sig.size())).first->second;

  // block-check: s must be the union of full blocks Delta x Delta'
  const int nb = static_cast<int>(sig.size());
  std::vector<long long> hits(static_cast<std::size_t>(nb) * nb, 0), size(nb, 0);
  for (int u = 0; u < n; ++u) ++size[block_of[u]];
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (in_s[x.color(u, v)]) ++hits[static_cast<std::size_t>(block_of[u]) * nb + block_of[v]];
  for (int a = 0; a < nb; ++a)
    for (int b = 0; b < nb; ++b) {
      long long h = hits[static_cast<std::size_t>(a) * nb + b];
      if (h != 0 && h != size[a] * size[b])
        throw InternalInvariantFailure("radical: candidate equivalence fails the block property");
    }

  auto e = parabolic_from_blocks(x, std::move(block_of));
  if (!e)
    throw InternalInvariantFailure("radical: candidate equivalence is not a relation of the configuration");
  return *std::move(e);
}

std::vector<Parabolic> all_parabolics(const CoherentConfiguration& x) {
  const int n = x.size();
  auto key = [](const Parabolic& e) { return e.block_of; };
  std::map<std::vector<int>, Parabolic> found;

  // diagonal equivalence
  {
    std::vector<int> singletons(n);
    std::iota(singletons.begin(), singletons.end(), 0);
    auto e = parabolic_from_blocks(x, singletons);
    if (!e) throw InternalInvariantFailure("diagonal is not a relation");  // C1 guarantees it
    found.emplace(key(*e), *e);
  }
  std::vector<Parabolic> work;
  for (int r = 0; r < x.rank(); ++r) {
    Parabolic e = parabolic_closure(x, {r});
    if (found.emplace(key(e), e).second) work.push_back(e);
  }
  // close under join and meet
  while (!work.empty()) {
    Parabolic e = std::move(work.back());
    work.pop_back();
    std::vector<Parabolic> snapshot;
    snapshot.reserve(found.size());
    for (auto& [k, v] : found) snapshot.push_back(v);
    for (const Parabolic& f : snapshot) {
      // join: closure of the union of the two relations
      std::vector<int> both = e.relation_colors;
      both.insert(both.end(), f.relation_colors.begin(), f.relation_colors.end());
      Parabolic j = parabolic_closure(x, both);
      if (found.emplace(key(j), j).second) work.push_back(j);
      // meet: common refinement of blocks; colors are the shared ones
      std::vector<int> meet_blocks(n);
      std::map<std::pair<int, int>, int> pairs;
      for (int u = 0; u < n; ++u)
        meet_blocks[u] =
            pairs.emplace(std::make_pair(e.block_of[u], f.block_of[u]), static_cast<int>(pairs.size()))
                .first->second;
      auto m = parabolic_from_blocks(x, std::move(meet_blocks));
      if (!m) throw InternalInvariantFailure("meet of parabolics is not a relation");
      if (found.emplace(key(*m), *m).second) work.push_back(*m);
    }
  }
  std::vector<Parabolic> out;
  out.reserve(found.size());
  for (auto& [k, v] : found) out.push_back(v);
  std::sort(out.begin(), out.end(), [](const Parabolic& a, const Parabolic& b) {
    if (a.num_blocks != b.num_blocks) return a.num_blocks > b.num_blocks;
    return a.block_of < b.block_of;
  });
  return out;
}

std::vector<Parabolic> all_parabolics_exhaustive(const CoherentConfiguration& x) {
  if (x.rank() > 20) throw ResourceLimit("exhaustive parabolic scan limited to rank <= 20");
  // group non-diagonal classes into transpose orbits; a parabolic is a union
  // of all diagonal classes plus transpose-closed unions of the rest
  std::vector<int> diag, orbit_rep;
  std::vector<char> seen(x.rank(), 0);
  for (int r = 0; r < x.rank(); ++r) {
    if (x.is_diagonal_class(r)) {
      diag.push_back(r);
      seen[r] = 1;
    }
  }
  for (int r = 0; r < x.rank(); ++r)
    if (!seen[r]) {
      orbit_rep.push_back(r);
      seen[r] = 1;
      seen[x.transpose(r)] = 1;
    }
  const int k = static_cast<int>(orbit_rep.size());
  std::map<std::vector<int>, Parabolic> found;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> colors = diag;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) {
        colors.push_back(orbit_rep[i]);
        if (x.transpose(orbit_rep[i]) != orbit_rep[i]) colors.push_back(x.transpose(orbit_rep[i]));
      }
    std::sort(colors.begin(), colors.end());
    // equivalence test: union-find blocks, then the relation must cover blocks
    UnionFind uf(x.size());
    std::vector<char> in_s(x.rank(), 0);
    for (int c : colors) in_s[c] = 1;
    for (int u = 0; u < x.size(); ++u)
      for (int v = 0; v < x.size(); ++v)
        if (in_s[x.color(u, v)]) uf.unite(u, v);
    bool ok = true;
    for (int u = 0; u < x.size() && ok; ++u)
      for (int v = 0; v < x.size(); ++v) {
        bool same = uf.find(u) == uf.find(v);
        if (same != static_cast<bool>(in_s[x.color(u, v)])) {
          ok = false;
          break;
        }
      }
    if (!ok) continue;
    std::vector<int> block_of(x.size());
    for (int u = 0; u < x.size(); ++u) block_of[u] = uf.find(u);
    Parabolic e;
    e.n = x.size();
    e.block_of = canonical_blocks(std::move(block_of));
    e.num_blocks = *std::max_element(e.block_of.begin(), e.block_of.end()) + 1;
    e.relation_colors = colors;
    found.emplace(e.block_of, e);
  }
  std::vector<Parabolic> out;
  for (auto& [kk, v] : found) out.push_back(v);
  std::sort(out.begin(), out.end(), [](const Parabolic& a, const Parabolic& b) {
    if (a.num_blocks != b.num_blocks) return a.num_blocks > b.num_blocks;
    return a.block_of < b.block_of;
  });
  return out;
}

CoherentConfiguration quotient(const CoherentConfiguration& x, const Parabolic& e) {
  if (!is_parabolic_of(x, e)) throw InvalidInput("quotient: e is not a parabolic of x");
  const int m = e.num_blocks;
  std::vector<std::vector<int>> members(m);
  for (int u = 0; u < x.size(); ++u) members[e.block_of[u]].push_back(u);
  std::map<std::vector<int>, int> classes;
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  std::vector<char> present(x.rank());
  for (int B = 0; B < m; ++B)
    for (int C = 0; C < m; ++C) {
      std::fill(present.begin(), present.end(), 0);
      for (int u : members[B])
        for (int v : members[C]) present[x.color(u, v)] = 1;
      std::vector<int> sig;
      for (int r = 0; r < x.rank(); ++r)
        if (present[r]) sig.push_back(r);
      table[static_cast<std::size_t>(B) * m + C] =
          classes.emplace(std::move(sig), static_cast<int>(classes.size())).first->second;
    }
  return CoherentConfiguration::from_table(m, std::move(table));
}

CoherentConfiguration restriction(const CoherentConfiguration& x, const Parabolic& e, int block) {
  if (!is_parabolic_of(x, e)) throw InvalidInput("restriction: e is not a parabolic of x");
  if (block < 0 || block >= e.num_blocks) throw InvalidInput("restriction: bad block index");
  std::vector<int> delta;
  for (int u = 0; u < x.size(); ++u)
    if (e.block_of[u] == block) delta.push_back(u);
  const int m = static_cast<int>(delta.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[static_cast<std::size_t>(i) * m + j] = x.color(delta[i], delta[j]);
  return CoherentConfiguration::from_table(m, std::move(table));
}

namespace {

/// Delta is a class of some parabolic iff it is a block of the closure of
/// all basis relations meeting Delta x Delta (that closure is the smallest
/// parabolic with Delta inside one block, and any parabolic having Delta as
/// a class contains it).
bool is_parabolic_class(const CoherentConfiguration& x, const std::vector<int>& d) {
  std::vector<char> in_delta(x.size(), 0);
  for (int u : d) in_delta[u] = 1;
  std::vector<char> meets(x.rank(), 0);
  for (int u : d)
    for (int v : d) meets[x.color(u, v)] = 1;
  std::vector<int> colors;
  for (int r = 0; r < x.rank(); ++r)
    if (meets[r]) colors.push_back(r);
  Parabolic g;
  try {
    g = parabolic_closure(x, colors);
  } catch (const InvalidInput&) {
    return false;
  }
  int b = g.block_of[d.front()];
  for (int u = 0; u < x.size(); ++u)
    if ((g.block_of[u] == b) != static_cast<bool>(in_delta[u])) return false;
  return true;
}

CoherentConfiguration restrict_unchecked(const CoherentConfiguration& x,
                                         const std::vector<int>& d) {
  const int m = static_cast<int>(d.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[static_cast<std::size_t>(i) * m + j] = x.color(d[i], d[j]);
  return CoherentConfiguration::from_table(m, std::move(table));
}

}  // namespace

CoherentConfiguration restriction(const CoherentConfiguration& x, const std::vector<int>& delta) {
  std::vector<int> d = delta;
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  if (d.empty() || d.front() < 0 || d.back() >= x.size())
    throw InvalidInput("restriction: points out of range");
  if (!is_parabolic_class(x, d))
    throw InvalidInput("restriction: delta is not a class of any parabolic");
  return restrict_unchecked(x, d);
}

CoherentConfiguration section(const CoherentConfiguration& x, const std::vector<int>& delta,
                              const Parabolic& e) {
  if (!is_parabolic_of(x, e)) throw InvalidInput("section: e is not a parabolic of x");
  std::vector<int> d = delta;
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  std::vector<char> in_delta(x.size(), 0);
  for (int u : d) {
    if (u < 0 || u >= x.size()) throw InvalidInput("section: points out of range");
    in_delta[u] = 1;
  }
  // e must not cross the boundary of delta
  for (int u = 0; u < x.size(); ++u)
    for (int v = 0; v < x.size(); ++v)
      if (e.block_of[u] == e.block_of[v] && in_delta[u] != in_delta[v])
        throw InvalidInput("section: e is not contained in a parabolic having delta as a class");
  if (!is_parabolic_class(x, d))
    throw InvalidInput("section: delta is not a class of any parabolic");

  CoherentConfiguration r = restrict_unchecked(x, d);
  std::vector<int> blocks(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) blocks[i] = e.block_of[d[i]];
  auto e_delta = parabolic_from_blocks(r, canonical_blocks(std::move(blocks)));
  if (!e_delta)
    throw InternalInvariantFailure("section: restricted equivalence is not a relation of the restriction");
  return quotient(r, *e_delta);
}

CoherentConfiguration point_extension(const CoherentConfiguration& x, const std::vector<int>& points) {
  const int n = x.size();
  std::vector<int> idx(n, 0);
  int next = 1;
  for (int p : points) {
    if (p < 0 || p >= n) throw InvalidInput("point_extension: point out of range");
    if (idx[p] == 0) idx[p] = next++;
  }
  std::vector<long long> keys(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      keys[static_cast<std::size_t>(u) * n + v] =
          (static_cast<long long>(x.color(u, v)) * next + idx[u]) * next + idx[v];
  std::vector<long long> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> table(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    table[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
  auto [stable, rounds] = wl::stabilize_pair_table(n, std::move(table));
  return CoherentConfiguration::from_table(n, std::move(stable));
}

std::optional<int> partly_regular_point(const CoherentConfiguration& x) {
  std::vector<char> seen(x.rank());
  for (int alpha = 0; alpha < x.size(); ++alpha) {
    std::fill(seen.begin(), seen.end(), 0);
    bool ok = true;
    for (int v = 0; v < x.size(); ++v) {
      int r = x.color(alpha, v);
      if (seen[r]) {
        ok = false;
        break;
      }
      seen[r] = 1;
    }
    if (ok) return alpha;
  }
  return std::nullopt;
}

CoherentConfiguration meet(const CoherentConfiguration& x, const CoherentConfiguration& y) {
  if (x.size() != y.size()) throw InvalidInput("meet: domain sizes differ");
  const int n = x.size();
  UnionFind uf(x.rank() + y.rank());
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) uf.unite(x.color(u, v), x.rank() + y.color(u, v));
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      table[static_cast<std::size_t>(u) * n + v] = uf.find(x.color(u, v));
  auto result = CoherentConfiguration::validate(n, std::move(table));
  if (std::holds_alternative<Violation>(result))
    throw InternalInvariantFailure("meet of coherent configurations failed the axioms");
  return std::get<CoherentConfiguration>(std::move(result));
}

}  // namespace wlcirc::cc
