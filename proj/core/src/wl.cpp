#include "wlcirc/wl.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>

#include "wlcirc/errors.hpp"

namespace wlcirc::wl {

namespace {

std::size_t checked_pow(int n, int m, std::size_t cap) {
  std::size_t r = 1;
  for (int i = 0; i < m; ++i) {
    if (r > cap / static_cast<std::size_t>(n))
      throw ResourceLimit("tuple space n^m exceeds the configured cap");
    r *= static_cast<std::size_t>(n);
  }
  return r;
}

int bits_for(int num_colors) {
  int bits = 1;
  while ((1u << bits) < static_cast<unsigned>(num_colors)) ++bits;
  return bits;
}

/// Renumbers arbitrary dense ids canonically: classes get consecutive ids in
/// order of first appearance, i.e. ordered by their least tuple.
int canonicalize(std::vector<int>& colors, int num_colors) {
  std::vector<int> remap(num_colors, -1);
  int next = 0;
  for (int& c : colors) {
    if (remap[c] == -1) remap[c] = next++;
    c = remap[c];
  }
  return next;
}

/// Equality-pattern id of a tuple: first-occurrence labels packed base m.
int rho_key(const int* x, int m) {
  int key = 0;
  for (int i = 0; i < m; ++i) {
    int label = i;
    for (int j = 0; j < i; ++j)
      if (x[j] == x[i]) {
        label = j;
        break;
      }
    key = key * m + label;
  }
  return key;
}

/// Absolute initial key: equality pattern and arc pattern over M x M.
std::uint64_t initial_key(const Graph& g, const int* x, int m) {
  std::uint64_t arcs = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (g.has_arc(x[i], x[j])) arcs |= std::uint64_t{1} << (i * m + j);
  return (static_cast<std::uint64_t>(rho_key(x, m)) << (m * m)) | arcs;
}

void advance_odometer(int* x, int m, int n) {
  for (int i = m - 1; i >= 0; --i) {
    if (++x[i] < n) break;
    x[i] = 0;
  }
}

/// Assigns initial colors for a pool of same-order graphs with a shared key
/// space; returns the number of colors. Ids are ordered by key value, hence
/// identical across pool members and across runs.
int pooled_initial(const std::vector<const Graph*>& graphs, int m,
                   std::vector<std::vector<int>>& out) {
  const int n = graphs[0]->vertex_count();
  std::size_t N = 1;
  for (int i = 0; i < m; ++i) N *= static_cast<std::size_t>(n);
  std::vector<std::uint64_t> keys;
  out.assign(graphs.size(), {});
  std::vector<std::vector<std::uint64_t>> raw(graphs.size());
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    raw[gi].resize(N);
    std::array<int, 16> x{};
    std::fill(x.begin(), x.begin() + m, 0);
    for (std::size_t t = 0; t < N; ++t) {
      raw[gi][t] = initial_key(*graphs[gi], x.data(), m);
      advance_odometer(x.data(), m, n);
    }
    keys.insert(keys.end(), raw[gi].begin(), raw[gi].end());
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    out[gi].resize(N);
    for (std::size_t t = 0; t < N; ++t)
      out[gi][t] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), raw[gi][t]) -
                                    keys.begin());
  }
  return static_cast<int>(keys.size());
}

/// One refinement round (m >= 2) over a pool of colorings sharing one
/// dictionary. New ids are ordered by signature value.
template <typename P>
int round_pooled_impl(int n, int m, std::vector<std::vector<int>>& cols, int num_colors) {
  const std::size_t G = cols.size();
  const std::size_t N = cols[0].size();
  const int shift = bits_for(num_colors);
  const std::size_t row_len = static_cast<std::size_t>(n) + 1;

  std::vector<std::size_t> pows(m);
  pows[m - 1] = 1;
  for (int i = m - 2; i >= 0; --i) pows[i] = pows[i + 1] * static_cast<std::size_t>(n);

  std::vector<P> rows(G * N * row_len);
  std::array<int, 16> x{};
  std::array<std::size_t, 16> base{};
  for (std::size_t gi = 0; gi < G; ++gi) {
    const int* col = cols[gi].data();
    std::fill(x.begin(), x.begin() + m, 0);
    for (std::size_t t = 0; t < N; ++t) {
      P* row = rows.data() + (gi * N + t) * row_len;
      row[0] = static_cast<P>(col[t]);
      for (int i = 0; i < m; ++i) base[i] = t - static_cast<std::size_t>(x[i]) * pows[i];
      P* buf = row + 1;
      for (int a = 0; a < n; ++a) {
        P packed = 0;
        for (int i = 0; i < m; ++i)
          packed = (packed << shift) | static_cast<P>(col[base[i] + static_cast<std::size_t>(a) * pows[i]]);
        buf[a] = packed;
      }
      std::sort(buf, buf + n);
      advance_odometer(x.data(), m, n);
    }
  }

  std::vector<std::uint32_t> order(G * N);
  std::iota(order.begin(), order.end(), 0u);
  const P* rowbase = rows.data();
  std::sort(order.begin(), order.end(), [rowbase, row_len](std::uint32_t a, std::uint32_t b) {
    const P* ra = rowbase + a * row_len;
    const P* rb = rowbase + b * row_len;
    for (std::size_t i = 0; i < row_len; ++i) {
      if (ra[i] != rb[i]) return ra[i] < rb[i];
    }
    return false;
  });

  int next = 0;
  std::vector<int> newid(G * N);
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0) {
      const P* ra = rowbase + order[k - 1] * row_len;
      const P* rb = rowbase + order[k] * row_len;
      if (!std::equal(ra, ra + row_len, rb)) ++next;
    }
    newid[order[k]] = next;
  }
  ++next;
  for (std::size_t gi = 0; gi < G; ++gi)
    for (std::size_t t = 0; t < N; ++t) cols[gi][t] = newid[gi * N + t];
  return next;
}

/// Classical refinement round for m = 1: signature is the old color plus the
/// multisets of out- and in-neighbor colors.
int round_pooled_m1(const std::vector<const Graph*>& graphs, std::vector<std::vector<int>>& cols,
                    int /*num_colors*/) {
  struct Row {
    std::vector<std::uint64_t> sig;
    std::uint32_t idx;
  };
  std::size_t total = 0;
  for (auto& c : cols) total += c.size();
  std::vector<Row> rows;
  rows.reserve(total);
  std::uint32_t running = 0;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Graph& g = *graphs[gi];
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
      Row row;
      row.idx = running++;
      row.sig.push_back(static_cast<std::uint64_t>(cols[gi][v]));
      std::vector<std::uint64_t> nb;
      for (int w = 0; w < n; ++w)
        if (g.has_arc(v, w)) nb.push_back(static_cast<std::uint64_t>(cols[gi][w]) << 1);
      for (int w = 0; w < n; ++w)
        if (g.has_arc(w, v)) nb.push_back((static_cast<std::uint64_t>(cols[gi][w]) << 1) | 1);
      std::sort(nb.begin(), nb.end());
      row.sig.insert(row.sig.end(), nb.begin(), nb.end());
      rows.push_back(std::move(row));
    }
  }
  std::vector<std::uint32_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&rows](std::uint32_t a, std::uint32_t b) { return rows[a].sig < rows[b].sig; });
  int next = 0;
  std::vector<int> newid(rows.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && rows[order[k - 1]].sig != rows[order[k]].sig) ++next;
    newid[order[k]] = next;
  }
  ++next;
  std::size_t at = 0;
  for (std::size_t gi = 0; gi < cols.size(); ++gi)
    for (std::size_t v = 0; v < cols[gi].size(); ++v) cols[gi][v] = newid[at++];
  return next;
}

int round_pooled(const std::vector<const Graph*>& graphs, int n, int m,
                 std::vector<std::vector<int>>& cols, int num_colors) {
  if (m == 1) return round_pooled_m1(graphs, cols, num_colors);
  if (static_cast<long long>(bits_for(num_colors)) * m <= 63)
    return round_pooled_impl<std::uint64_t>(n, m, cols, num_colors);
  return round_pooled_impl<unsigned __int128>(n, m, cols, num_colors);
}

std::vector<long long> histogram_of(const std::vector<int>& colors, int num_colors) {
  std::vector<long long> h(num_colors, 0);
  for (int c : colors) ++h[c];
  return h;
}

void check_arity(int m) {
  if (m < 1 || m > 16) throw InvalidInput("arity m must be in [1, 16]");
}

}  // namespace

std::size_t tuple_space_size(int n, int m, const WlOptions& opts) {
  return checked_pow(n, m, opts.max_tuples);
}

TupleColoring initial_coloring(const Graph& g, int m, const WlOptions& opts) {
  check_arity(m);
  tuple_space_size(g.vertex_count(), m, opts);
  std::vector<std::vector<int>> cols;
  int num = pooled_initial({&g}, m, cols);
  TupleColoring c;
  c.m = m;
  c.n = g.vertex_count();
  c.color_of = std::move(cols[0]);
  c.num_colors = canonicalize(c.color_of, num);
  c.round = 0;
  c.stable = false;
  return c;
}

TupleColoring refine_round(const Graph& g, const TupleColoring& c) {
  if (c.n != g.vertex_count()) throw InvalidInput("coloring domain does not match graph");
  std::vector<std::vector<int>> cols{c.color_of};
  int num = round_pooled({&g}, c.n, c.m, cols, c.num_colors);
  TupleColoring out;
  out.m = c.m;
  out.n = c.n;
  out.color_of = std::move(cols[0]);
  out.num_colors = canonicalize(out.color_of, num);
  out.round = c.round + 1;
  out.stable = (out.num_colors == c.num_colors);
  return out;
}

TupleColoring stable_coloring(const Graph& g, int m, const WlOptions& opts) {
  TupleColoring c = initial_coloring(g, m, opts);
  for (;;) {
    TupleColoring next = refine_round(g, c);
    if (next.num_colors == c.num_colors) {
      c.stable = true;
      return c;
    }
    c = std::move(next);
  }
}

EquivalenceOutcome wl_equivalence(const Graph& g, const Graph& h, int m, const WlOptions& opts) {
  check_arity(m);
  EquivalenceOutcome out;
  if (g.vertex_count() != h.vertex_count()) {
    out.equivalent = false;
    out.diverged_round = 0;
    return out;
  }
  tuple_space_size(g.vertex_count(), m, opts);
  std::vector<const Graph*> pool{&g, &h};
  std::vector<std::vector<int>> cols;
  int num = pooled_initial(pool, m, cols);
  int round = 0;
  for (;;) {
    auto ha = histogram_of(cols[0], num);
    auto hb = histogram_of(cols[1], num);
    if (ha != hb) {
      out.equivalent = false;
      out.rounds = round;
      out.diverged_round = round;
      out.histogram_a = std::move(ha);
      out.histogram_b = std::move(hb);
      return out;
    }
    int next = round_pooled(pool, g.vertex_count(), m, cols, num);
    if (next == num) {
      out.equivalent = true;
      out.rounds = round;
      out.diverged_round = -1;
      out.histogram_a = std::move(ha);
      out.histogram_b = std::move(hb);
      return out;
    }
    num = next;
    ++round;
  }
}

bool wl_equivalent(const Graph& g, const Graph& h, int m, const WlOptions& opts) {
  return wl_equivalence(g, h, m, opts).equivalent;
}

TuplePartition skeleton(const TupleColoring& c, int k) {
  if (!c.stable) throw InvalidInput("skeleton requires a stable coloring");
  if (k < 1 || k > c.m) throw InvalidInput("skeleton arity k must satisfy 1 <= k <= m");
  const int n = c.n;
  std::size_t K = 1;
  for (int i = 0; i < k; ++i) K *= static_cast<std::size_t>(n);
  // lift (y_1..y_k) to (y_1..y_k, y_k, ..., y_k); its class is the skeleton
  // class by the repetition-collapsing property of stable colorings
  std::vector<std::size_t> pows(c.m);
  pows[c.m - 1] = 1;
  for (int i = c.m - 2; i >= 0; --i) pows[i] = pows[i + 1] * static_cast<std::size_t>(n);
  std::size_t tail = 0;
  for (int i = k; i < c.m; ++i) tail += pows[i];

  TuplePartition p;
  p.m = k;
  p.n = n;
  p.class_of.resize(K);
  std::array<int, 16> y{};
  std::fill(y.begin(), y.begin() + k, 0);
  for (std::size_t u = 0; u < K; ++u) {
    std::size_t lift = 0;
    for (int i = 0; i < k; ++i) lift += static_cast<std::size_t>(y[i]) * pows[i];
    lift += static_cast<std::size_t>(y[k - 1]) * tail;
    p.class_of[u] = c.color_of[lift];
    advance_odometer(y.data(), k, n);
  }
  p.num_classes = canonicalize(p.class_of, c.num_colors);
  return p;
}

TuplePartition residue(const TupleColoring& c, const std::vector<int>& y) {
  if (!c.stable) throw InvalidInput("residue requires a stable coloring");
  const int k = c.m - static_cast<int>(y.size());
  if (k < 1) throw InvalidInput("residue needs |y| <= m-1");
  const int n = c.n;
  for (int yi : y)
    if (yi < 0 || yi >= n) throw InvalidInput("residue point out of range");
  std::vector<std::size_t> pows(c.m);
  pows[c.m - 1] = 1;
  for (int i = c.m - 2; i >= 0; --i) pows[i] = pows[i + 1] * static_cast<std::size_t>(n);
  std::size_t suffix = 0;
  for (std::size_t j = 0; j < y.size(); ++j) suffix += static_cast<std::size_t>(y[j]) * pows[k + j];

  std::size_t K = 1;
  for (int i = 0; i < k; ++i) K *= static_cast<std::size_t>(n);
  TuplePartition p;
  p.m = k;
  p.n = n;
  p.class_of.resize(K);
  std::array<int, 16> x{};
  std::fill(x.begin(), x.begin() + k, 0);
  for (std::size_t u = 0; u < K; ++u) {
    std::size_t idx = suffix;
    for (int i = 0; i < k; ++i) idx += static_cast<std::size_t>(x[i]) * pows[i];
    p.class_of[u] = c.color_of[idx];
    advance_odometer(x.data(), k, n);
  }
  p.num_classes = canonicalize(p.class_of, c.num_colors);
  return p;
}

bool partition_refines(const TuplePartition& p, const TuplePartition& q) {
  if (p.m != q.m || p.n != q.n) throw InvalidInput("partition domains differ");
  std::vector<int> image(p.num_classes, -1);
  for (std::size_t t = 0; t < p.class_of.size(); ++t) {
    int& img = image[p.class_of[t]];
    if (img == -1)
      img = q.class_of[t];
    else if (img != q.class_of[t])
      return false;
  }
  return true;
}

std::pair<std::vector<int>, int> stabilize_pair_table(int n, std::vector<int> table) {
  if (static_cast<std::size_t>(n) * n != table.size())
    throw InvalidInput("pair table must have n*n entries");
  int num = canonicalize(table, static_cast<int>(table.size()));
  std::vector<std::vector<int>> cols{std::move(table)};
  int rounds = 0;
  for (;;) {
    int next = round_pooled_impl<std::uint64_t>(n, 2, cols, num);
    if (next == num) break;
    num = next;
    ++rounds;
  }
  num = canonicalize(cols[0], num);
  return {std::move(cols[0]), rounds};
}

PairedStabilization lockstep_stabilize_pair_tables(int na, std::vector<int> a, int nb,
                                                   std::vector<int> b) {
  PairedStabilization out;
  if (na != nb) {
    out.match = false;
    out.diverged_round = 0;
    return out;
  }
  // normalize the shared key space: ids ordered by key value
  std::vector<int> keys;
  keys.reserve(a.size() + b.size());
  keys.insert(keys.end(), a.begin(), a.end());
  keys.insert(keys.end(), b.begin(), b.end());
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (int& v : a) v = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), v) - keys.begin());
  for (int& v : b) v = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), v) - keys.begin());
  int num = static_cast<int>(keys.size());

  std::vector<std::vector<int>> cols{std::move(a), std::move(b)};
  int round = 0;
  for (;;) {
    auto ha = histogram_of(cols[0], num);
    auto hb = histogram_of(cols[1], num);
    if (ha != hb) {
      out.match = false;
      out.rounds = round;
      out.diverged_round = round;
      return out;
    }
    int next = round_pooled_impl<std::uint64_t>(na, 2, cols, num);
    if (next == num) {
      out.match = true;
      out.rounds = round;
      out.diverged_round = -1;
      out.table_a = std::move(cols[0]);
      out.table_b = std::move(cols[1]);
      out.num_colors = num;
      return out;
    }
    num = next;
    ++round;
  }
}

}  // namespace wlcirc::wl
