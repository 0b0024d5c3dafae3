#include "wlcirc/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wlcirc/errors.hpp"
#include "wlcirc/util.hpp"

namespace wlcirc::circ {

namespace {

int numeric_gcd(int a, int b) { return b == 0 ? a : numeric_gcd(b, a % b); }

std::uint64_t apply_multiplier(std::uint64_t mask, int m, int n) {
  std::uint64_t out = 0;
  for (int s = 1; s < n; ++s)
    if (mask & (std::uint64_t{1} << s)) out |= std::uint64_t{1} << ((s * m) % n);
  return out;
}

/// Lexicographically least mask in the orbit {mS : gcd(m,n)=1}.
std::uint64_t canonical_mask(std::uint64_t mask, int n) {
  std::uint64_t best = mask;
  for (int m = 2; m < n; ++m) {
    if (numeric_gcd(m, n) != 1) continue;
    best = std::min(best, apply_multiplier(mask, m, n));
  }
  return best;
}

ConnectionSet mask_to_set(std::uint64_t mask, int n) {
  std::vector<int> elems;
  for (int s = 1; s < n; ++s)
    if (mask & (std::uint64_t{1} << s)) elems.push_back(s);
  return ConnectionSet(n, std::move(elems));
}

void add_structured_masks(int n, std::set<std::uint64_t>& masks) {
  // unions of the orbits of each cyclic multiplier group <m> on Z_n \ {0}
  for (int m = 1; m < n; ++m) {
    if (numeric_gcd(m, n) != 1) continue;
    std::vector<int> orbit_of(n, -1);
    std::vector<std::uint64_t> orbit_masks;
    for (int s = 1; s < n; ++s) {
      if (orbit_of[s] != -1) continue;
      std::uint64_t omask = 0;
      int x = s;
      while (orbit_of[x] == -1) {
        orbit_of[x] = static_cast<int>(orbit_masks.size());
        omask |= std::uint64_t{1} << x;
        x = (x * m) % n;
      }
      orbit_masks.push_back(omask);
    }
    if (orbit_masks.size() > 12) continue;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << orbit_masks.size()); ++pick) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < orbit_masks.size(); ++i)
        if (pick & (std::uint64_t{1} << i)) mask |= orbit_masks[i];
      masks.insert(canonical_mask(mask, n));
    }
  }
  // wreath-type sets: a subset of a proper subgroup H plus whole cosets of H
  for (int d = 2; d < n; ++d) {
    if (n % d != 0) continue;
    const int inside = n / d - 1;  // nonzero elements of H = <d>
    if (inside > 8 || d - 1 > 8) continue;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << inside); ++a) {
      std::uint64_t base = 0;
      for (int k = 0; k < inside; ++k)
        if (a & (std::uint64_t{1} << k)) base |= std::uint64_t{1} << ((k + 1) * d);
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << (d - 1)); ++b) {
        std::uint64_t mask = base;
        for (int c = 1; c < d; ++c)
          if (b & (std::uint64_t{1} << (c - 1)))
            for (int x = c; x < n; x += d) mask |= std::uint64_t{1} << x;
        if (mask) masks.insert(canonical_mask(mask, n));
      }
    }
  }
}

}  // namespace

std::vector<ConnectionSet> corpus_connection_sets(int n, const CorpusOptions& opts) {
  if (n < 2 || n > 63) throw InvalidInput("corpus orders are limited to 2 <= n <= 63");
  std::set<std::uint64_t> masks;
  if (n - 1 <= opts.exhaustive_exponent_cap) {
    for (std::uint64_t raw = 0; raw < (std::uint64_t{1} << (n - 1)); ++raw)
      masks.insert(canonical_mask(raw << 1, n));
  } else {
    masks.insert(0);  // edgeless: closes to the trivial scheme
    add_structured_masks(n, masks);
    SplitMix64 rng(opts.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n)));
    for (int added = 0; added < opts.random_sets; ++added) {
      std::uint64_t mask = 0;
      for (int s = 1; s < n; ++s)
        if (rng.coin()) mask |= std::uint64_t{1} << s;
      masks.insert(canonical_mask(mask, n));
    }
  }
  std::vector<ConnectionSet> out;
  out.reserve(masks.size());
  for (std::uint64_t mask : masks) out.push_back(mask_to_set(mask, n));
  return out;
}

std::vector<CirculantScheme> circulant_corpus(int n, const CorpusOptions& opts) {
  std::vector<ConnectionSet> sets = corpus_connection_sets(n, opts);
  std::map<std::vector<int>, CirculantScheme> seen;
  for (const ConnectionSet& c : sets) {
    CirculantScheme s = CirculantScheme::from_cayley(c);
    std::vector<int> key = s.configuration().table();
    seen.emplace(std::move(key), std::move(s));
  }
  if (opts.include_meets) {
    std::vector<const CirculantScheme*> base;
    for (auto& [k, v] : seen) base.push_back(&v);
    std::map<std::vector<int>, CirculantScheme> extra;
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = i + 1; j < base.size(); ++j) {
        cc::CoherentConfiguration m =
            cc::meet(base[i]->configuration(), base[j]->configuration());
        std::vector<int> key = m.table();
        if (seen.count(key) || extra.count(key)) continue;
        extra.emplace(std::move(key), CirculantScheme::from_configuration(std::move(m)));
      }
    for (auto& [k, v] : extra) seen.emplace(k, std::move(v));
  }
  std::vector<CirculantScheme> out;
  for (auto& [k, v] : seen) out.push_back(std::move(v));
  std::sort(out.begin(), out.end(), [](const CirculantScheme& a, const CirculantScheme& b) {
    if (a.configuration().rank() != b.configuration().rank())
      return a.configuration().rank() < b.configuration().rank();
    return a.configuration().table() < b.configuration().table();
  });
  return out;
}

}  // namespace wlcirc::circ
