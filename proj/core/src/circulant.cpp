#include "wlcirc/circulant.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wlcirc/errors.hpp"
#include "wlcirc/wl.hpp"

namespace wlcirc::circ {

namespace {

XGroup make_xgroup(int n, int divisor) {
  XGroup h;
  h.modulus = n;
  h.generator = divisor;
  for (int x = 0; x < n; x += divisor) h.elements.push_back(x);
  return h;
}

std::vector<int> divisors_of(int n) {
  std::vector<int> d;
  for (int k = 1; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

int numeric_gcd(int a, int b) { return b == 0 ? a : numeric_gcd(b, a % b); }

/// Difference set of a basis relation of a circulant scheme: row 0.
std::vector<int> difference_set(const cc::CoherentConfiguration& x, int color) {
  std::vector<int> d;
  for (int v = 0; v < x.size(); ++v)
    if (x.color(0, v) == color) d.push_back(v);
  return d;
}

/// The subgroup underlying a parabolic of a circulant scheme: blocks are the
/// cosets of the block of 0, which must be of the form <d>.
XGroup xgroup_of_parabolic(int n, const cc::Parabolic& e) {
  std::vector<int> h;
  for (int u = 0; u < n; ++u)
    if (e.block_of[u] == e.block_of[0]) h.push_back(u);
  int d = h.size() == 1 ? n : h[1];
  if (static_cast<int>(h.size()) != (n % d == 0 ? n / d : -1))
    throw InternalInvariantFailure("parabolic block of 0 is not a subgroup of Z_n");
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] != static_cast<int>(i) * d)
      throw InternalInvariantFailure("parabolic block of 0 is not a subgroup of Z_n");
  return make_xgroup(n, d);
}

}  // namespace

CirculantScheme CirculantScheme::from_configuration(cc::CoherentConfiguration x) {
  CirculantScheme s;
  s.n_ = x.size();
  const int n = s.n_;
  for (int g = 1; g < n; ++g)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (x.color((u + g) % n, (v + g) % n) != x.color(u, v))
          throw InvalidInput("configuration is not translation-invariant");
  if (!x.is_commutative())
    throw InternalInvariantFailure("translation-invariant scheme is not commutative");
  s.cc_ = std::move(x);

  for (int d : divisors_of(n)) {
    std::vector<int> block_of(n);
    for (int u = 0; u < n; ++u) block_of[u] = u % d;
    if (cc::parabolic_from_blocks(s.cc_, std::move(block_of))) s.xgroups_.push_back(make_xgroup(n, d));
  }
  std::sort(s.xgroups_.begin(), s.xgroups_.end(),
            [](const XGroup& a, const XGroup& b) { return a.generator > b.generator; });

  // radical: rad(r(0,g)) for any generator g of Z_n; the subgroup must not
  // depend on the choice of g
  if (n == 1) {
    s.radical_ = make_xgroup(1, 1);
  } else {
    bool first = true;
    for (int g = 1; g < n; ++g) {
      if (numeric_gcd(g, n) != 1) continue;
      cc::Parabolic rad = cc::radical(s.cc_, {s.cc_.color(0, g)});
      XGroup h = xgroup_of_parabolic(n, rad);
      if (first) {
        s.radical_ = h;
        first = false;
      } else if (!(h == s.radical_)) {
        throw InternalInvariantFailure("scheme radical depends on the choice of generator");
      }
    }
  }
  return s;
}

CirculantScheme CirculantScheme::from_cayley(const ConnectionSet& c, const wl::WlOptions& opts) {
  cc::CoherentConfiguration x = cc::cc_of_graph(build_circulant(c), opts);
  try {
    return from_configuration(std::move(x));
  } catch (const InvalidInput& e) {
    throw InternalInvariantFailure(std::string("WL closure of a Cayley graph is not circulant: ") +
                                   e.what());
  }
}

std::optional<XGroup> CirculantScheme::x_group_generated_by(int divisor) const {
  for (const XGroup& h : xgroups_)
    if (h.generator == divisor) return h;
  return std::nullopt;
}

cc::Parabolic CirculantScheme::coset_parabolic(const XGroup& h) const {
  std::vector<int> block_of(n_);
  for (int u = 0; u < n_; ++u) block_of[u] = u % h.generator;
  auto e = cc::parabolic_from_blocks(cc_, std::move(block_of));
  if (!e) throw InvalidInput("subgroup is not an X-group of this scheme");
  return *std::move(e);
}

CirculantScheme CirculantScheme::restriction_to(const XGroup& u) const {
  if (!x_group_generated_by(u.generator)) throw InvalidInput("restriction_to: not an X-group");
  const int m = u.order();
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i) * m + j] = cc_.color(i * u.generator, j * u.generator);
  return from_configuration(cc::CoherentConfiguration::from_table(m, std::move(table)));
}

CirculantScheme CirculantScheme::quotient_by(const XGroup& l) const {
  cc::Parabolic e = coset_parabolic(l);
  // block labels are the residues mod l.generator in order, so the quotient
  // configuration is already aligned with Z_{[G:L]}
  return from_configuration(cc::quotient(cc_, e));
}

CirculantScheme CirculantScheme::section_scheme(const XGroup& u, const XGroup& l) const {
  if (!l.subgroup_of(u)) throw InvalidInput("section_scheme: L must be contained in U");
  CirculantScheme r = restriction_to(u);
  XGroup l_in_r = make_xgroup(u.order(), l.generator / u.generator);
  return r.quotient_by(l_in_r);
}

bool is_normal(const CirculantScheme& s, const SearchLimits& limits) {
  const int n = s.order();
  cc::CoherentConfiguration stab = cc::point_extension(s.configuration(), {0});
  PermGroup group = iso::cc_automorphisms(stab, limits);
  for (const Perm& f : group.generators) {
    if (f[0] != 0) throw InternalInvariantFailure("stabilizer automorphism moves the base point");
    int m = n == 1 ? 0 : f[1 % n];
    for (int x = 0; x < n; ++x)
      if (f[x] != static_cast<int>((static_cast<long long>(m) * x) % n)) return false;
  }
  return true;
}

bool wedge_condition(const CirculantScheme& s, const XGroup& l, const XGroup& u) {
  if (!l.subgroup_of(u)) throw InvalidInput("wedge_condition: L must be contained in U");
  if (!s.x_group_generated_by(l.generator) || !s.x_group_generated_by(u.generator))
    throw InvalidInput("wedge_condition: L and U must be X-groups");
  const cc::CoherentConfiguration& x = s.configuration();
  for (int t = 0; t < x.rank(); ++t) {
    bool meets_u = false;
    for (int d : difference_set(x, t))
      if (u.contains(d)) {
        meets_u = true;
        break;
      }
    if (meets_u) continue;
    cc::Parabolic rad = cc::radical(x, {t});
    XGroup h = xgroup_of_parabolic(s.order(), rad);
    if (!(l.generator % h.generator == 0)) return false;  // L <= H fails
  }
  return true;
}

std::vector<WedgeCertificate> wedge_decompositions(const CirculantScheme& s) {
  std::vector<WedgeCertificate> certs;
  for (const XGroup& l : s.x_groups())
    for (const XGroup& u : s.x_groups()) {
      if (!l.subgroup_of(u)) continue;
      if (!wedge_condition(s, l, u)) continue;
      WedgeCertificate cert;
      cert.L = l;
      cert.U = u;
      cert.nontrivial = l.order() > 1 && u.order() < s.order();
      cert.operand0 = s.quotient_by(l);
      cert.operand1 = s.restriction_to(u);
      certs.push_back(std::move(cert));
    }
  return certs;
}

Perm assemble_from_admissible(const CirculantScheme& s, const XGroup& l, const XGroup& u,
                              const Perm& f0, const std::vector<Perm>& f_blocks) {
  const int n = s.order();
  const int lgen = l.generator;   // G/L ~ Z_lgen
  const int ugen = u.generator;   // e(U) has ugen classes of size n/ugen
  if (!l.subgroup_of(u)) throw InvalidInput("assemble_from_admissible: L must be contained in U");
  if (static_cast<int>(f0.size()) != lgen || !is_permutation(f0))
    throw InvalidInput("assemble_from_admissible: f0 must be a bijection on G/L");
  if (static_cast<int>(f_blocks.size()) != ugen)
    throw InvalidInput("assemble_from_admissible: need one block bijection per class of e(U)");
  const int block_size = n / ugen;

  Perm f(n, -1);
  for (int i = 0; i < ugen; ++i) {
    const Perm& fb = f_blocks[i];
    if (static_cast<int>(fb.size()) != block_size || !is_permutation(fb)) {
      std::ostringstream os;
      os << "assemble_from_admissible: block " << i << ": not a bijection on the class";
      throw InvalidInput(os.str());
    }
    // the image class is forced by f0: all L-cosets inside block i must land
    // in one class of e(U)
    int target = -1;
    for (int k = 0; k < block_size; ++k) {
      int x = i + k * ugen;
      int image_coset = f0[x % lgen];
      if (target == -1)
        target = image_coset % ugen;
      else if (image_coset % ugen != target) {
        std::ostringstream os;
        os << "assemble_from_admissible: block " << i
           << ": f0 scatters its L-cosets over several classes of e(U)";
        throw InvalidInput(os.str());
      }
    }
    for (int k = 0; k < block_size; ++k) {
      int x = i + k * ugen;
      int y = target + fb[k] * ugen;
      if (y % lgen != f0[x % lgen]) {
        std::ostringstream os;
        os << "assemble_from_admissible: block " << i
           << ": block bijection disagrees with f0 on the quotient G/L";
        throw InvalidInput(os.str());
      }
      f[x] = y;
    }
  }
  if (!is_permutation(f))
    throw InvalidInput("assemble_from_admissible: assembled map is not a bijection");
  return f;
}

namespace {

/// phi image of the coset parabolic e(H): the X-group of the target scheme
/// whose coset parabolic consists of the phi-images of e(H)'s colors.
XGroup phi_image_xgroup(const CirculantScheme& s, const CirculantScheme& s2,
                        const iso::AlgebraicIso& phi, const XGroup& h) {
  cc::Parabolic e = s.coset_parabolic(h);
  std::vector<int> image_colors;
  for (int c : e.relation_colors) image_colors.push_back(phi.map[c]);
  std::sort(image_colors.begin(), image_colors.end());
  for (const XGroup& cand : s2.x_groups()) {
    if (cand.order() != h.order()) continue;
    if (s2.coset_parabolic(cand).relation_colors == image_colors) return cand;
  }
  throw InternalInvariantFailure("phi image of a coset parabolic is not a coset parabolic");
}

}  // namespace

WedgeFactorizationContext::WedgeFactorizationContext(const CirculantScheme& s,
                                                     const CirculantScheme& s2,
                                                     const iso::AlgebraicIso& phi, const XGroup& l,
                                                     const XGroup& u)
    : s_(s), s2_(s2), phi_map_(phi.map), l_(l), u_(u) {
  if (!wedge_condition(s, l, u))
    throw InvalidInput("wedge factorization: scheme does not satisfy the wedge condition");
  if (s2.order() != s.order())
    throw InvalidInput("wedge factorization: domains differ");
  l2_ = phi_image_xgroup(s, s2, phi, l);
  u2_ = phi_image_xgroup(s, s2, phi, u);
  x0_ = s.quotient_by(l_);
  y0_ = s2.quotient_by(l2_);
  // phi_0: quotient class of (i,j) -> quotient class of the phi image of any
  // basis relation meeting block (i,j)
  const cc::CoherentConfiguration& x = s.configuration();
  const cc::CoherentConfiguration& y = s2.configuration();
  const cc::CoherentConfiguration& q0 = x0_.configuration();
  const cc::CoherentConfiguration& q1 = y0_.configuration();
  const int lgen = l_.generator;
  phi0_.assign(q0.rank(), -1);
  for (int i = 0; i < lgen; ++i)
    for (int j = 0; j < lgen; ++j) {
      int r2 = phi_map_[x.color(i, j)];
      auto diffs = difference_set(y, r2);
      int target = q1.color(0, diffs[0] % l2_.generator);
      int& slot = phi0_[q0.color(i, j)];
      if (slot == -1)
        slot = target;
      else if (slot != target)
        throw InternalInvariantFailure("induced quotient map is not well-defined");
    }
}

WedgeFactorization WedgeFactorizationContext::check(const Perm& f) const {
  const int n = s_.order();
  if (static_cast<int>(f.size()) != n || !is_permutation(f))
    throw InvalidInput("wedge factorization: f must be a bijection between the domains");
  const cc::CoherentConfiguration& x = s_.configuration();
  const cc::CoherentConfiguration& y = s2_.configuration();
  const int lgen = l_.generator, ugen = u_.generator;

  WedgeFactorization out;
  out.is_iso = true;
  for (int p = 0; p < n && out.is_iso; ++p)
    for (int q = 0; q < n; ++q)
      if (y.color(f[p], f[q]) != phi_map_[x.color(p, q)]) {
        out.is_iso = false;
        break;
      }

  // f must respect both partitions: L-cosets onto L'-cosets, e(U)-classes
  // onto e(U')-classes
  out.decomposes = true;
  std::vector<int> f0(lgen, -1);
  for (int p = 0; p < n && out.decomposes; ++p) {
    int& image = f0[p % lgen];
    if (image == -1)
      image = f[p] % l2_.generator;
    else if (image != f[p] % l2_.generator)
      out.decomposes = false;
  }
  if (out.decomposes && (l2_.generator != lgen || !is_permutation(f0))) out.decomposes = false;
  for (int p = 0; p < n && out.decomposes; ++p)
    for (int q = 0; q < n; q += 1) {
      if (p % ugen != q % ugen) continue;
      if (f[p] % u2_.generator != f[q] % u2_.generator) {
        out.decomposes = false;
        break;
      }
    }

  if (out.decomposes) {
    // f0 must realize phi_0 on the quotient
    const cc::CoherentConfiguration& q0 = x0_.configuration();
    const cc::CoherentConfiguration& q1 = y0_.configuration();
    for (int i = 0; i < lgen && out.decomposes; ++i)
      for (int j = 0; j < lgen; ++j)
        if (q1.color(f0[i], f0[j]) != phi0_[q0.color(i, j)]) {
          out.decomposes = false;
          break;
        }
  }
  if (out.decomposes) {
    // per-class check: f restricted to each class of e(U) must realize the
    // induced algebraic isomorphism on the restrictions
    for (int i = 0; i < ugen && out.decomposes; ++i) {
      for (int p = i; p < n && out.decomposes; p += ugen)
        for (int q = i; q < n; q += ugen)
          if (y.color(f[p], f[q]) != phi_map_[x.color(p, q)]) {
            out.decomposes = false;
            break;
          }
    }
  }
  return out;
}

WedgeFactorization wedge_factorization_check(const CirculantScheme& s, const CirculantScheme& s2,
                                             const iso::AlgebraicIso& phi, const Perm& f,
                                             const XGroup& l, const XGroup& u) {
  return WedgeFactorizationContext(s, s2, phi, l, u).check(f);
}

namespace {

DecompositionNode classify_impl(const CirculantScheme& s, const SearchLimits& limits) {
  DecompositionNode node;
  node.n = s.order();
  node.rank = s.configuration().rank();
  node.radical_generator = s.radical().generator;
  node.prime_power = is_prime_power(s.order()) || s.order() == 1;

  if (node.rank <= 2) {
    node.kind = DecompositionNode::Kind::trivial;
    return node;
  }
  if (is_normal(s, limits)) {
    node.kind = DecompositionNode::Kind::normal;
    node.normal_flag = true;
    return node;
  }
  std::vector<WedgeCertificate> certs = wedge_decompositions(s);
  certs.erase(std::remove_if(certs.begin(), certs.end(),
                             [](const WedgeCertificate& c) { return !c.nontrivial; }),
              certs.end());
  if (certs.empty()) {
    if (node.prime_power)
      throw InternalInvariantFailure(
          "prime-power circulant scheme is neither trivial nor normal and admits no nontrivial "
          "wedge decomposition");
    node.kind = DecompositionNode::Kind::unresolved;
    return node;
  }
  auto score = [&s](const WedgeCertificate& c) {
    return c.U.order() + (s.order() - c.L.order());
  };
  std::sort(certs.begin(), certs.end(), [&](const WedgeCertificate& a, const WedgeCertificate& b) {
    if (score(a) != score(b)) return score(a) > score(b);
    if (a.U.order() != b.U.order()) return a.U.order() > b.U.order();
    return a.L.order() < b.L.order();
  });
  const WedgeCertificate& best = certs.front();
  node.kind = DecompositionNode::Kind::wedge;
  node.wedge_l = best.L.generator;
  node.wedge_u = best.U.generator;
  node.child0 = std::make_unique<DecompositionNode>(classify_impl(best.operand0, limits));
  node.child1 = std::make_unique<DecompositionNode>(classify_impl(best.operand1, limits));
  return node;
}

}  // namespace

DecompositionNode classify(const CirculantScheme& s, const SearchLimits& limits) {
  return classify_impl(s, limits);
}

iso::IsoCertificate iso_test(const ConnectionSet& c, const Graph& h, const IsoTestOptions& opts) {
  if (!is_prime_power(c.modulus))
    throw InvalidInput("iso_test requires a circulant graph of prime-power order");
  Graph g = build_circulant(c);
  SearchStats stats;
  iso::IsoCertificate cert = iso::IsoCertificate::make_undecided(stats);
  try {
    wl::EquivalenceOutcome eq = wl::wl_equivalence(g, h, 3, opts.wl);
    if (eq.equivalent) {
      auto [ta, tb] = iso::paired_graph_tables(g, h);
      auto witness =
          iso::find_table_iso(g.vertex_count(), ta, h.vertex_count(), tb, opts.witness_search, &stats);
      if (!witness)
        throw InternalInvariantFailure(
            "3-WL equivalent prime-power circulant pair with no isomorphism (contradicts the "
            "dimension bound)");
      cert = iso::IsoCertificate::make_isomorphic(g, h, std::move(*witness), stats);
    } else {
      iso::Distinguisher d;
      d.m = 3;
      d.round = eq.diverged_round;
      d.histogram_a = eq.histogram_a;
      d.histogram_b = eq.histogram_b;
      cert = iso::IsoCertificate::make_non_isomorphic(stats, std::move(d));
    }
  } catch (const ResourceLimit&) {
    return iso::IsoCertificate::make_undecided(stats);
  }

  if (opts.cross_check_oracle && g.vertex_count() <= opts.oracle.max_n &&
      h.vertex_count() <= opts.oracle.max_n) {
    iso::IsoCertificate oracle = iso::oracle_isomorphic(g, h, opts.oracle);
    bool oracle_iso = oracle.verdict == iso::IsoCertificate::Verdict::isomorphic;
    bool ours = cert.verdict == iso::IsoCertificate::Verdict::isomorphic;
    if (oracle.verdict != iso::IsoCertificate::Verdict::undecided && oracle_iso != ours)
      throw InternalInvariantFailure("iso_test verdict disagrees with the brute-force oracle");
  }
  return cert;
}

}  // namespace wlcirc::circ
