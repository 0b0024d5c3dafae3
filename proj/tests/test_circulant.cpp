#include <doctest.h>

#include "support/naive.hpp"
#include "support/schemes.hpp"
#include "wlcirc/circulant.hpp"
#include "wlcirc/errors.hpp"
#include "wlcirc/graph_io.hpp"

using namespace wlcirc;
using circ::CirculantScheme;
using circ::DecompositionNode;
using circ::WedgeCertificate;
using circ::XGroup;

namespace {

CirculantScheme c4_scheme() { return CirculantScheme::from_cayley(ConnectionSet(4, {1, 3})); }

CirculantScheme thin_scheme(int n) {
  return CirculantScheme::from_configuration(naive::thin_cyclic_scheme(n));
}

CirculantScheme trivial_circulant(int n) {
  std::vector<int> all(n - 1);
  std::iota(all.begin(), all.end(), 1);
  return CirculantScheme::from_cayley(ConnectionSet(n, all));
}

std::vector<int> xgroup_generators(const CirculantScheme& s) {
  std::vector<int> gens;
  for (const XGroup& h : s.x_groups()) gens.push_back(h.generator);
  std::sort(gens.begin(), gens.end());
  return gens;
}

}  // namespace

TEST_CASE("schemes from Cayley graphs") {
  SUBCASE("4-cycle: rank 3 with classes {0},{2},{1,3}") {
    CirculantScheme s = c4_scheme();
    CHECK(s.configuration().rank() == 3);
    CHECK(s.configuration().color(0, 1) == s.configuration().color(0, 3));
    CHECK(s.configuration().color(0, 2) != s.configuration().color(0, 1));
  }
  SUBCASE("5-cycle: rank 3") {
    CHECK(CirculantScheme::from_cayley(ConnectionSet(5, {1, 4})).configuration().rank() == 3);
  }
  SUBCASE("complete graph: trivial scheme") {
    CHECK(trivial_circulant(4).configuration().rank() == 2);
  }
  SUBCASE("translation invariance is verified on wrapping") {
    // a valid configuration that no translation fixes
    CHECK_THROWS_AS(
        CirculantScheme::from_configuration(cc::point_extension(naive::trivial_scheme(4), {0})),
        InvalidInput);
  }
  SUBCASE("every translation fixes every class") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      CirculantScheme s =
          CirculantScheme::from_cayley(naive::random_connection_set(9, seed * 5 + 2));
      const auto& x = s.configuration();
      for (int g = 0; g < 9; ++g)
        for (int u = 0; u < 9; ++u)
          for (int v = 0; v < 9; ++v)
            CHECK(x.color((u + g) % 9, (v + g) % 9) == x.color(u, v));
    }
  }
}

TEST_CASE("X-group lattices") {
  SUBCASE("thin Z_8: all four subgroups") {
    CHECK(xgroup_generators(thin_scheme(8)) == std::vector<int>{1, 2, 4, 8});
  }
  SUBCASE("trivial scheme on Z_8: only the extremes") {
    CHECK(xgroup_generators(trivial_circulant(8)) == std::vector<int>{1, 8});
  }
  SUBCASE("4-cycle scheme: 1, {0,2}, Z_4") {
    CHECK(xgroup_generators(c4_scheme()) == std::vector<int>{1, 2, 4});
  }
  SUBCASE("X-groups correspond one-to-one to parabolics") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      CirculantScheme s =
          CirculantScheme::from_cayley(naive::random_connection_set(12, seed * 11 + 3));
      CHECK(s.x_groups().size() == cc::all_parabolics(s.configuration()).size());
    }
  }
}

TEST_CASE("scheme radical") {
  CHECK(thin_scheme(6).radical().generator == 6);       // trivial subgroup
  CHECK(c4_scheme().radical().generator == 2);          // {0,2}
  CHECK(trivial_circulant(4).radical().generator == 4); // trivial subgroup
}

TEST_CASE("normality") {
  CHECK(circ::is_normal(thin_scheme(5)));
  CHECK(circ::is_normal(thin_scheme(8)));
  CHECK(!circ::is_normal(trivial_circulant(5)));  // stabilizer S_4 is too big
  CHECK(circ::is_normal(trivial_circulant(3)));   // stabilizer {+-1} = aut(Z_3)
}

TEST_CASE("wedge condition") {
  SUBCASE("always holds with trivial L") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      CirculantScheme s =
          CirculantScheme::from_cayley(naive::random_connection_set(8, seed + 13));
      XGroup one = *s.x_group_generated_by(8);
      for (const XGroup& u : s.x_groups())
        CHECK(circ::wedge_condition(s, one, u));
    }
  }
  SUBCASE("4-cycle scheme splits along {0,2}") {
    CirculantScheme s = c4_scheme();
    XGroup h = *s.x_group_generated_by(2);
    CHECK(circ::wedge_condition(s, h, h));
  }
  SUBCASE("thin Z_4 does not split along {0,2}") {
    CirculantScheme s = thin_scheme(4);
    XGroup h = *s.x_group_generated_by(2);
    CHECK(!circ::wedge_condition(s, h, h));
  }
}

TEST_CASE("wedge decompositions") {
  SUBCASE("thin Z_4: only trivial certificates") {
    for (const WedgeCertificate& cert : circ::wedge_decompositions(thin_scheme(4)))
      CHECK(!cert.nontrivial);
  }
  SUBCASE("4-cycle scheme: nontrivial certificate at L = U = {0,2}") {
    bool found = false;
    for (const WedgeCertificate& cert : circ::wedge_decompositions(c4_scheme()))
      if (cert.nontrivial && cert.L.generator == 2 && cert.U.generator == 2) {
        found = true;
        CHECK(cert.operand0.order() == 2);
        CHECK(cert.operand1.order() == 2);
      }
    CHECK(found);
  }
  SUBCASE("trivial scheme of prime order: no nontrivial certificate") {
    for (const WedgeCertificate& cert : circ::wedge_decompositions(trivial_circulant(5)))
      CHECK(!cert.nontrivial);
  }
}

TEST_CASE("assembling admissible pairs") {
  CirculantScheme s = c4_scheme();
  XGroup h = *s.x_group_generated_by(2);
  SUBCASE("identities assemble to the identity") {
    Perm f = circ::assemble_from_admissible(s, h, h, identity_perm(2),
                                            {identity_perm(2), identity_perm(2)});
    CHECK(f == identity_perm(4));
  }
  SUBCASE("swapping inside both blocks gives the (0 2)(1 3) automorphism") {
    Perm f = circ::assemble_from_admissible(s, h, h, identity_perm(2), {Perm{1, 0}, Perm{1, 0}});
    CHECK(f == Perm{2, 3, 0, 1});
    // and it is an automorphism of the scheme
    const auto& x = s.configuration();
    for (int u = 0; u < 4; ++u)
      for (int v = 0; v < 4; ++v) CHECK(x.color(f[u], f[v]) == x.color(u, v));
  }
  SUBCASE("all admissible pairs produce exactly the 8 automorphisms") {
    std::set<Perm> assembled;
    for (const Perm& f0 : naive::brute_isomorphisms(naive::cycle(2), naive::cycle(2))) {
      for (const Perm& b0 : {Perm{0, 1}, Perm{1, 0}})
        for (const Perm& b1 : {Perm{0, 1}, Perm{1, 0}}) {
          Perm f = circ::assemble_from_admissible(s, h, h, f0, {b0, b1});
          assembled.insert(f);
        }
    }
    CHECK(assembled.size() == 8);
    PermGroup aut = iso::cc_automorphisms(s.configuration());
    CHECK(aut.order_string() == "8");
    for (const Perm& f : assembled) {
      const auto& x = s.configuration();
      for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) CHECK(x.color(f[u], f[v]) == x.color(u, v));
    }
  }
  SUBCASE("incompatible pairs are rejected with the offending block") {
    // on thin Z_8 with L = <4> and U = <2>, a quotient map that scatters the
    // L-cosets of one e(U)-class over two classes cannot be assembled
    CirculantScheme t = thin_scheme(8);
    XGroup l = *t.x_group_generated_by(4);
    XGroup u = *t.x_group_generated_by(2);
    CHECK_THROWS_WITH_AS(
        circ::assemble_from_admissible(t, l, u, Perm{1, 0, 2, 3},
                                       {identity_perm(4), identity_perm(4)}),
        doctest::Contains("block 0"), InvalidInput);
  }
}

TEST_CASE("wedge factorization equivalence") {
  CirculantScheme s = c4_scheme();
  XGroup h = *s.x_group_generated_by(2);
  iso::AlgebraicIso id = iso::identity_algebraic_iso(s.configuration());
  SUBCASE("identity bijection satisfies both sides") {
    auto r = circ::wedge_factorization_check(s, s, id, identity_perm(4), h, h);
    CHECK(r.is_iso);
    CHECK(r.decomposes);
  }
  SUBCASE("both sides agree on every bijection of the domain") {
    Perm f(4);
    std::iota(f.begin(), f.end(), 0);
    int isos = 0;
    do {
      auto r = circ::wedge_factorization_check(s, s, id, f, h, h);
      CHECK(r.is_iso == r.decomposes);
      isos += r.is_iso;
    } while (std::next_permutation(f.begin(), f.end()));
    CHECK(isos == 8);
  }
  SUBCASE("the precondition is enforced") {
    CirculantScheme t = thin_scheme(4);
    XGroup th = *t.x_group_generated_by(2);
    iso::AlgebraicIso tid = iso::identity_algebraic_iso(t.configuration());
    CHECK_THROWS_AS(circ::wedge_factorization_check(t, t, tid, identity_perm(4), th, th),
                    InvalidInput);
  }
}

TEST_CASE("classification trees") {
  SUBCASE("trivial scheme on Z_9") {
    DecompositionNode node = circ::classify(trivial_circulant(9));
    CHECK(node.kind == DecompositionNode::Kind::trivial);
  }
  SUBCASE("4-cycle scheme: normal leaf (the point stabilizer is {+-1})") {
    // the normal-leaf case fires before the wedge scan, and this scheme,
    // while a wreath product, is also normal
    DecompositionNode node = circ::classify(c4_scheme());
    CHECK(node.kind == DecompositionNode::Kind::normal);
    CHECK(node.radical_generator == 2);
    REQUIRE(circ::wedge_condition(c4_scheme(), *c4_scheme().x_group_generated_by(2),
                                  *c4_scheme().x_group_generated_by(2)));
  }
  SUBCASE("thin Z_8: normal leaf") {
    DecompositionNode node = circ::classify(thin_scheme(8));
    CHECK(node.kind == DecompositionNode::Kind::normal);
  }
  SUBCASE("matching scheme on Z_8: wedge with two trivial leaves") {
    // big automorphism group (not normal), splits along L = U = {0,4}
    CirculantScheme s = CirculantScheme::from_cayley(ConnectionSet(8, {4}));
    DecompositionNode node = circ::classify(s);
    REQUIRE(node.kind == DecompositionNode::Kind::wedge);
    CHECK(node.wedge_l == 4);
    CHECK(node.wedge_u == 4);
    REQUIRE(node.child0);
    REQUIRE(node.child1);
    CHECK(node.child0->n == 4);
    CHECK(node.child1->n == 2);
    CHECK(node.child0->kind == DecompositionNode::Kind::trivial);
    CHECK(node.child1->kind == DecompositionNode::Kind::trivial);
  }
  SUBCASE("every leaf of a prime-power tree is trivial or normal") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      CirculantScheme s =
          CirculantScheme::from_cayley(naive::random_connection_set(16, seed * 3 + 1));
      std::function<void(const DecompositionNode&)> walk = [&](const DecompositionNode& nd) {
        if (nd.kind == DecompositionNode::Kind::wedge) {
          REQUIRE(nd.child0);
          REQUIRE(nd.child1);
          walk(*nd.child0);
          walk(*nd.child1);
        } else {
          CHECK(nd.kind != DecompositionNode::Kind::unresolved);
        }
      };
      walk(circ::classify(s));
    }
  }
}

TEST_CASE("prime-power isomorphism test") {
  SUBCASE("multiplier-equivalent Z_8 circulants with witness") {
    ConnectionSet a(8, {1, 2, 7});
    Graph b = build_circulant(ConnectionSet(8, {3, 6, 5}));
    iso::IsoCertificate cert = circ::iso_test(a, b);
    REQUIRE(cert.verdict == iso::IsoCertificate::Verdict::isomorphic);
    REQUIRE(cert.witness.has_value());
    Graph ga = build_circulant(a);
    for (auto [u, v] : ga.arcs()) CHECK(b.has_arc((*cert.witness)[u], (*cert.witness)[v]));
  }
  SUBCASE("C9 vs three triangles: distinguished with a 3-WL histogram") {
    ConnectionSet a(9, {1, 8});
    Graph b = naive::disjoint_union(naive::cycle(3),
                                    naive::disjoint_union(naive::cycle(3), naive::cycle(3)));
    iso::IsoCertificate cert = circ::iso_test(a, b);
    CHECK(cert.verdict == iso::IsoCertificate::Verdict::non_isomorphic);
    REQUIRE(cert.distinguisher.has_value());
    CHECK(cert.distinguisher->m == 3);
    CHECK(cert.distinguisher->histogram_a != cert.distinguisher->histogram_b);
  }
  SUBCASE("relabelings of the 4-cycle") {
    ConnectionSet a(4, {1, 3});
    Graph b = apply_permutation(build_circulant(a), naive::random_permutation(4, 9));
    CHECK(circ::iso_test(a, b).verdict == iso::IsoCertificate::Verdict::isomorphic);
  }
  SUBCASE("non-prime-power moduli are rejected") {
    CHECK_THROWS_AS(circ::iso_test(ConnectionSet(6, {1, 5}), naive::cycle(6)), InvalidInput);
  }
}

TEST_CASE("restrictions, quotients and sections stay circulant") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    CirculantScheme s = CirculantScheme::from_cayley(naive::random_connection_set(12, seed * 3 + 8));
    for (const XGroup& u : s.x_groups()) {
      CirculantScheme r = s.restriction_to(u);
      CHECK(r.order() == u.order());
      for (const XGroup& l : s.x_groups()) {
        if (!l.subgroup_of(u)) continue;
        CirculantScheme sec = s.section_scheme(u, l);
        CHECK(sec.order() == l.generator / u.generator);
      }
    }
  }
}

TEST_CASE("section extensions commute with point extensions when partly regular") {
  // ((X_S)_{0})_{S0} = ((X_0)_S)_{S0} whenever the left side is partly regular
  std::vector<CirculantScheme> schemes{
      thin_scheme(8), c4_scheme(), CirculantScheme::from_cayley(ConnectionSet(8, {1, 7})),
      CirculantScheme::from_cayley(ConnectionSet(9, {1, 8})),
      CirculantScheme::from_cayley(ConnectionSet(8, {4, 2, 6}))};
  int exercised = 0;
  for (const CirculantScheme& s : schemes) {
    for (const XGroup& u : s.x_groups())
      for (const XGroup& l : s.x_groups()) {
        if (!l.subgroup_of(u)) continue;
        CirculantScheme xs = s.section_scheme(u, l);
        const int k = xs.order();
        for (const XGroup& u0 : s.x_groups()) {
          if (!u0.subgroup_of(u) || u0.generator % u.generator != 0) continue;
          for (const XGroup& l0 : s.x_groups()) {
            if (!l0.subgroup_of(u0)) continue;
            if (l.generator % l0.generator != 0) continue;  // need L <= L0
            // S0 = U0/L0 inside S = U/L
            XGroup u0_in = circ::XGroup{k, u0.generator / u.generator, {}};
            XGroup l0_in = circ::XGroup{k, l0.generator / u.generator, {}};
            std::vector<int> delta;
            for (int i = 0; i < k; i += u0_in.generator) delta.push_back(i);
            std::vector<int> blocks(k);
            for (int i = 0; i < k; ++i) blocks[i] = i % l0_in.generator;

            cc::CoherentConfiguration lhs_base =
                cc::point_extension(xs.configuration(), {0});
            auto e_lhs = cc::parabolic_from_blocks(lhs_base, blocks);
            if (!e_lhs) continue;
            cc::CoherentConfiguration lhs = cc::section(lhs_base, delta, *e_lhs);
            if (!cc::partly_regular_point(lhs).has_value()) continue;

            cc::CoherentConfiguration ext = cc::point_extension(s.configuration(), {0});
            std::vector<int> udelta;
            for (int i = 0; i < s.order(); i += u.generator) udelta.push_back(i);
            std::vector<int> lblocks(s.order());
            for (int i = 0; i < s.order(); ++i) lblocks[i] = i % l.generator;
            auto e_rhs = cc::parabolic_from_blocks(ext, lblocks);
            REQUIRE(e_rhs);
            cc::CoherentConfiguration mid = cc::section(ext, udelta, *e_rhs);
            auto e2 = cc::parabolic_from_blocks(mid, blocks);
            REQUIRE(e2);
            cc::CoherentConfiguration rhs = cc::section(mid, delta, *e2);
            CHECK(lhs == rhs);
            ++exercised;
          }
        }
      }
  }
  CHECK(exercised > 0);
}
