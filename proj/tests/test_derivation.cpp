#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "derring/derivation.hpp"

using namespace derring;

TEST_CASE("is_derivation basics") {
  GroupRing gr = GroupRing::build(make_zmod(3), cyclic_group(2));
  const FiniteRing &b = gr.carrier();
  // zero map
  CHECK(is_derivation(b, {b.zero(), b.zero()}));
  // inner derivations by construction
  std::uint64_t s = 5;
  for (int t = 0; t < 20; ++t) {
    Coeffs a(b.rank());
    for (std::size_t i = 0; i < b.rank(); ++i) {
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      a[i] = static_cast<std::int64_t>((s >> 33) % 3);
    }
    Derivation d = Derivation::inner(b, a);
    CHECK(is_derivation(b, d.images()));
  }
  // g |-> 1 is not a derivation on Z/3[C2]
  std::vector<Coeffs> images = {b.zero(), gr.basis_element(0)};
  CHECK(!is_derivation(b, images));
}

TEST_CASE("der of cyclic coefficient rings is trivial") {
  for (std::int64_t n : {2, 3, 4, 6, 9, 12}) {
    DerivationSpace d = der(make_zmod(n));
    CHECK(d.cardinality() == 1);
  }
}

TEST_CASE("der of Z/2[C2] has 4 elements") {
  GroupRing gr = GroupRing::build(make_zmod(2), cyclic_group(2));
  DerivationSpace full = der(gr.carrier());
  CHECK(full.cardinality() == 4);
  DerivationSpace rder = der_r(gr);
  CHECK(rder.cardinality() == 4);
  // no nonzero derivation is inner (the carrier is commutative)
  for (const Derivation &d : rder.generators()) {
    if (d.is_zero()) continue;
    CHECK(!inner_witness(gr.carrier(), d).has_value());
  }
}

TEST_CASE("der of M2(F2) has 8 elements, all inner") {
  FiniteRing m2 = make_matrix_ring(make_zmod(2), 2);
  DerivationSpace d = der(m2);
  CHECK(d.cardinality() == 8);  // |M2(F2) / Z|
  for (const Derivation &g : d.generators())
    CHECK(inner_witness(m2, g).has_value());
}

TEST_CASE("der_r of Z/3[C2] is trivial, of Z/5[S3] has 125 elements") {
  GroupRing g32 = GroupRing::build(make_zmod(3), cyclic_group(2));
  CHECK(der_r(g32).cardinality() == 1);

  GroupRing g53 = GroupRing::build(make_zmod(5), symmetric_group(3));
  DerivationSpace d = der_r(g53);
  CHECK(d.cardinality() == 125);
  // every generator has an innerness witness (finite coprime case)
  for (const Derivation &gen : d.generators()) {
    auto w = inner_witness(g53.carrier(), gen);
    REQUIRE(w.has_value());
    CHECK(Derivation::inner(g53.carrier(), *w) == gen);
  }
}

TEST_CASE("inner derivation identities") {
  FiniteRing m2 = make_matrix_ring(make_zmod(2), 2);
  // generators: E11 E12 E21 E22 as coefficient slots 0..3
  Coeffs e12{0, 1, 0, 0}, e21{0, 0, 1, 0};
  Derivation d12 = Derivation::inner(m2, e12);
  Derivation d21 = Derivation::inner(m2, e21);
  // [inner(a), inner(b)] == inner(ab - ba); here [E12,E21] = E11 + E22 = I
  Derivation br = bracket(d12, d21);
  CHECK(br == Derivation::inner(m2, m2.commutator(e12, e21)));
  CHECK(br.is_zero());  // I is central
  // inner(a)(a) == 0
  CHECK(m2.element(d12.apply(e12)).is_zero());
  // central a gives the zero derivation
  CHECK(Derivation::inner(m2, m2.one()).is_zero());
  // bracket(d, d) == 0
  CHECK(bracket(d12, d12).is_zero());
}

TEST_CASE("inner witness kernel is the center") {
  FiniteRing m2 = make_matrix_ring(make_zmod(3), 2);
  Coeffs a{1, 2, 0, 1};
  Derivation d = Derivation::inner(m2, a);
  auto w = inner_witness(m2, d);
  REQUIRE(w.has_value());
  // witness differs from a by a central element
  CHECK(m2.center().contains(to_ivec(m2.sub(a, *w))));
}

TEST_CASE("averaging witness on Z/5[S3]") {
  GroupRing gr = GroupRing::build(make_zmod(5), symmetric_group(3));
  const FiniteRing &b = gr.carrier();
  SubgroupSet whole = gr.group().full_subgroup();
  // d = inner(a) for a scattered element a
  Coeffs a(b.rank(), 0);
  a[1] = 2;
  a[3] = 4;
  Derivation d = Derivation::inner(b, a);
  Coeffs x = averaging_witness(gr, d, whole);
  CHECK(Derivation::inner(b, b.neg(x)) == d);
  // x + a is central
  CHECK(b.center().contains(to_ivec(b.add(x, a))));
  // zero derivation: witness 0
  Coeffs x0 = averaging_witness(gr, Derivation::zero(b), whole);
  CHECK(b.element(x0).is_zero());
}

TEST_CASE("averaging witness preconditions") {
  GroupRing gr = GroupRing::build(make_zmod(2), cyclic_group(2));
  DerivationSpace d = der_r(gr);
  for (const Derivation &gen : d.generators()) {
    if (gen.is_zero()) continue;
    CHECK_THROWS_AS(
        averaging_witness(gr, gen, gr.group().full_subgroup()), error);
    break;
  }
}

TEST_CASE("zder examples") {
  // commutative carrier: zder == der
  GroupRing g22 = GroupRing::build(make_zmod(2), cyclic_group(2));
  CHECK(zder(g22.carrier()).cardinality() == der(g22.carrier()).cardinality());
  CHECK(zder_r(g22).cardinality() == 4);
  // Z/5[S3]: central R-derivations vanish
  GroupRing g53 = GroupRing::build(make_zmod(5), symmetric_group(3));
  CHECK(zder_r(g53).cardinality() == 1);
}

TEST_CASE("l_map and coefficient vanishing") {
  GroupRing gr = GroupRing::build(make_zmod(5), symmetric_group(3));
  const FiniteRing &b = gr.carrier();
  DerivationSpace d = der_r(gr);
  for (const Derivation &gen : d.generators()) {
    CHECK(b.element(l_map(gr, gen, 0)).is_zero());  // L(1) = 0
    for (std::size_t gi = 0; gi < gr.group().order(); ++gi)
      CHECK(coefficient_vanishing(gr, gen, gi));
  }
  // hypothesis violation raises
  GroupRing g22 = GroupRing::build(make_zmod(2), cyclic_group(2));
  DerivationSpace d22 = der_r(g22);
  for (const Derivation &gen : d22.generators()) {
    CHECK_THROWS_AS(coefficient_vanishing(g22, gen, 1), error);
    break;
  }
}

TEST_CASE("space membership and expansion round trips") {
  GroupRing gr = GroupRing::build(make_zmod(5), symmetric_group(3));
  DerivationSpace d = der_r(gr);
  for (const Derivation &gen : d.generators()) {
    auto c = d.coords_of(gen);
    REQUIRE(c.has_value());
    CHECK(d.expand(*c) == gen);
  }
  // brackets of members stay in the space (Lie closure)
  auto gens = d.generators();
  if (gens.size() >= 2) CHECK(d.contains(bracket(gens[0], gens[1])));
}

TEST_CASE("solver caps raise cap_error") {
  GroupRing gr = GroupRing::build(make_zmod(2), elementary_abelian(2, 3));
  Caps tight;
  tight.solve_unknowns = 4;
  CHECK_THROWS_AS(der_r(gr, tight), cap_error);
  CHECK_THROWS_AS(der(gr.carrier(), tight), cap_error);
}
