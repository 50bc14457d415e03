#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "derring/group_ring.hpp"

using namespace derring;

TEST_CASE("group ring sizes") {
  GroupRing a = GroupRing::build(make_zmod(2), cyclic_group(2));
  CHECK(a.carrier().cardinality() == 4);
  GroupRing b = GroupRing::build(make_zmod(5), symmetric_group(3));
  CHECK(b.carrier().cardinality() == 15625);  // 5^6
  CHECK(b.carrier().rank() == 6);
  Caps tight;
  tight.rank = 4;
  CHECK_THROWS_AS(GroupRing::build(make_zmod(5), symmetric_group(3), tight),
                  cap_error);
}

TEST_CASE("char-3 nilpotent element (1-g)^3 == 0 in Z/3[C3]") {
  GroupRing gr = GroupRing::build(make_zmod(3), cyclic_group(3));
  const FiniteRing &b = gr.carrier();
  CHECK(b.cardinality() == 27);
  Coeffs x = b.sub(gr.basis_element(0), gr.basis_element(1));  // 1 - g
  Coeffs p = b.mul(b.mul(x, x), x);
  CHECK(b.element(p).is_zero());
  CHECK(!b.element(b.mul(x, x)).is_zero());
  CHECK(!b.is_semiprime(64));
}

TEST_CASE("augmentation is a ring homomorphism onto R") {
  GroupRing gr = GroupRing::build(make_zmod(3), symmetric_group(3));
  const FiniteRing &b = gr.carrier();
  // aug(2 + 3g) = 0 over Z/5
  GroupRing gr5 = GroupRing::build(make_zmod(5), cyclic_group(2));
  Coeffs x = gr5.carrier().add(gr5.carrier().scale(2, gr5.basis_element(0)),
                               gr5.carrier().scale(3, gr5.basis_element(1)));
  CHECK(gr5.augmentation(x) == Coeffs{0});
  CHECK(gr5.augmentation(gr5.carrier().one()) == Coeffs{1});

  std::uint64_t state = 42;
  for (int trial = 0; trial < 200; ++trial) {
    Coeffs u(b.rank()), v(b.rank());
    for (std::size_t i = 0; i < b.rank(); ++i) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      u[i] = static_cast<std::int64_t>((state >> 33) % 3);
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      v[i] = static_cast<std::int64_t>((state >> 33) % 3);
    }
    CHECK(gr.augmentation(b.mul(u, v)) ==
          gr.coeff_ring().mul(gr.augmentation(u), gr.augmentation(v)));
    CHECK(gr.augmentation(b.add(u, v)) ==
          gr.coeff_ring().add(gr.augmentation(u), gr.augmentation(v)));
  }
}

TEST_CASE("augmentation ideals") {
  GroupRing gr = GroupRing::build(make_zmod(3), cyclic_group(2));
  SubgroupSet whole = gr.group().full_subgroup();
  GroupRing::AugIdeal ai = gr.augmentation_ideal(whole);
  CHECK(ai.ideal.cardinality() == 3);  // span of (1 - g)
  CHECK(ai.two_sided);

  SubgroupSet trivial = gr.group().trivial_subgroup();
  CHECK(gr.augmentation_ideal(trivial).ideal.cardinality() == 1);

  GroupRing gs = GroupRing::build(make_zmod(3), symmetric_group(3));
  SubgroupSet a3 = gs.group().derived_subgroup();
  GroupRing::AugIdeal ia3 = gs.augmentation_ideal(a3);
  CHECK(ia3.ideal.cardinality() == 81);  // 3^4
  CHECK(ia3.two_sided);

  // augmentation kernel equals the ideal of the whole group
  GroupRing::AugIdeal ig = gs.augmentation_ideal(gs.group().full_subgroup());
  CHECK(ig.ideal.cardinality() == 243);  // 3^5, kernel of augmentation
}

TEST_CASE("quotient by a normal subgroup is R[G/H]") {
  GroupRing gs = GroupRing::build(make_zmod(3), symmetric_group(3));
  SubgroupSet a3 = gs.group().derived_subgroup();
  GroupRing::SubgroupQuotient q = gs.quotient_by_subgroup(a3);
  CHECK(q.image.carrier().cardinality() == 9);  // Z/3[C2]
  CHECK(q.kernel.cardinality() == 81);
  // R[G]/I(G) == R and R[G]/I(1) == R[G]
  GroupRing::SubgroupQuotient qg =
      gs.quotient_by_subgroup(gs.group().full_subgroup());
  CHECK(qg.image.carrier().cardinality() == 3);
  GroupRing::SubgroupQuotient q1 =
      gs.quotient_by_subgroup(gs.group().trivial_subgroup());
  CHECK(q1.image.carrier().cardinality() == gs.carrier().cardinality());
  // non-normal H rejected
  SubgroupSet c2 = gs.group().make_subgroup({0, 1});
  CHECK_THROWS_AS(gs.quotient_by_subgroup(c2), error);
}

TEST_CASE("center of a group ring via solver and class sums") {
  GroupRing gs = GroupRing::build(make_zmod(5), symmetric_group(3));
  Submodule z = gs.center();
  CHECK(z.cardinality() == 125);  // 5^3, three conjugacy classes
  CHECK(z == gs.class_sum_span());

  // abelian G, commutative R: center is everything
  GroupRing ga = GroupRing::build(make_zmod(4), cyclic_group(4));
  CHECK(ga.center().cardinality() == ga.carrier().cardinality());

  // center chain Z(R)[Z(G)] <= Z(Z(R)[G]) <= Z(R[G])
  for (const auto &[rname, g] :
       std::vector<std::pair<std::string, FiniteGroup>>{
           {"Zmod(5)", symmetric_group(3)},
           {"Zmod(2)", quaternion8()},
           {"Zmod(6)", dihedral_group(4)}}) {
    FiniteRing r = rname == "Zmod(5)" ? make_zmod(5)
                   : rname == "Zmod(2)" ? make_zmod(2) : make_zmod(6);
    GroupRing gr = GroupRing::build(r, g);
    Submodule zz = gr.center_of_central_coeff();
    Submodule zc = gr.center();
    CHECK(zc.contains(zz));
    // Z(R)[Z(G)] inside Z(Z(R)[G]); Z(R) spans a block per central element
    std::vector<IntVec> rows;
    for (std::size_t zi : g.center().indices())
      for (const IntVec &zr : r.center().gen_rows()) {
        IntVec row(gr.carrier().rank(), Int(0));
        for (std::size_t t = 0; t < r.rank(); ++t) row[gr.block(zi, t)] = zr[t];
        rows.push_back(std::move(row));
      }
    Submodule zrzg = Submodule::span(gr.carrier().ambient(), rows);
    CHECK(zz.contains(zrzg));
  }
}

TEST_CASE("normalized units") {
  GroupRing gr = GroupRing::build(make_zmod(3), cyclic_group(2));
  std::vector<Coeffs> v = gr.normalized_units(64);
  std::set<Coeffs> vs(v.begin(), v.end());
  CHECK(vs == std::set<Coeffs>{{1, 0}, {0, 1}});  // {1, g}

  // U(R[G]) = U(R) x V(R[G]) for commutative R at small sizes
  const FiniteRing &b = gr.carrier();
  std::size_t units = b.units(64).size();
  std::size_t ur = gr.coeff_ring().units(64).size();
  CHECK(units == ur * v.size());
}
