#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "derring/lie_ring.hpp"

using namespace derring;

TEST_CASE("associated Lie ring of a commutative ring is abelian") {
  FiniteLieRing l = from_associative(make_zmod(12));
  CHECK(nilpotency_class(l) == 1);
  GroupRing g22 = GroupRing::build(make_zmod(2), cyclic_group(2));
  FiniteLieRing l22 = from_associative(g22.carrier());
  CHECK(nilpotency_class(l22).value() <= 1);
  CHECK(solvable_length(l22).value() <= 1);
}

TEST_CASE("derived series of M2(F2) as a Lie ring") {
  FiniteRing m2 = make_matrix_ring(make_zmod(2), 2);
  FiniteLieRing l = from_associative(m2);
  LieSeries ds = derived_series(l);
  REQUIRE(ds.reached_zero);
  // B > span{E12, E21, I} > span{I} > 0
  REQUIRE(ds.terms.size() == 4);
  CHECK(ds.terms[0].cardinality() == 16);
  CHECK(ds.terms[1].cardinality() == 8);
  CHECK(ds.terms[2].cardinality() == 2);
  CHECK(ds.terms[3].cardinality() == 1);
  CHECK(ds.terms[2].contains(to_ivec(m2.one())));
  CHECK(solvable_length(l) == 3);
}

TEST_CASE("der(M2(F2)) is solvable of length 2 but not nilpotent") {
  FiniteRing m2 = make_matrix_ring(make_zmod(2), 2);
  DerivationSpace space = der(m2);
  LiePresentation lp = derivation_lie(space, "der(M2(F2))");
  CHECK(lp.lie.cardinality() == 8);
  CHECK(!nilpotency_class(lp.lie).has_value());
  CHECK(solvable_length(lp.lie) == 2);
  LieSeries lcs = lower_central_series(lp.lie);
  CHECK(!lcs.reached_zero);
  CHECK(lcs.terms.back().cardinality() == 4);
}

TEST_CASE("lie ring construction rejects broken tables") {
  // bracket table violating antisymmetry
  std::vector<std::vector<Coeffs>> tab(2, std::vector<Coeffs>(2, Coeffs{0, 0}));
  tab[0][1] = {1, 0};
  tab[1][0] = {1, 0};  // should be the negative
  CHECK_THROWS_AS(
      FiniteLieRing::create(Ambient({5, 5}), tab, "bad"), error);
}

TEST_CASE("inner_der_lie on Z/5[S3]: both routes, 125 elements") {
  GroupRing gr = GroupRing::build(make_zmod(5), symmetric_group(3));
  InnerDerLie ider = inner_der_lie(gr);
  CHECK(ider.via_inner.lie.cardinality() == 125);
  CHECK(ider.via_quotient.lie.cardinality() == 125);
  // S3 derived subgroup is not central, so IDer is nonabelian
  bool abelian = true;
  for (std::size_t i = 0; i < ider.via_quotient.lie.rank(); ++i)
    for (std::size_t j = 0; j < ider.via_quotient.lie.rank(); ++j)
      for (std::int64_t c : ider.via_quotient.lie.table(i, j))
        if (c != 0) abelian = false;
  CHECK(!abelian);
}

namespace {
bool ider_abelian(const InnerDerLie &ider) {
  const FiniteLieRing &l = ider.via_quotient.lie;
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < l.rank(); ++j)
      for (std::int64_t v : l.table(i, j))
        if (v != 0) return false;
  return true;
}
}  // namespace

TEST_CASE("inner_der_lie abelian iff derived subgroup central, over F2") {
  struct Case {
    FiniteGroup g;
    bool expect_abelian;
  };
  std::vector<Case> cases;
  cases.push_back({symmetric_group(3), false});
  cases.push_back({dihedral_group(4), true});
  cases.push_back({quaternion8(), true});
  for (const Case &c : cases) {
    GroupRing gr = GroupRing::build(make_zmod(2), c.g);
    CHECK(ider_abelian(inner_der_lie(gr)) == c.expect_abelian);
  }
  // abelian G over a commutative ring: IDer is trivial
  GroupRing ga = GroupRing::build(make_zmod(4), cyclic_group(6));
  InnerDerLie ia = inner_der_lie(ga);
  CHECK(ia.via_quotient.lie.cardinality() == 1);
}

TEST_CASE("the abelian criterion is characteristic sensitive") {
  // Q8' = {1,-1} is central, yet over Z/3 the commutator [i,j] = 2k is not
  // central, so IDer(Z/3[Q8]) is nonabelian; over Z/2 it collapses.
  GroupRing g3 = GroupRing::build(make_zmod(3), quaternion8());
  CHECK(!ider_abelian(inner_der_lie(g3)));
  GroupRing g2 = GroupRing::build(make_zmod(2), quaternion8());
  CHECK(ider_abelian(inner_der_lie(g2)));
}

TEST_CASE("P21 family verdicts over prime fields") {
  struct Case {
    std::int64_t p;
    FiniteGroup g;
    bool nilpotent, solvable;
  };
  std::vector<Case> cases;
  cases.push_back({2, quaternion8(), true, true});
  cases.push_back({2, dihedral_group(4), true, true});
  cases.push_back({3, symmetric_group(3), false, true});
  cases.push_back({2, symmetric_group(3), false, true});
  cases.push_back({5, symmetric_group(3), false, false});
  for (const Case &c : cases) {
    GroupRing gr = GroupRing::build(make_zmod(c.p), c.g);
    InnerDerLie ider = inner_der_lie(gr);
    CHECK(nilpotency_class(ider.via_quotient.lie).has_value() == c.nilpotent);
    CHECK(solvable_length(ider.via_quotient.lie).has_value() == c.solvable);
  }
}

TEST_CASE("dense bracket-closure oracle confirms series on F3[S3]") {
  GroupRing gr = GroupRing::build(make_zmod(3), symmetric_group(3));
  InnerDerLie ider = inner_der_lie(gr);
  const FiniteLieRing &l = ider.via_quotient.lie;
  // dense lower central series: closure of all brackets with everything
  std::size_t card = static_cast<std::size_t>(l.cardinality().get_ui());
  auto element_at = [&](std::size_t idx) {
    Coeffs v(l.rank());
    for (std::size_t i = 0; i < l.rank(); ++i) {
      v[i] = static_cast<std::int64_t>(
          idx % static_cast<std::size_t>(l.ambient().orders[i]));
      idx /= static_cast<std::size_t>(l.ambient().orders[i]);
    }
    return v;
  };
  std::vector<Coeffs> all;
  for (std::size_t i = 0; i < card; ++i) all.push_back(element_at(i));
  auto close_add = [&](std::set<Coeffs> seed) {
    std::vector<Coeffs> queue(seed.begin(), seed.end());
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (const Coeffs &g : std::vector<Coeffs>(seed.begin(), seed.end())) {
        Coeffs s = l.add(queue[h], g);
        if (seed.insert(s).second) queue.push_back(s);
      }
    // need full closure under addition of everything present
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Coeffs> cur(seed.begin(), seed.end());
      for (const Coeffs &a : cur)
        for (const Coeffs &b : cur)
          if (seed.insert(l.add(a, b)).second) grew = true;
    }
    return seed;
  };
  std::set<Coeffs> cur(all.begin(), all.end());
  LieSeries lcs = lower_central_series(l);
  for (std::size_t step = 1; step < lcs.terms.size(); ++step) {
    std::set<Coeffs> brackets;
    brackets.insert(l.zero());
    for (const Coeffs &a : cur)
      for (const Coeffs &b : all) brackets.insert(l.bracket(a, b));
    cur = close_add(brackets);
    CHECK(cur.size() == lcs.terms[step].cardinality());
    for (const Coeffs &v : cur)
      CHECK(lcs.terms[step].contains(to_ivec(v)));
  }
}

TEST_CASE("engel brackets") {
  FiniteRing m2 = make_matrix_ring(make_zmod(2), 2);
  Coeffs x{0, 1, 0, 0}, y{1, 0, 0, 0};
  CHECK(engel_bracket(m2, x, y, 1) == m2.commutator(x, y));
  // [x,_n x] == 0
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(m2.element(engel_bracket(m2, x, x, n)).is_zero());

  // S3 over Z/5 has a non-Engel pair; abelian groups are Engel
  GroupRing gs = GroupRing::build(make_zmod(5), symmetric_group(3));
  EngelReport rep = engel_scan(gs);
  CHECK(!rep.engel);
  CHECK(rep.witness.has_value());
  GroupRing gc = GroupRing::build(make_zmod(5), cyclic_group(4));
  CHECK(engel_scan(gc).engel);
}

TEST_CASE("commutator power identity") {
  FiniteRing m24 = make_matrix_ring(make_zmod(4), 2);
  // x strictly upper triangular, y = E11, k = 3
  Coeffs x{0, 1, 0, 0}, y{1, 0, 0, 0};
  CHECK(commutator_power_identity(m24, x, y, 3));
  // central x: both sides vanish
  CHECK(commutator_power_identity(m24, m24.one(), y, 4));
  // violated precondition throws: [[E11, E12], E11] = E12 != 0
  FiniteRing m22 = make_matrix_ring(make_zmod(2), 2);
  Coeffs e11{1, 0, 0, 0}, e12{0, 1, 0, 0};
  CHECK_THROWS_AS(commutator_power_identity(m22, e11, e12, 2), error);

  // 500 rejection-sampled cases over M2(Z/6)
  FiniteRing m26 = make_matrix_ring(make_zmod(6), 2);
  std::uint64_t state = 99;
  auto rnd = [&]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return (state >> 33);
  };
  std::size_t accepted = 0, attempts = 0;
  while (accepted < 500 && attempts < 200000) {
    ++attempts;
    Coeffs x2(4), y2(4);
    for (int i = 0; i < 4; ++i) {
      x2[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rnd() % 6);
      y2[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rnd() % 6);
    }
    Coeffs c = m26.commutator(m26.commutator(x2, y2), x2);
    if (!m26.element(c).is_zero()) continue;
    ++accepted;
    CHECK(commutator_power_identity(m26, x2, y2, 2 + accepted % 5));
  }
  CHECK(accepted == 500);
}

TEST_CASE("lie center of der and L23 style properties") {
  FiniteRing m2 = make_matrix_ring(make_zmod(2), 2);
  DerivationSpace space = der(m2);
  LiePresentation lp = derivation_lie(space, "der");
  Submodule zc = lie_center(lp.lie);
  Submodule center = m2.center();
  for (const IntVec &row : zc.gen_rows()) {
    Derivation d = space.expand(lp.pres.lift(row));
    for (const Coeffs &im : d.images()) CHECK(center.contains(to_ivec(im)));
  }
}
