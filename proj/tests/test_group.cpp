#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "derring/finite_group.hpp"

using namespace derring;

TEST_CASE("family constructors") {
  CHECK(symmetric_group(3).order() == 6);
  CHECK(symmetric_group(4).order() == 24);
  CHECK(alternating_group(4).order() == 12);
  CHECK(dihedral_group(4).order() == 8);
  CHECK(quaternion8().order() == 8);
  CHECK(heisenberg_group(3).order() == 27);
  CHECK(elementary_abelian(2, 3).order() == 8);
  CHECK(direct_product(cyclic_group(2), cyclic_group(4)).order() == 8);

  // Q8 has exactly one element of order 2
  FiniteGroup q8 = quaternion8();
  int involutions = 0;
  for (std::size_t i = 0; i < q8.order(); ++i)
    if (q8.element_order(i) == 2) ++involutions;
  CHECK(involutions == 1);

  // D4 has center of size 2
  CHECK(dihedral_group(4).center().size() == 2);
}

TEST_CASE("from_cayley validation") {
  // identity not at 0
  std::vector<std::vector<std::size_t>> t = {{1, 0}, {0, 1}};
  CHECK_THROWS_AS(FiniteGroup::from_cayley(t, "bad"), error);
  // not a Latin square
  std::vector<std::vector<std::size_t>> t2 = {{0, 1}, {1, 1}};
  CHECK_THROWS_AS(FiniteGroup::from_cayley(t2, "bad"), error);
  // valid C2
  std::vector<std::vector<std::size_t>> t3 = {{0, 1}, {1, 0}};
  CHECK(FiniteGroup::from_cayley(t3, "C2").order() == 2);
}

TEST_CASE("structure of S3") {
  FiniteGroup s3 = symmetric_group(3);
  CHECK(s3.center().size() == 1);
  CHECK(s3.derived_subgroup().size() == 3);
  auto classes = s3.conjugacy_classes();
  std::vector<std::size_t> sizes;
  for (const auto &c : classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3});
  CHECK(!s3.nilpotency_class().has_value());
  CHECK(s3.is_solvable());
  CHECK(s3.upper_central_series().back().size() == 1);
  // quotient S3 / A3 is C2
  SubgroupSet a3 = s3.derived_subgroup();
  FiniteGroup q = s3.quotient(a3);
  CHECK(q.order() == 2);
  CHECK(q.is_abelian());
}

TEST_CASE("central series and nilpotency") {
  FiniteGroup q8 = quaternion8();
  auto up = q8.upper_central_series();
  REQUIRE(up.size() == 3);
  CHECK(up[0].size() == 1);
  CHECK(up[1].size() == 2);
  CHECK(up[2].size() == 8);
  CHECK(q8.nilpotency_class() == 2);
  auto low = q8.lower_central_series();
  CHECK(static_cast<int>(low.size()) - 1 == 2);

  CHECK(cyclic_group(6).nilpotency_class() == 1);
  CHECK(cyclic_group(1).nilpotency_class() == 0);
  CHECK(heisenberg_group(3).nilpotency_class() == 2);
  CHECK(!alternating_group(4).nilpotency_class().has_value());
  CHECK(alternating_group(4).is_solvable());
  CHECK(!alternating_group(5).is_solvable());
}

TEST_CASE("exponent, pi, p-abelian") {
  FiniteGroup g = direct_product(cyclic_group(2), cyclic_group(4));
  CHECK(g.exponent() == 4);
  CHECK(g.pi() == std::vector<std::int64_t>{2});
  FiniteGroup s3 = symmetric_group(3);
  CHECK(s3.exponent() == 6);
  CHECK(s3.pi() == std::vector<std::int64_t>{2, 3});
  CHECK(s3.is_p_abelian(3));
  CHECK(!s3.is_p_abelian(2));
  CHECK(quaternion8().is_p_abelian(2));
}

TEST_CASE("conjugacy class sizes partition the order") {
  for (const FiniteGroup &g :
       {symmetric_group(4), quaternion8(), dihedral_group(5),
        heisenberg_group(3)}) {
    std::size_t total = 0;
    for (const auto &c : g.conjugacy_classes()) {
      total += c.size();
      CHECK(g.order() % c.size() == 0);
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("abelian iff trivial derived subgroup iff center is everything") {
  for (const FiniteGroup &g :
       {cyclic_group(8), symmetric_group(3), quaternion8(),
        elementary_abelian(3, 2), dihedral_group(6)}) {
    bool ab = g.is_abelian();
    CHECK(ab == (g.derived_subgroup().size() == 1));
    CHECK(ab == (g.center().size() == g.order()));
  }
}

TEST_CASE("subgroup enumeration") {
  FiniteGroup s3 = symmetric_group(3);
  CHECK(s3.all_subgroups().size() == 6);
  CHECK(s3.normal_subgroups().size() == 3);
  FiniteGroup q8 = quaternion8();
  CHECK(q8.all_subgroups().size() == 6);
  // every subgroup of Q8 is normal
  CHECK(q8.normal_subgroups().size() == 6);
  FiniteGroup d4 = dihedral_group(4);
  CHECK(d4.all_subgroups().size() == 10);
}

TEST_CASE("quotients relabel cosets deterministically") {
  FiniteGroup d4 = dihedral_group(4);
  SubgroupSet z = d4.center();
  FiniteGroup q = d4.quotient(z);
  CHECK(q.order() == 4);
  CHECK(q.is_abelian());
  CHECK(q.exponent() == 2);  // D4 / Z(D4) is the Klein four group
  CHECK_THROWS_AS(
      symmetric_group(3).quotient(symmetric_group(3).make_subgroup({0, 1})),
      error);
}

TEST_CASE("upper and lower central series agree on the class") {
  for (const FiniteGroup &g :
       {quaternion8(), dihedral_group(4), heisenberg_group(3),
        cyclic_group(12), direct_product(quaternion8(), cyclic_group(3))}) {
    auto up = g.nilpotency_class();
    auto low = g.lower_central_series();
    bool lower_reaches_one = low.back().size() == 1;
    CHECK(up.has_value() == lower_reaches_one);
    if (up) CHECK(*up == static_cast<int>(low.size()) - 1);
  }
}
