#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "derring/solder.hpp"

using namespace derring;

namespace {
Solder zero_solder(const FiniteRing &b) {
  return Solder{std::vector<Coeffs>(
      static_cast<std::size_t>(b.cardinality().get_ui()), b.zero())};
}
}  // namespace

TEST_CASE("zero map is a solder; h(1) forced to 0") {
  for (std::int64_t n : {2, 3, 5, 6}) {
    FiniteRing b = make_zmod(n);
    CHECK(is_solder(b, zero_solder(b).values, 64));
    for (const Solder &h : enumerate_solders(b, 64)) {
      CHECK(b.element(h.values[b.element_index(b.one())]).is_zero());
    }
  }
}

TEST_CASE("solder counts on small cyclic rings") {
  // Z/5: h(0) free, units forced to zero -> 5 solders
  CHECK(enumerate_solders(make_zmod(5), 64).size() == 5);
  // Z/2: h(1) = 0, h(0) free -> 2
  CHECK(enumerate_solders(make_zmod(2), 64).size() == 2);
  // Z/3: 3 solders
  CHECK(enumerate_solders(make_zmod(3), 64).size() == 3);
}

TEST_CASE("brute force cross-check of the solder enumeration on Z/4") {
  FiniteRing b = make_zmod(4);
  std::vector<Solder> fast = enumerate_solders(b, 64);
  // raw dense scan over all 4^4 value tables
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < 256; ++mask) {
    std::vector<Coeffs> vals(4);
    std::size_t m = mask;
    for (int i = 0; i < 4; ++i) {
      vals[static_cast<std::size_t>(i)] = {static_cast<std::int64_t>(m % 4)};
      m /= 4;
    }
    if (is_solder(b, vals, 64)) ++count;
  }
  CHECK(fast.size() == count);
}

TEST_CASE("delta from solder") {
  FiniteRing z5 = make_zmod(5);
  for (const Solder &h : enumerate_solders(z5, 64)) {
    auto d = delta_from_solder(z5, h, 64);
    REQUIRE(d.has_value());
    CHECK(d->is_zero());  // units map to 0 and 0 * h(0) = 0
  }
}

TEST_CASE("property report clean on every enumerated solder") {
  for (std::int64_t n = 2; n <= 8; ++n) {
    FiniteRing b = make_zmod(n);
    for (const Solder &h : enumerate_solders(b, 64)) {
      SolderReport rep = check_solder_properties(b, h, 64);
      CHECK(rep.clean());
      // L9(v) on Z/6: idempotents 0,1,3,4 all map to zero
      if (n == 6)
        for (std::int64_t e : {0, 1, 3, 4})
          CHECK(b.element(h.values[b.element_index(Coeffs{e})]).is_zero());
    }
  }
}
