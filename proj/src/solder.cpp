#include "derring/solder.hpp"

#include <algorithm>
#include <functional>

namespace derring {

namespace {
using i64 = std::int64_t;

bool vec_zero(const Coeffs &v) {
  return std::all_of(v.begin(), v.end(), [](i64 x) { return x == 0; });
}
}  // namespace

bool is_solder(const FiniteRing &b, const std::vector<Coeffs> &values,
               std::int64_t cap) {
  const std::size_t count = b.element_count_checked(cap);
  if (values.size() != count) throw dim_error("is_solder: value table size");
  for (std::size_t ia = 0; ia < count; ++ia) {
    Coeffs a = b.element_at(ia);
    for (std::size_t ib = 0; ib < count; ++ib) {
      Coeffs bb = b.element_at(ib);
      Coeffs s = b.add(a, bb);
      Coeffs lhs = b.mul(s, values[b.element_index(s)]);
      Coeffs rhs = b.add(b.mul(a, values[ia]), b.mul(bb, values[ib]));
      if (lhs != rhs) return false;
      if (ia != 0 && ib != 0) {
        Coeffs p = b.mul(a, bb);
        if (values[b.element_index(p)] != b.add(values[ia], values[ib]))
          return false;
      }
    }
  }
  return true;
}

std::vector<Solder> enumerate_solders(const FiniteRing &b, std::int64_t cap) {
  const std::size_t count = b.element_count_checked(
      std::min<std::int64_t>(cap, 64));  // dense tables only on tiny rings
  // partial-assignment backtracking in element order; a condition instance is
  // checked as soon as every value it mentions is assigned
  std::vector<Coeffs> values(count);
  std::vector<bool> assigned(count, false);
  std::vector<Solder> out;

  auto consistent = [&](std::size_t just) {
    for (std::size_t ia = 0; ia < count; ++ia) {
      if (!assigned[ia]) continue;
      Coeffs a = b.element_at(ia);
      for (std::size_t ib = 0; ib <= ia; ++ib) {
        if (!assigned[ib]) continue;
        Coeffs bb = b.element_at(ib);
        Coeffs s = b.add(a, bb);
        std::size_t is = b.element_index(s);
        if (assigned[is] && (is == just || ia == just || ib == just)) {
          Coeffs lhs = b.mul(s, values[is]);
          Coeffs rhs = b.add(b.mul(a, values[ia]), b.mul(bb, values[ib]));
          if (lhs != rhs) return false;
        }
        if (ia != 0 && ib != 0) {
          std::size_t ip = b.element_index(b.mul(a, bb));
          if (assigned[ip] && (ip == just || ia == just || ib == just))
            if (values[ip] != b.add(values[ia], values[ib])) return false;
          std::size_t ipr = b.element_index(b.mul(bb, a));
          if (assigned[ipr] && (ipr == just || ia == just || ib == just))
            if (values[ipr] != b.add(values[ib], values[ia])) return false;
        }
      }
    }
    return true;
  };

  std::function<void(std::size_t)> assign = [&](std::size_t slot) {
    if (slot == count) {
      out.push_back(Solder{values});
      return;
    }
    for (std::size_t c = 0; c < count; ++c) {
      values[slot] = b.element_at(c);
      assigned[slot] = true;
      if (consistent(slot)) assign(slot + 1);
    }
    assigned[slot] = false;
  };
  assign(0);
  return out;
}

std::optional<Derivation> delta_from_solder(const FiniteRing &b,
                                            const Solder &h, std::int64_t cap) {
  const std::size_t count = b.element_count_checked(cap);
  if (!is_solder(b, h.values, cap))
    throw error("delta_from_solder: not a solder");
  for (std::size_t ix = 0; ix < count; ++ix) {
    Coeffs x = b.element_at(ix);
    for (std::size_t i = 0; i < b.rank(); ++i) {
      Coeffs br = b.commutator(h.values[ix], b.generator(i));
      if (!vec_zero(b.mul(x, br))) return std::nullopt;
    }
  }
  std::vector<Coeffs> images(b.rank());
  for (std::size_t i = 0; i < b.rank(); ++i) {
    Coeffs g = b.generator(i);
    images[i] = b.mul(g, h.values[b.element_index(g)]);
  }
  Derivation d = Derivation::from_images(b, std::move(images));
  // the additive extension must reproduce the dense map
  for (std::size_t ix = 0; ix < count; ++ix) {
    Coeffs x = b.element_at(ix);
    if (d.apply(x) != b.mul(x, h.values[ix]))
      throw error("delta_from_solder: dense map is not the additive extension");
  }
  return d;
}

SolderReport check_solder_properties(const FiniteRing &b, const Solder &h,
                                     std::int64_t cap) {
  const std::size_t count = b.element_count_checked(cap);
  SolderReport rep{};
  rep.conjugation_symmetric = true;
  rep.idempotents_zero = true;
  rep.inverse_antisymmetric = true;
  rep.involution_two_torsion = true;
  rep.two_torsion_free = b.ambient().exponent() % 2 == 1;
  rep.h_two_zero = vec_zero(
      h.values[b.element_index(b.scale(2, b.one()))]);
  for (std::size_t ix = 0; ix < count; ++ix) {
    Coeffs x = b.element_at(ix);
    for (std::size_t iy = 0; iy < count; ++iy) {
      Coeffs y = b.element_at(iy);
      if (h.values[b.element_index(b.mul(x, y))] !=
          h.values[b.element_index(b.mul(y, x))])
        rep.conjugation_symmetric = false;
      if (b.mul(x, y) == b.one())
        if (!vec_zero(b.add(h.values[ix], h.values[iy])))
          rep.inverse_antisymmetric = false;
    }
    // the multiplicativity condition only covers nonzero arguments, so only
    // nonzero idempotents are forced; h(0) stays free unless zero divisors
    // pin it down
    if (ix != 0 && b.mul(x, x) == x && !vec_zero(h.values[ix]))
      rep.idempotents_zero = false;
    if (b.mul(x, x) == b.one() && !vec_zero(b.scale(2, h.values[ix])))
      rep.involution_two_torsion = false;
  }
  rep.delta_is_derivation = delta_from_solder(b, h, cap).has_value();
  return rep;
}

}  // namespace derring
