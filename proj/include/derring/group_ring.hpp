#pragma once

#include "derring/finite_group.hpp"
#include "derring/finite_ring.hpp"

namespace derring {

/// R[G] presented as a FiniteRing whose additive generators are the pairs
/// (group element, coefficient-ring generator); block g holds the copy of
/// R^+ attached to g.
class GroupRing {
public:
  static GroupRing build(const FiniteRing &r, const FiniteGroup &g,
                         const Caps &caps = {});

  const FiniteRing &coeff_ring() const { return r_; }
  const FiniteGroup &group() const { return g_; }
  const FiniteRing &carrier() const { return carrier_; }

  std::size_t block(std::size_t gidx, std::size_t t) const {
    return gidx * r_.rank() + t;
  }
  /// 1_R sitting at block g (the carrier copy of the group element).
  Coeffs basis_element(std::size_t gidx) const;
  /// coefficient of the group element g inside x, as an element of R
  Coeffs coefficient_at(const Coeffs &x, std::size_t gidx) const;
  /// elements of R embedded at the identity block
  Coeffs embed_coeff(const Coeffs &r_elt) const;
  std::vector<std::size_t> support(const Coeffs &x) const;

  Coeffs augmentation(const Coeffs &x) const;  // element of R

  struct AugIdeal {
    Submodule ideal;
    bool two_sided;
  };
  AugIdeal augmentation_ideal(const SubgroupSet &h) const;

  Submodule center() const;             // Z(R[G]) via the linear solver
  Submodule central_coeff_span() const;  // Z(R)[G]
  Submodule center_of_central_coeff() const;  // Z(Z(R)[G])
  Submodule class_sum_span() const;     // span of R-coefficient class sums

  std::vector<Coeffs> normalized_units(std::int64_t cap) const;

  struct SubgroupQuotient;
  /// R[G]/I_R(H) ~ R[G/H] for normal H; the isomorphism is verified
  /// multiplicatively on every generator pair.
  SubgroupQuotient quotient_by_subgroup(const SubgroupSet &h,
                                        const Caps &caps = {}) const;

private:
  GroupRing(FiniteRing r, FiniteGroup g, FiniteRing carrier)
      : r_(std::move(r)), g_(std::move(g)), carrier_(std::move(carrier)) {}
  FiniteRing r_;
  FiniteGroup g_;
  FiniteRing carrier_;
};

struct GroupRing::SubgroupQuotient {
  GroupRing image;   // R[G/H]
  IntMatrix map;     // carrier -> image carrier, basis-block projection
  Submodule kernel;  // == augmentation ideal of H
};

}  // namespace derring
