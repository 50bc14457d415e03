#pragma once

#include <optional>

#include "derring/group_ring.hpp"

namespace derring {

/// Additive map on a FiniteRing satisfying the Leibniz rule, stored as the
/// images of the additive generators.
class Derivation {
public:
  static Derivation from_images(const FiniteRing &ring,
                                std::vector<Coeffs> images);
  static std::optional<Derivation> try_from_images(const FiniteRing &ring,
                                                   std::vector<Coeffs> images);
  static Derivation zero(const FiniteRing &ring);
  static Derivation inner(const FiniteRing &ring, const Coeffs &a);

  const FiniteRing &ring() const { return *ring_; }
  const std::vector<Coeffs> &images() const { return images_; }
  Coeffs apply(const Coeffs &x) const;
  bool is_zero() const;
  IntVec flat() const;  // concatenated images, the map-space coordinates
  Derivation operator+(const Derivation &o) const;
  Derivation operator-(const Derivation &o) const;
  bool operator==(const Derivation &o) const { return images_ == o.images_; }
  bool operator!=(const Derivation &o) const { return !(*this == o); }

private:
  Derivation(const FiniteRing &ring, std::vector<Coeffs> images)
      : ring_(&ring), images_(std::move(images)) {}
  const FiniteRing *ring_;
  std::vector<Coeffs> images_;
};

/// Leibniz check on every generator pair (bilinearity makes that sufficient)
/// plus additive well-definedness of the generator images.
bool is_derivation(const FiniteRing &ring, const std::vector<Coeffs> &images);

Derivation bracket(const Derivation &a, const Derivation &b);

/// Additive space of derivations, canonically presented as a Submodule of
/// either the full map space (one block per additive generator) or, for
/// R-derivations of a group ring, the reduced space of images of the group
/// basis elements.
class DerivationSpace {
public:
  enum class Kind { full, group_r };

  static DerivationSpace full_space(const FiniteRing &ring, Submodule coords);
  static DerivationSpace r_space(const GroupRing &gr, Submodule coords);

  Kind kind() const { return kind_; }
  const FiniteRing &ring() const { return *ring_; }
  const Submodule &coords() const { return coords_; }
  mpz_class cardinality() const { return coords_.cardinality(); }

  Derivation expand(const IntVec &coord_row) const;
  std::vector<Derivation> generators() const;
  std::optional<IntVec> coords_of(const Derivation &d) const;
  bool contains(const Derivation &d) const;

  DerivationSpace intersect_coords(const Submodule &s) const;

private:
  DerivationSpace(Kind k, const FiniteRing &ring, const GroupRing *gr,
                  Submodule coords)
      : kind_(k), ring_(&ring), gr_(gr), coords_(std::move(coords)) {}
  Kind kind_;
  const FiniteRing *ring_;
  const GroupRing *gr_;
  Submodule coords_;
};

/// Der(B): kernel of the Leibniz system over the map space.
DerivationSpace der(const FiniteRing &b, const Caps &caps = {});

/// Der_R(R[G]): R-derivations of the carrier, solved with one unknown block
/// per group element.
DerivationSpace der_r(const GroupRing &gr, const Caps &caps = {});

/// Witness a with inner(a) == d, canonical via Howell reduction; nullopt when
/// the linear system is inconsistent (d is outer).
std::optional<Coeffs> inner_witness(const FiniteRing &b, const Derivation &d);

/// x_H = |H|^{-1} sum_{a in H} a^{-1} d(a); postcondition d == inner(-x_H)
/// on R[H] is verified on every additive generator of R[H].
Coeffs averaging_witness(const GroupRing &gr, const Derivation &d,
                         const SubgroupSet &h);

/// Derivations with all images inside the center.
DerivationSpace zder(const FiniteRing &b, const Caps &caps = {});
DerivationSpace zder_r(const GroupRing &gr, const Caps &caps = {});

/// L_d(g) = g^{-1} d(g) for a group basis element.
Coeffs l_map(const GroupRing &gr, const Derivation &d, std::size_t gidx);

/// True when the coefficient of every t commuting with g vanishes in d(g);
/// requires the primes of |g| to be invertible in R.
bool coefficient_vanishing(const GroupRing &gr, const Derivation &d,
                           std::size_t gidx);

}  // namespace derring
