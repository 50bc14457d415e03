#pragma once

#include <optional>

#include "derring/derivation.hpp"

namespace derring {

/// Finite Lie ring: additive group prod_i Z/n_i plus the antisymmetric
/// bracket table of the generators (Jacobi checked at construction).
class FiniteLieRing {
public:
  static FiniteLieRing create(Ambient amb, std::vector<std::vector<Coeffs>> table,
                              std::string name,
                              CheckLevel check = CheckLevel::full);

  std::size_t rank() const { return amb_.rank(); }
  const Ambient &ambient() const { return amb_; }
  mpz_class cardinality() const { return amb_.cardinality(); }
  const std::string &name() const { return name_; }

  const Coeffs &table(std::size_t i, std::size_t j) const {
    return tab_[i * rank() + j];
  }
  Coeffs bracket(const Coeffs &x, const Coeffs &y) const;
  Coeffs add(const Coeffs &x, const Coeffs &y) const;
  Coeffs generator(std::size_t i) const;
  Coeffs zero() const { return Coeffs(rank(), 0); }
  Coeffs reduce(Coeffs v) const { return amb_.reduced(std::move(v)); }

private:
  FiniteLieRing() = default;
  Ambient amb_;
  std::vector<Coeffs> tab_;
  std::string name_;
};

FiniteLieRing from_associative(const FiniteRing &b);

struct LieSeries {
  std::vector<Submodule> terms;  // until stabilization
  bool reached_zero;
};

LieSeries lower_central_series(const FiniteLieRing &l);
LieSeries derived_series(const FiniteLieRing &l);
/// class n: gamma_{n+1} == 0 first; nullopt when the series stabilizes
/// above zero.
std::optional<int> nilpotency_class(const FiniteLieRing &l);
/// length n: D^{(n+1)} == 0 first.
std::optional<int> solvable_length(const FiniteLieRing &l);
Submodule lie_center(const FiniteLieRing &l);

/// Lie ring abstracted from a subquotient, together with the projection
/// used to map parent vectors onto its coordinates.
struct LiePresentation {
  FiniteLieRing lie;
  QuotientPresentation pres;
};

/// s1/s2 inside an associative carrier, bracket [x,y] = xy - yx; s2 must be
/// a Lie ideal of s1 (checked).
LiePresentation lie_subquotient(const FiniteRing &carrier, const Submodule &s1,
                                const Submodule &s2, const std::string &name);

/// A derivation space as an abstract Lie ring under the derivation bracket.
LiePresentation derivation_lie(const DerivationSpace &space,
                               const std::string &name);

/// IDer_R R[G] built both ways: (a) the span of the inner derivations induced
/// by Z(R)[G]; (b) the quotient (Z(R)[G])^L / Z(Z(R)[G]).  The Lie isomorphism
/// between them is verified on generators.
struct InnerDerLie {
  LiePresentation via_inner;
  LiePresentation via_quotient;
  DerivationSpace inner_space;  // coordinates of route (a) in map space
};
InnerDerLie inner_der_lie(const GroupRing &gr, const Caps &caps = {});

/// Left-normed [x, y, y, ..., y] with n brackets, inside an associative ring.
Coeffs engel_bracket(const FiniteRing &b, const Coeffs &x, const Coeffs &y,
                     std::size_t n);

struct EngelReport {
  bool engel;  // every group pair stabilizes at zero
  std::size_t max_steps;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // non-Engel pair
};
/// Scan all group-element pairs (g, h) for [g,_m h] == 0, with cycle
/// detection on the bracket orbit.
EngelReport engel_scan(const GroupRing &gr);

/// [x^k, y] == k x^{k-1} [x, y]; requires [[x, y], x] == 0 (throws otherwise).
bool commutator_power_identity(const FiniteRing &b, const Coeffs &x,
                               const Coeffs &y, std::uint64_t k);

}  // namespace derring
