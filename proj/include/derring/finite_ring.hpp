#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "derring/submodule.hpp"

namespace derring {

using Coeffs = std::vector<std::int64_t>;

enum class CheckLevel { full, spot, none };

/// Enumeration and solver limits.  Exceeding one raises cap_error; nothing is
/// ever truncated silently.
struct Caps {
  std::int64_t enumeration = 4096;
  std::int64_t solve_unknowns = 600;
  std::int64_t rank = 64;
  std::int64_t solder_elements = 16;
  double oracle_log2_images = 20.0;
};

class FiniteRing;

class RingElement {
public:
  RingElement(const FiniteRing &ring, Coeffs c);
  const Coeffs &coeffs() const { return c_; }
  const FiniteRing &ring() const { return *ring_; }
  bool is_zero() const;
  bool operator==(const RingElement &o) const { return c_ == o.c_; }
  bool operator!=(const RingElement &o) const { return !(*this == o); }
  bool operator<(const RingElement &o) const { return c_ < o.c_; }
  RingElement operator+(const RingElement &o) const;
  RingElement operator-(const RingElement &o) const;
  RingElement operator*(const RingElement &o) const;
  std::string str() const;

private:
  const FiniteRing *ring_;
  Coeffs c_;
};

/// Finite associative unital ring: additive group prod_i Z/n_i plus the
/// bilinear multiplication table of the generators.
class FiniteRing {
public:
  static FiniteRing create(Ambient amb,
                           std::vector<std::vector<Coeffs>> table, Coeffs one,
                           std::string name, CheckLevel check = CheckLevel::full);

  std::size_t rank() const { return amb_.rank(); }
  const Ambient &ambient() const { return amb_; }
  mpz_class cardinality() const { return amb_.cardinality(); }
  const std::string &name() const { return name_; }
  void rename(std::string n) { name_ = std::move(n); }

  const Coeffs &one() const { return one_; }
  Coeffs zero() const { return Coeffs(rank(), 0); }
  const Coeffs &table(std::size_t i, std::size_t j) const {
    return tab_[i * rank() + j];
  }

  Coeffs reduce(Coeffs v) const { return amb_.reduced(std::move(v)); }
  Coeffs mul(const Coeffs &x, const Coeffs &y) const;
  Coeffs add(const Coeffs &x, const Coeffs &y) const;
  Coeffs sub(const Coeffs &x, const Coeffs &y) const;
  Coeffs neg(const Coeffs &x) const;
  Coeffs scale(std::int64_t c, const Coeffs &x) const;
  Coeffs commutator(const Coeffs &x, const Coeffs &y) const;
  Coeffs power(const Coeffs &x, std::uint64_t k) const;  // k >= 1

  RingElement element(Coeffs c) const { return RingElement(*this, std::move(c)); }
  RingElement one_element() const { return element(one_); }
  RingElement zero_element() const { return element(zero()); }
  Coeffs generator(std::size_t i) const;

  /// (v * g_j) and (g_j * v) as integer matrices acting on coefficient
  /// columns: row c, column u gives the coordinate-c coefficient of g_u * v
  /// (resp. v * g_u).
  IntMatrix left_mul_matrix(const Coeffs &v) const;   // x -> v * x
  IntMatrix right_mul_matrix(const Coeffs &v) const;  // x -> x * v

  // mixed-radix element enumeration: index <-> coefficient vector
  std::size_t element_count_checked(std::int64_t cap) const;
  Coeffs element_at(std::size_t index) const;
  std::size_t element_index(const Coeffs &v) const;

  // structure queries
  Submodule center() const;
  bool is_commutative() const;
  std::optional<Coeffs> inverse(const Coeffs &v) const;
  bool is_unit(const Coeffs &v) const { return inverse(v).has_value(); }
  std::vector<RingElement> units(std::int64_t cap) const;
  std::vector<RingElement> idempotents(std::int64_t cap) const;
  bool is_semiprime(std::int64_t cap) const;
  std::optional<Coeffs> semiprime_witness(std::int64_t cap) const;
  bool is_prime(std::int64_t cap) const;
  struct Radical {
    Submodule ideal;
    int nilpotency_index;  // least k with ideal^k == 0
  };
  Radical prime_radical(std::int64_t cap) const;
  Submodule annihilator(const Submodule &k) const;
  Submodule commutator_span() const;   // additive span of [g_i, g_j]
  Submodule commutator_ideal() const;  // two-sided ideal closure
  bool is_invertible_prime(std::int64_t p) const;
  std::vector<std::int64_t> pi_additive() const;

private:
  FiniteRing() = default;
  void validate(CheckLevel check) const;

  Ambient amb_;
  std::vector<Coeffs> tab_;  // rank*rank entries, each of length rank
  Coeffs one_;
  std::string name_;
};

FiniteRing make_zmod(std::int64_t n);
FiniteRing make_matrix_ring(const FiniteRing &r, std::size_t k);
FiniteRing make_product(const FiniteRing &a, const FiniteRing &b);
/// GF(p^e) as Z/p[x] modulo a monic irreducible; the default modulus is the
/// lexicographically first irreducible of degree e.
FiniteRing make_field(std::int64_t p, std::size_t e);
FiniteRing make_field(std::int64_t p, const std::vector<std::int64_t> &monic);

std::vector<std::int64_t> prime_factors(std::int64_t n);

struct RingQuotient {
  FiniteRing ring;
  QuotientPresentation pres;  // project/lift between parent and quotient
};
/// B / ideal via Smith change of basis; validates that `ideal` really is a
/// two-sided ideal.
RingQuotient quotient_ring(const FiniteRing &b, const Submodule &ideal,
                           CheckLevel check = CheckLevel::full);

}  // namespace derring
