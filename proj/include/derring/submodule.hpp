#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "derring/int_matrix.hpp"
#include "derring/normal_form.hpp"

namespace derring {

/// Additive group prod_i Z/n_i presented by the list of cyclic orders.
struct Ambient {
  std::vector<std::int64_t> orders;

  Ambient() = default;
  explicit Ambient(std::vector<std::int64_t> o) : orders(std::move(o)) {
    for (std::int64_t n : orders)
      if (n < 1) throw error("Ambient: orders must be >= 1");
  }

  std::size_t rank() const { return orders.size(); }
  bool operator==(const Ambient &o) const { return orders == o.orders; }
  bool operator!=(const Ambient &o) const { return !(*this == o); }

  mpz_class cardinality() const {
    mpz_class c = 1;
    for (std::int64_t n : orders) c *= n;
    return c;
  }
  std::int64_t exponent() const;  // lcm of the orders

  std::vector<std::int64_t> reduced(std::vector<std::int64_t> v) const;
  IntVec reduced(IntVec v) const;

  static Ambient repeated(const Ambient &a, std::size_t copies);
  static Ambient concat(const Ambient &a, const Ambient &b);
};

struct QuotientPresentation;

/// An additive subgroup of an Ambient, stored as the Hermite form of its
/// full-rank lift to Z^n (order relations included).  The stored lattice is
/// canonical: two Submodules are equal as subsets iff their lattices are
/// identical matrices.
class Submodule {
public:
  static Submodule span(const Ambient &amb, const std::vector<IntVec> &rows);
  static Submodule span(const Ambient &amb, const IntMatrix &rows);
  static Submodule zero(const Ambient &amb);
  static Submodule full(const Ambient &amb);

  const Ambient &ambient() const { return amb_; }
  const IntMatrix &lattice() const { return lat_; }

  /// Reduced nonzero generator rows (the user-facing canonical view).
  IntMatrix gens() const;
  std::vector<IntVec> gen_rows() const;

  mpz_class cardinality() const;
  bool is_zero() const { return cardinality() == 1; }
  bool is_full() const;

  bool contains(const IntVec &v) const;
  bool contains(const Submodule &other) const;
  Submodule sum(const Submodule &other) const;
  Submodule intersect(const Submodule &other) const;

  /// Canonical representative of v + this inside the fundamental domain of
  /// the lattice (deterministic; used for witness normalization).
  IntVec reduce(IntVec v) const;

  /// Rows a_j and orders d_j with: x in this <=> a_j . x == 0 (mod d_j) for
  /// all j.  Lets submodule membership enter linear systems as equations.
  struct MembershipSystem {
    IntMatrix a;
    Ambient cod;
  };
  MembershipSystem membership_system() const;

  bool operator==(const Submodule &o) const {
    return amb_ == o.amb_ && lat_ == o.lat_;
  }
  bool operator!=(const Submodule &o) const { return !(*this == o); }

private:
  Submodule(Ambient amb, IntMatrix lat)
      : amb_(std::move(amb)), lat_(std::move(lat)) {}
  Ambient amb_;
  IntMatrix lat_;  // rank x rank canonical Hermite form
};

/// Presentation of a quotient big/small of two full-rank lattices
/// (small inside big) as a product of cyclic groups prod_j Z/d_j with
/// explicit generator lifts and a coordinate projection.
struct QuotientPresentation {
  Ambient quot;         // the orders d_j > 1, Smith-ordered
  IntMatrix gen_lifts;  // row j = lift of the j-th quotient generator

  IntVec project(const IntVec &x) const;  // throws if x not in big
  IntVec lift(const IntVec &coords) const;
  bool in_big(const IntVec &x) const;

  IntMatrix big;  // internals
  IntMatrix vmat;
  std::vector<Int> full_d;
  std::vector<std::size_t> kept;
};

QuotientPresentation present_quotient(const IntMatrix &big,
                                      const IntMatrix &small);

/// The submodule itself as an abstract group: s = lattice(s)/orders.
QuotientPresentation present(const Submodule &s);
/// ambient(s)/s.
QuotientPresentation present_ambient_quotient(const Submodule &s);
/// s1/s2 for s2 inside s1.
QuotientPresentation present_subquotient(const Submodule &s1,
                                         const Submodule &s2);

// int64 <-> mpz helpers used at the ring/linalg boundary
IntVec to_ivec(const std::vector<std::int64_t> &v);
std::vector<std::int64_t> to_i64vec(const IntVec &v);  // must fit

struct LinearSolution {
  IntVec particular;  // canonical: reduced modulo the kernel lattice
  Submodule kernel;   // full homogeneous solution set over dom
};

/// Solve a * x == b componentwise modulo the codomain orders, x ranging over
/// the domain ambient.  Exact; nullopt signals an inconsistent system.
std::optional<LinearSolution> solve_mod(const IntMatrix &a, const IntVec &b,
                                        const Ambient &cod, const Ambient &dom);
Submodule kernel_mod(const IntMatrix &a, const Ambient &cod,
                     const Ambient &dom);

}  // namespace derring
