#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "derring/finite_ring.hpp"

namespace derring {

/// Subset of group element indices with a cached normality flag.
struct SubgroupSet {
  std::vector<std::uint8_t> member;
  bool normal = false;

  std::size_t size() const {
    std::size_t s = 0;
    for (auto m : member) s += m ? 1 : 0;
    return s;
  }
  bool contains(std::size_t i) const { return member[i] != 0; }
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < member.size(); ++i)
      if (member[i]) out.push_back(i);
    return out;
  }
  bool operator==(const SubgroupSet &o) const { return member == o.member; }
  bool operator<(const SubgroupSet &o) const { return member < o.member; }
};

/// Cayley-table group; elements are indices, identity is index 0.
class FiniteGroup {
public:
  static FiniteGroup from_cayley(const std::vector<std::vector<std::size_t>> &t,
                                 std::string name,
                                 CheckLevel check = CheckLevel::full);

  std::size_t order() const { return n_; }
  const std::string &name() const { return name_; }
  void rename(std::string n) { name_ = std::move(n); }

  std::size_t mul(std::size_t a, std::size_t b) const {
    return table_[a * n_ + b];
  }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  std::size_t conj(std::size_t g, std::size_t x) const {  // x^{-1} g x
    return mul(mul(inv(x), g), x);
  }
  std::size_t commutator(std::size_t a, std::size_t b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  std::size_t element_order(std::size_t a) const;
  std::int64_t exponent() const;
  std::vector<std::int64_t> pi() const;

  bool is_abelian() const;
  SubgroupSet trivial_subgroup() const;
  SubgroupSet full_subgroup() const;
  SubgroupSet center() const;
  SubgroupSet derived_subgroup() const;
  SubgroupSet centralizer(const std::vector<std::size_t> &s) const;
  std::vector<std::vector<std::size_t>> conjugacy_classes() const;

  /// Z_0 = 1 < Z_1 = Z(G) < ... until stabilization.
  std::vector<SubgroupSet> upper_central_series() const;
  /// gamma_1 = G >= gamma_2 = [G,G] >= ... until stabilization.
  std::vector<SubgroupSet> lower_central_series() const;
  std::optional<int> nilpotency_class() const;
  bool is_p_abelian(std::int64_t p) const;
  /// derived subgroup of a subgroup, as a subgroup of this group
  SubgroupSet derived_of(const SubgroupSet &s) const;
  bool is_solvable() const;

  SubgroupSet closure(std::vector<std::size_t> seeds) const;
  bool is_subgroup(const SubgroupSet &s) const;
  bool is_normal(const SubgroupSet &s) const;
  SubgroupSet make_subgroup(const std::vector<std::size_t> &elements) const;
  std::vector<SubgroupSet> all_subgroups() const;
  std::vector<SubgroupSet> normal_subgroups() const;

  /// Quotient by a normal subgroup; cosets are relabeled by their smallest
  /// member index, ascending.
  FiniteGroup quotient(const SubgroupSet &nsub) const;

private:
  FiniteGroup() = default;
  std::size_t n_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inv_;
  std::string name_;
};

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t n);  // order 2n
FiniteGroup quaternion8();
FiniteGroup symmetric_group(std::size_t n);    // n <= 5
FiniteGroup alternating_group(std::size_t n);  // n <= 5
FiniteGroup elementary_abelian(std::int64_t p, std::size_t k);
FiniteGroup heisenberg_group(std::int64_t p);  // order p^3, class 2
FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b);

}  // namespace derring
