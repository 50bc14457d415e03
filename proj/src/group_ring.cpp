#include "derring/group_ring.hpp"

#include <algorithm>

namespace derring {

GroupRing GroupRing::build(const FiniteRing &r, const FiniteGroup &g,
                           const Caps &caps) {
  const std::size_t nr = r.rank(), ng = g.order();
  const std::size_t n = nr * ng;
  if (static_cast<std::int64_t>(n) > caps.rank)
    throw cap_error("group ring " + r.name() + "[" + g.name() +
                    "]: ambient rank " + std::to_string(n) + " exceeds cap " +
                    std::to_string(caps.rank));
  std::vector<std::int64_t> orders(n);
  for (std::size_t gi = 0; gi < ng; ++gi)
    for (std::size_t t = 0; t < nr; ++t)
      orders[gi * nr + t] = r.ambient().orders[t];
  std::vector<std::vector<Coeffs>> tab(n, std::vector<Coeffs>(n, Coeffs(n, 0)));
  for (std::size_t gi = 0; gi < ng; ++gi)
    for (std::size_t s = 0; s < nr; ++s)
      for (std::size_t hj = 0; hj < ng; ++hj)
        for (std::size_t t = 0; t < nr; ++t) {
          const Coeffs &prod = r.table(s, t);
          const std::size_t dst = g.mul(gi, hj) * nr;
          Coeffs &cell = tab[gi * nr + s][hj * nr + t];
          for (std::size_t l = 0; l < nr; ++l) cell[dst + l] = prod[l];
        }
  Coeffs one(n, 0);
  for (std::size_t t = 0; t < nr; ++t) one[t] = r.one()[t];  // identity block
  FiniteRing carrier =
      FiniteRing::create(Ambient(std::move(orders)), std::move(tab),
                         std::move(one), r.name() + "[" + g.name() + "]",
                         CheckLevel::spot);
  return GroupRing(r, g, std::move(carrier));
}

Coeffs GroupRing::basis_element(std::size_t gidx) const {
  Coeffs v(carrier_.rank(), 0);
  for (std::size_t t = 0; t < r_.rank(); ++t) v[block(gidx, t)] = r_.one()[t];
  return v;
}

Coeffs GroupRing::coefficient_at(const Coeffs &x, std::size_t gidx) const {
  Coeffs out(r_.rank());
  for (std::size_t t = 0; t < r_.rank(); ++t) out[t] = x[block(gidx, t)];
  return out;
}

Coeffs GroupRing::embed_coeff(const Coeffs &r_elt) const {
  Coeffs v(carrier_.rank(), 0);
  for (std::size_t t = 0; t < r_.rank(); ++t) v[t] = r_elt[t];
  return carrier_.reduce(std::move(v));
}

std::vector<std::size_t> GroupRing::support(const Coeffs &x) const {
  std::vector<std::size_t> out;
  for (std::size_t gi = 0; gi < g_.order(); ++gi) {
    Coeffs c = coefficient_at(x, gi);
    if (!std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; }))
      out.push_back(gi);
  }
  return out;
}

Coeffs GroupRing::augmentation(const Coeffs &x) const {
  Coeffs sum = r_.zero();
  for (std::size_t gi = 0; gi < g_.order(); ++gi)
    sum = r_.add(sum, coefficient_at(x, gi));
  return sum;
}

GroupRing::AugIdeal GroupRing::augmentation_ideal(const SubgroupSet &h) const {
  if (!g_.is_subgroup(h))
    throw error("augmentation_ideal: H is not a subgroup");
  std::vector<IntVec> rows;
  for (std::size_t gi = 0; gi < g_.order(); ++gi)
    for (std::size_t hj : h.indices()) {
      if (hj == 0) continue;
      const std::size_t gh = g_.mul(gi, hj);
      for (std::size_t t = 0; t < r_.rank(); ++t) {
        IntVec row(carrier_.rank(), Int(0));
        row[block(gi, t)] += 1;
        row[block(gh, t)] -= 1;
        rows.push_back(std::move(row));
      }
    }
  return AugIdeal{Submodule::span(carrier_.ambient(), rows),
                  g_.is_normal(h)};
}

Submodule GroupRing::center() const { return carrier_.center(); }

Submodule GroupRing::central_coeff_span() const {
  Submodule zr = r_.center();
  std::vector<IntVec> rows;
  for (const IntVec &zg : zr.gen_rows())
    for (std::size_t gi = 0; gi < g_.order(); ++gi) {
      IntVec row(carrier_.rank(), Int(0));
      for (std::size_t t = 0; t < r_.rank(); ++t) row[block(gi, t)] = zg[t];
      rows.push_back(std::move(row));
    }
  return Submodule::span(carrier_.ambient(), rows);
}

Submodule GroupRing::center_of_central_coeff() const {
  Submodule s1 = central_coeff_span();
  std::vector<IntVec> gens = s1.gen_rows();
  const std::size_t n = carrier_.rank();
  IntMatrix a(gens.size() * n, n);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    Coeffs w = carrier_.reduce(to_i64vec(gens[k]));
    IntMatrix l = carrier_.left_mul_matrix(w);
    IntMatrix r = carrier_.right_mul_matrix(w);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t u = 0; u < n; ++u)
        a.at(k * n + c, u) = l.at(c, u) - r.at(c, u);
  }
  Submodule commuting = kernel_mod(
      a, Ambient::repeated(carrier_.ambient(), gens.size()), carrier_.ambient());
  return commuting.intersect(s1);
}

Submodule GroupRing::class_sum_span() const {
  std::vector<IntVec> rows;
  for (const auto &cls : g_.conjugacy_classes())
    for (std::size_t t = 0; t < r_.rank(); ++t) {
      IntVec row(carrier_.rank(), Int(0));
      for (std::size_t gi : cls) row[block(gi, t)] = 1;
      rows.push_back(std::move(row));
    }
  return Submodule::span(carrier_.ambient(), rows);
}

std::vector<Coeffs> GroupRing::normalized_units(std::int64_t cap) const {
  const std::size_t count = carrier_.element_count_checked(cap);
  std::vector<Coeffs> out;
  for (std::size_t idx = 0; idx < count; ++idx) {
    Coeffs v = carrier_.element_at(idx);
    if (augmentation(v) != r_.one()) continue;
    if (carrier_.is_unit(v)) out.push_back(v);
  }
  return out;
}

GroupRing::SubgroupQuotient GroupRing::quotient_by_subgroup(
    const SubgroupSet &h, const Caps &caps) const {
  if (!g_.is_subgroup(h) || !g_.is_normal(h))
    throw error("quotient_by_subgroup: H must be a normal subgroup");
  FiniteGroup q = g_.quotient(h);
  GroupRing image = GroupRing::build(r_, q, caps);

  // coset labels in the quotient's own order
  std::vector<std::size_t> coset_label(g_.order());
  {
    std::vector<std::size_t> rep(g_.order(), g_.order());
    std::vector<std::size_t> reps;
    for (std::size_t gi = 0; gi < g_.order(); ++gi) {
      if (rep[gi] != g_.order()) continue;
      std::size_t least = gi;
      std::vector<std::size_t> coset;
      for (std::size_t hj : h.indices()) {
        std::size_t e = g_.mul(gi, hj);
        coset.push_back(e);
        least = std::min(least, e);
      }
      for (std::size_t e : coset) rep[e] = least;
      reps.push_back(least);
    }
    std::sort(reps.begin(), reps.end());
    std::vector<std::size_t> label(g_.order(), 0);
    for (std::size_t i = 0; i < reps.size(); ++i) label[reps[i]] = i;
    for (std::size_t gi = 0; gi < g_.order(); ++gi)
      coset_label[gi] = label[rep[gi]];
  }

  IntMatrix m(image.carrier().rank(), carrier_.rank());
  for (std::size_t gi = 0; gi < g_.order(); ++gi)
    for (std::size_t t = 0; t < r_.rank(); ++t)
      m.at(image.block(coset_label[gi], t), block(gi, t)) = 1;

  auto apply = [&](const Coeffs &x) {
    Coeffs out(image.carrier().rank(), 0);
    for (std::size_t gi = 0; gi < g_.order(); ++gi)
      for (std::size_t t = 0; t < r_.rank(); ++t)
        out[image.block(coset_label[gi], t)] += x[block(gi, t)];
    return image.carrier().reduce(std::move(out));
  };

  // ring-map check on every generator pair
  for (std::size_t i = 0; i < carrier_.rank(); ++i)
    for (std::size_t j = 0; j < carrier_.rank(); ++j) {
      Coeffs lhs = apply(carrier_.table(i, j));
      Coeffs rhs = image.carrier().mul(apply(carrier_.generator(i)),
                                       apply(carrier_.generator(j)));
      if (lhs != rhs)
        throw error("quotient_by_subgroup: projection is not multiplicative");
    }
  if (apply(carrier_.one()) != image.carrier().one())
    throw error("quotient_by_subgroup: projection misses unity");

  Submodule kernel =
      kernel_mod(m, image.carrier().ambient(), carrier_.ambient());
  AugIdeal ai = augmentation_ideal(h);
  if (!(kernel == ai.ideal))
    throw error("quotient_by_subgroup: kernel differs from augmentation ideal");
  return SubgroupQuotient{std::move(image), std::move(m), std::move(kernel)};
}

}  // namespace derring
