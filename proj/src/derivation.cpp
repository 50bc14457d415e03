#include "derring/derivation.hpp"

#include <algorithm>

namespace derring {

namespace {
using i64 = std::int64_t;
using i128 = __int128;

Ambient map_ambient(const FiniteRing &b) {
  return Ambient::repeated(b.ambient(), b.rank());
}

Ambient r_space_ambient(const GroupRing &gr) {
  return Ambient::repeated(gr.carrier().ambient(), gr.group().order());
}
}  // namespace

bool is_derivation(const FiniteRing &ring, const std::vector<Coeffs> &images) {
  const std::size_t n = ring.rank();
  if (images.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (images[i].size() != n) return false;
    // image of g_i must die under the order of g_i
    Coeffs killed = ring.scale(ring.ambient().orders[i], images[i]);
    if (!std::all_of(killed.begin(), killed.end(),
                     [](i64 v) { return v == 0; }))
      return false;
  }
  auto apply = [&](const Coeffs &x) {
    Coeffs acc = ring.zero();
    for (std::size_t l = 0; l < n; ++l)
      if (x[l]) acc = ring.add(acc, ring.scale(x[l], images[l]));
    return acc;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Coeffs lhs = apply(ring.table(i, j));
      Coeffs rhs = ring.add(ring.mul(images[i], ring.generator(j)),
                            ring.mul(ring.generator(i), images[j]));
      if (lhs != rhs) return false;
    }
  return true;
}

Derivation Derivation::from_images(const FiniteRing &ring,
                                   std::vector<Coeffs> images) {
  for (Coeffs &im : images) im = ring.reduce(std::move(im));
  if (!is_derivation(ring, images))
    throw error("Derivation: images violate the Leibniz rule");
  return Derivation(ring, std::move(images));
}

std::optional<Derivation> Derivation::try_from_images(
    const FiniteRing &ring, std::vector<Coeffs> images) {
  for (Coeffs &im : images) im = ring.reduce(std::move(im));
  if (!is_derivation(ring, images)) return std::nullopt;
  return Derivation(ring, std::move(images));
}

Derivation Derivation::zero(const FiniteRing &ring) {
  return Derivation(ring, std::vector<Coeffs>(ring.rank(), ring.zero()));
}

Derivation Derivation::inner(const FiniteRing &ring, const Coeffs &a) {
  std::vector<Coeffs> images(ring.rank());
  Coeffs ar = ring.reduce(a);
  for (std::size_t i = 0; i < ring.rank(); ++i)
    images[i] = ring.commutator(ar, ring.generator(i));
  return Derivation(ring, std::move(images));
}

Coeffs Derivation::apply(const Coeffs &x) const {
  Coeffs acc = ring_->zero();
  for (std::size_t l = 0; l < ring_->rank(); ++l)
    if (x[l]) acc = ring_->add(acc, ring_->scale(x[l], images_[l]));
  return acc;
}

bool Derivation::is_zero() const {
  for (const Coeffs &im : images_)
    for (i64 v : im)
      if (v) return false;
  return true;
}

IntVec Derivation::flat() const {
  IntVec v;
  v.reserve(ring_->rank() * ring_->rank());
  for (const Coeffs &im : images_)
    for (i64 c : im) v.emplace_back(static_cast<long>(c));
  return v;
}

Derivation Derivation::operator+(const Derivation &o) const {
  std::vector<Coeffs> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    im[i] = ring_->add(images_[i], o.images_[i]);
  return Derivation(*ring_, std::move(im));
}

Derivation Derivation::operator-(const Derivation &o) const {
  std::vector<Coeffs> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    im[i] = ring_->sub(images_[i], o.images_[i]);
  return Derivation(*ring_, std::move(im));
}

Derivation bracket(const Derivation &a, const Derivation &b) {
  const FiniteRing &ring = a.ring();
  if (&ring != &b.ring()) throw error("bracket: derivations on different rings");
  std::vector<Coeffs> im(ring.rank());
  for (std::size_t i = 0; i < ring.rank(); ++i)
    im[i] = ring.sub(a.apply(b.images()[i]), b.apply(a.images()[i]));
  return Derivation::from_images(ring, std::move(im));
}

DerivationSpace DerivationSpace::full_space(const FiniteRing &ring,
                                            Submodule coords) {
  if (coords.ambient() != map_ambient(ring))
    throw error("DerivationSpace: wrong ambient");
  return DerivationSpace(Kind::full, ring, nullptr, std::move(coords));
}

DerivationSpace DerivationSpace::r_space(const GroupRing &gr, Submodule coords) {
  if (coords.ambient() != r_space_ambient(gr))
    throw error("DerivationSpace: wrong ambient");
  return DerivationSpace(Kind::group_r, gr.carrier(), &gr, std::move(coords));
}

Derivation DerivationSpace::expand(const IntVec &coord_row) const {
  const std::size_t n = ring_->rank();
  if (kind_ == Kind::full) {
    std::vector<Coeffs> images(n);
    std::vector<i64> row = to_i64vec(coords_.ambient().reduced(coord_row));
    for (std::size_t i = 0; i < n; ++i)
      images[i] = Coeffs(row.begin() + static_cast<long>(i * n),
                         row.begin() + static_cast<long>((i + 1) * n));
    return Derivation::from_images(*ring_, std::move(images));
  }
  const GroupRing &gr = *gr_;
  const std::size_t ng = gr.group().order(), nr = gr.coeff_ring().rank();
  std::vector<i64> row = to_i64vec(coords_.ambient().reduced(coord_row));
  std::vector<Coeffs> images(n);
  for (std::size_t gi = 0; gi < ng; ++gi) {
    Coeffs yg(row.begin() + static_cast<long>(gi * n),
              row.begin() + static_cast<long>((gi + 1) * n));
    for (std::size_t t = 0; t < nr; ++t) {
      Coeffs rt(n, 0);  // r_t at the identity block
      rt[t] = 1;
      images[gr.block(gi, t)] = ring_->mul(rt, yg);
    }
  }
  return Derivation::from_images(*ring_, std::move(images));
}

std::vector<Derivation> DerivationSpace::generators() const {
  std::vector<Derivation> out;
  for (const IntVec &row : coords_.gen_rows()) out.push_back(expand(row));
  return out;
}

std::optional<IntVec> DerivationSpace::coords_of(const Derivation &d) const {
  if (&d.ring() != ring_) return std::nullopt;
  IntVec v;
  if (kind_ == Kind::full) {
    v = d.flat();
  } else {
    const GroupRing &gr = *gr_;
    v.reserve(coords_.ambient().rank());
    for (std::size_t gi = 0; gi < gr.group().order(); ++gi)
      for (i64 c : d.apply(gr.basis_element(gi)))
        v.emplace_back(static_cast<long>(c));
  }
  if (!coords_.contains(v)) return std::nullopt;
  if (kind_ == Kind::group_r && expand(v) != d) return std::nullopt;
  return v;
}

bool DerivationSpace::contains(const Derivation &d) const {
  return coords_of(d).has_value();
}

DerivationSpace DerivationSpace::intersect_coords(const Submodule &s) const {
  return DerivationSpace(kind_, *ring_, gr_, coords_.intersect(s));
}

DerivationSpace der(const FiniteRing &b, const Caps &caps) {
  const std::size_t n = b.rank();
  const std::size_t unknowns = n * n;
  if (static_cast<i64>(unknowns) > caps.solve_unknowns)
    throw cap_error("der(" + b.name() + "): " + std::to_string(unknowns) +
                    " unknowns exceed cap " +
                    std::to_string(caps.solve_unknowns));
  // rows: per generator pair, delta(g_i g_j) - delta(g_i) g_j - g_i delta(g_j);
  // then the order rows n_i * x_i == 0
  std::vector<IntMatrix> lmat(n), rmat(n);
  for (std::size_t i = 0; i < n; ++i) {
    lmat[i] = b.left_mul_matrix(b.generator(i));
    rmat[i] = b.right_mul_matrix(b.generator(i));
  }
  const std::size_t rows = n * n * n + n * n;
  IntMatrix a(rows, unknowns);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Coeffs &prod = b.table(i, j);
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t l = 0; l < n; ++l)
          if (prod[l]) a.at(row + c, l * n + c) += prod[l];
        for (std::size_t u = 0; u < n; ++u) {
          if (rmat[j].at(c, u) != 0) a.at(row + c, i * n + u) -= rmat[j].at(c, u);
          if (lmat[i].at(c, u) != 0) a.at(row + c, j * n + u) -= lmat[i].at(c, u);
        }
      }
      row += n;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c) {
      a.at(row, i * n + c) = b.ambient().orders[i];
      ++row;
    }
  Ambient dom = map_ambient(b);
  Ambient cod = Ambient::repeated(b.ambient(), n * n + n);
  return DerivationSpace::full_space(b, kernel_mod(a, cod, dom));
}

DerivationSpace der_r(const GroupRing &gr, const Caps &caps) {
  const FiniteRing &b = gr.carrier();
  const std::size_t n = b.rank();
  const std::size_t ng = gr.group().order(), nr = gr.coeff_ring().rank();
  const std::size_t unknowns = ng * n;
  if (static_cast<i64>(unknowns) > caps.solve_unknowns)
    throw cap_error("der_r(" + b.name() + "): " + std::to_string(unknowns) +
                    " unknowns exceed cap " +
                    std::to_string(caps.solve_unknowns));
  std::vector<IntMatrix> lmat(ng), rmat(ng);
  for (std::size_t gi = 0; gi < ng; ++gi) {
    Coeffs e = gr.basis_element(gi);
    lmat[gi] = b.left_mul_matrix(e);
    rmat[gi] = b.right_mul_matrix(e);
  }
  const bool central_rows = !gr.coeff_ring().is_commutative();
  const std::size_t rows = ng * ng * n + (central_rows ? ng * nr * n : 0);
  IntMatrix a(rows, unknowns);
  std::size_t row = 0;
  // y_{gh} - y_g * h - g * y_h == 0 for every Cayley pair
  for (std::size_t gi = 0; gi < ng; ++gi)
    for (std::size_t hj = 0; hj < ng; ++hj) {
      const std::size_t gh = gr.group().mul(gi, hj);
      for (std::size_t c = 0; c < n; ++c) {
        a.at(row + c, gh * n + c) += 1;
        for (std::size_t u = 0; u < n; ++u) {
          if (rmat[hj].at(c, u) != 0)
            a.at(row + c, gi * n + u) -= rmat[hj].at(c, u);
          if (lmat[gi].at(c, u) != 0)
            a.at(row + c, hj * n + u) -= lmat[gi].at(c, u);
        }
      }
      row += n;
    }
  if (central_rows) {
    // [y_g, r_t] == 0 keeps the R-bilinear extension well defined
    for (std::size_t t = 0; t < nr; ++t) {
      Coeffs rt(n, 0);
      rt[t] = 1;
      IntMatrix lt = b.left_mul_matrix(rt);
      IntMatrix rt_m = b.right_mul_matrix(rt);
      for (std::size_t gi = 0; gi < ng; ++gi) {
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t u = 0; u < n; ++u) {
            Int d = lt.at(c, u) - rt_m.at(c, u);
            if (d != 0) a.at(row + c, gi * n + u) += d;
          }
        row += n;
      }
    }
  }
  Ambient dom = r_space_ambient(gr);
  Ambient cod = Ambient::repeated(b.ambient(), rows / n);
  return DerivationSpace::r_space(gr, kernel_mod(a, cod, dom));
}

std::optional<Coeffs> inner_witness(const FiniteRing &b, const Derivation &d) {
  const std::size_t n = b.rank();
  IntMatrix a(n * n, n);
  IntVec rhs(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix l = b.left_mul_matrix(b.generator(i));   // x -> g_i x
    IntMatrix r = b.right_mul_matrix(b.generator(i));  // x -> x g_i
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t u = 0; u < n; ++u)
        a.at(i * n + c, u) = r.at(c, u) - l.at(c, u);
      rhs[i * n + c] = d.images()[i][c];
    }
  }
  auto sol = solve_mod(a, rhs, Ambient::repeated(b.ambient(), n), b.ambient());
  if (!sol) return std::nullopt;
  Coeffs w = b.reduce(to_i64vec(sol->particular));
  if (Derivation::inner(b, w) != d)
    throw error("inner_witness: solver returned a wrong witness");
  return w;
}

Coeffs averaging_witness(const GroupRing &gr, const Derivation &d,
                         const SubgroupSet &h) {
  const FiniteRing &b = gr.carrier();
  if (&d.ring() != &b) throw error("averaging_witness: wrong carrier");
  if (!gr.group().is_subgroup(h))
    throw error("averaging_witness: H is not a subgroup");
  // R-derivation prerequisite: vanish on the coefficient block
  for (std::size_t t = 0; t < gr.coeff_ring().rank(); ++t) {
    const Coeffs &im = d.images()[gr.block(0, t)];
    if (!std::all_of(im.begin(), im.end(), [](i64 v) { return v == 0; }))
      throw error("averaging_witness: not an R-derivation");
  }
  const std::size_t order = h.size();
  for (i64 p : prime_factors(static_cast<i64>(order)))
    if (!gr.coeff_ring().is_invertible_prime(p))
      throw error("averaging_witness: |H| has the prime " + std::to_string(p) +
                  " not invertible in R");
  Coeffs sum = b.zero();
  for (std::size_t a : h.indices()) {
    Coeffs term = b.mul(gr.basis_element(gr.group().inv(a)),
                        d.apply(gr.basis_element(a)));
    sum = b.add(sum, term);
  }
  auto inv = b.inverse(b.scale(static_cast<i64>(order), b.one()));
  if (!inv) throw error("averaging_witness: |H| is not invertible in R[G]");
  Coeffs x = b.mul(*inv, sum);
  // postcondition: d == inner(-x) on all of R[H]
  Coeffs neg_x = b.neg(x);
  for (std::size_t a : h.indices())
    for (std::size_t t = 0; t < gr.coeff_ring().rank(); ++t) {
      Coeffs gen(b.rank(), 0);
      if (gr.coeff_ring().ambient().orders[t] > 1) gen[gr.block(a, t)] = 1;
      Coeffs expect = b.commutator(neg_x, gen);
      if (d.apply(gen) != expect)
        throw error("averaging_witness: averaging identity failed");
    }
  return x;
}

namespace {
Submodule central_image_constraint(const FiniteRing &b, std::size_t blocks) {
  // product of center(B) across the unknown blocks
  Submodule z = b.center();
  const std::size_t n = b.rank();
  std::vector<IntVec> rows;
  for (std::size_t k = 0; k < blocks; ++k)
    for (const IntVec &g : z.gen_rows()) {
      IntVec row(blocks * n, Int(0));
      for (std::size_t c = 0; c < n; ++c) row[k * n + c] = g[c];
      rows.push_back(std::move(row));
    }
  return Submodule::span(Ambient::repeated(b.ambient(), blocks), rows);
}
}  // namespace

DerivationSpace zder(const FiniteRing &b, const Caps &caps) {
  DerivationSpace d = der(b, caps);
  return d.intersect_coords(central_image_constraint(b, b.rank()));
}

DerivationSpace zder_r(const GroupRing &gr, const Caps &caps) {
  DerivationSpace d = der_r(gr, caps);
  const FiniteRing &b = gr.carrier();
  const std::size_t n = b.rank();
  const std::size_t ng = gr.group().order(), nr = gr.coeff_ring().rank();
  // images of the whole space must stay central: r_t * y_g central for all t
  Submodule::MembershipSystem zc = b.center().membership_system();
  const std::size_t zr = zc.a.rows();
  IntMatrix a(ng * nr * zr, ng * n);
  std::size_t row = 0;
  std::vector<std::int64_t> cod_orders;
  for (std::size_t t = 0; t < nr; ++t) {
    Coeffs rt(n, 0);
    rt[t] = 1;
    IntMatrix lt = b.left_mul_matrix(rt);
    IntMatrix comp = zc.a * lt;
    for (std::size_t gi = 0; gi < ng; ++gi) {
      for (std::size_t c = 0; c < zr; ++c) {
        for (std::size_t u = 0; u < n; ++u)
          a.at(row + c, gi * n + u) = comp.at(c, u);
        cod_orders.push_back(zc.cod.orders[c]);
      }
      row += zr;
    }
  }
  Submodule constraint =
      kernel_mod(a, Ambient(std::move(cod_orders)), r_space_ambient(gr));
  return d.intersect_coords(constraint);
}

Coeffs l_map(const GroupRing &gr, const Derivation &d, std::size_t gidx) {
  const FiniteRing &b = gr.carrier();
  return b.mul(gr.basis_element(gr.group().inv(gidx)),
               d.apply(gr.basis_element(gidx)));
}

bool coefficient_vanishing(const GroupRing &gr, const Derivation &d,
                           std::size_t gidx) {
  const std::size_t order = gr.group().element_order(gidx);
  for (i64 p : prime_factors(static_cast<i64>(order)))
    if (!gr.coeff_ring().is_invertible_prime(p))
      throw error("coefficient_vanishing: order of g not invertible in R");
  Coeffs dg = d.apply(gr.basis_element(gidx));
  for (std::size_t t = 0; t < gr.group().order(); ++t) {
    if (gr.group().mul(gidx, t) != gr.group().mul(t, gidx)) continue;
    Coeffs c = gr.coefficient_at(dg, t);
    if (!std::all_of(c.begin(), c.end(), [](i64 v) { return v == 0; }))
      return false;
  }
  return true;
}

}  // namespace derring
