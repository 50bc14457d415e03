#include "derring/lie_ring.hpp"

#include <algorithm>
#include <set>

namespace derring {

namespace {
using i64 = std::int64_t;
using i128 = __int128;

i64 mod_reduce(i128 v, i64 n) {
  i128 r = v % n;
  if (r < 0) r += n;
  return static_cast<i64>(r);
}
}  // namespace

FiniteLieRing FiniteLieRing::create(Ambient amb,
                                    std::vector<std::vector<Coeffs>> table,
                                    std::string name, CheckLevel check) {
  const std::size_t n = amb.rank();
  FiniteLieRing l;
  l.amb_ = std::move(amb);
  l.name_ = std::move(name);
  if (table.size() != n) throw dim_error("FiniteLieRing: table rows");
  l.tab_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw dim_error("FiniteLieRing: table cols");
    for (std::size_t j = 0; j < n; ++j)
      l.tab_.push_back(l.amb_.reduced(std::move(table[i][j])));
  }
  if (check != CheckLevel::none) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::all_of(l.table(i, i).begin(), l.table(i, i).end(),
                       [](i64 v) { return v == 0; }))
        throw error("FiniteLieRing " + l.name_ + ": [x,x] != 0");
      for (std::size_t j = 0; j < n; ++j) {
        Coeffs s = l.add(l.table(i, j), l.table(j, i));
        if (!std::all_of(s.begin(), s.end(), [](i64 v) { return v == 0; }))
          throw error("FiniteLieRing " + l.name_ + ": bracket not antisymmetric");
        for (std::size_t c = 0; c < n; ++c) {
          if (mod_reduce(static_cast<i128>(l.amb_.orders[i]) * l.table(i, j)[c],
                         l.amb_.orders[c]) != 0)
            throw error("FiniteLieRing " + l.name_ + ": table ignores orders");
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Coeffs jac = l.add(
              l.add(l.bracket(l.table(i, j), l.generator(k)),
                    l.bracket(l.table(j, k), l.generator(i))),
              l.bracket(l.table(k, i), l.generator(j)));
          if (!std::all_of(jac.begin(), jac.end(), [](i64 v) { return v == 0; }))
            throw error("FiniteLieRing " + l.name_ + ": Jacobi fails");
        }
  }
  return l;
}

Coeffs FiniteLieRing::add(const Coeffs &x, const Coeffs &y) const {
  Coeffs r(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    r[i] = (x[i] + y[i]) % amb_.orders[i];
  return r;
}

Coeffs FiniteLieRing::generator(std::size_t i) const {
  Coeffs v(rank(), 0);
  if (amb_.orders[i] > 1) v[i] = 1;
  return v;
}

Coeffs FiniteLieRing::bracket(const Coeffs &x, const Coeffs &y) const {
  const std::size_t n = rank();
  std::vector<i128> acc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      const i128 c = static_cast<i128>(x[i]) * y[j];
      const Coeffs &t = table(i, j);
      for (std::size_t l = 0; l < n; ++l)
        if (t[l]) acc[l] += (c % amb_.orders[l]) * t[l];
    }
  }
  Coeffs r(n);
  for (std::size_t l = 0; l < n; ++l) r[l] = mod_reduce(acc[l], amb_.orders[l]);
  return r;
}

FiniteLieRing from_associative(const FiniteRing &b) {
  const std::size_t n = b.rank();
  std::vector<std::vector<Coeffs>> tab(n, std::vector<Coeffs>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      tab[i][j] = b.sub(b.table(i, j), b.table(j, i));
  return FiniteLieRing::create(b.ambient(), std::move(tab), b.name() + "^L",
                               CheckLevel::full);
}

namespace {

Submodule bracket_span(const FiniteLieRing &l, const Submodule &a,
                       const Submodule &b) {
  std::vector<IntVec> rows;
  for (const IntVec &u : a.gen_rows())
    for (const IntVec &v : b.gen_rows())
      rows.push_back(to_ivec(l.bracket(l.reduce(to_i64vec(u)),
                                       l.reduce(to_i64vec(v)))));
  return Submodule::span(l.ambient(), rows);
}

LieSeries run_series(const FiniteLieRing &l, bool derived) {
  LieSeries s;
  s.terms.push_back(Submodule::full(l.ambient()));
  while (true) {
    const Submodule &cur = s.terms.back();
    Submodule next = derived ? bracket_span(l, cur, cur)
                             : bracket_span(l, cur, s.terms.front());
    if (next == cur) break;
    s.terms.push_back(next);
    if (s.terms.back().is_zero()) break;
  }
  s.reached_zero = s.terms.back().is_zero();
  return s;
}

}  // namespace

LieSeries lower_central_series(const FiniteLieRing &l) {
  return run_series(l, false);
}

LieSeries derived_series(const FiniteLieRing &l) { return run_series(l, true); }

std::optional<int> nilpotency_class(const FiniteLieRing &l) {
  LieSeries s = lower_central_series(l);
  if (!s.reached_zero) return std::nullopt;
  return static_cast<int>(s.terms.size()) - 1;
}

std::optional<int> solvable_length(const FiniteLieRing &l) {
  LieSeries s = derived_series(l);
  if (!s.reached_zero) return std::nullopt;
  return static_cast<int>(s.terms.size()) - 1;
}

Submodule lie_center(const FiniteLieRing &l) {
  const std::size_t n = l.rank();
  IntMatrix a(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t u = 0; u < n; ++u)
        a.at(j * n + c, u) = l.table(u, j)[c];  // [x, g_j] coordinates
  return kernel_mod(a, Ambient::repeated(l.ambient(), n), l.ambient());
}

LiePresentation lie_subquotient(const FiniteRing &carrier, const Submodule &s1,
                                const Submodule &s2, const std::string &name) {
  if (!s1.contains(s2)) throw error("lie_subquotient: s2 not inside s1");
  // closure and ideal certificates
  for (const IntVec &u : s1.gen_rows()) {
    Coeffs cu = carrier.reduce(to_i64vec(u));
    for (const IntVec &v : s1.gen_rows()) {
      Coeffs cv = carrier.reduce(to_i64vec(v));
      if (!s1.contains(to_ivec(carrier.commutator(cu, cv))))
        throw error("lie_subquotient: s1 not bracket closed");
    }
    for (const IntVec &w : s2.gen_rows()) {
      Coeffs cw = carrier.reduce(to_i64vec(w));
      if (!s2.contains(to_ivec(carrier.commutator(cu, cw))))
        throw error("lie_subquotient: s2 not a Lie ideal of s1");
    }
  }
  QuotientPresentation pres = present_subquotient(s1, s2);
  const std::size_t m = pres.quot.rank();
  std::vector<Coeffs> reps(m);
  for (std::size_t j = 0; j < m; ++j)
    reps[j] = carrier.reduce(
        to_i64vec(carrier.ambient().reduced(pres.gen_lifts.row(j))));
  std::vector<std::vector<Coeffs>> tab(m, std::vector<Coeffs>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      tab[i][j] =
          to_i64vec(pres.project(to_ivec(carrier.commutator(reps[i], reps[j]))));
  FiniteLieRing lie =
      FiniteLieRing::create(pres.quot, std::move(tab), name, CheckLevel::full);
  return LiePresentation{std::move(lie), std::move(pres)};
}

LiePresentation derivation_lie(const DerivationSpace &space,
                               const std::string &name) {
  QuotientPresentation pres = present(space.coords());
  const std::size_t m = pres.quot.rank();
  std::vector<Derivation> gens;
  gens.reserve(m);
  for (std::size_t j = 0; j < m; ++j)
    gens.push_back(
        space.expand(space.coords().ambient().reduced(pres.gen_lifts.row(j))));
  std::vector<std::vector<Coeffs>> tab(m, std::vector<Coeffs>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Derivation br = bracket(gens[i], gens[j]);
      auto c = space.coords_of(br);
      if (!c) throw error("derivation_lie: bracket escaped the space");
      tab[i][j] = to_i64vec(pres.project(*c));
    }
  FiniteLieRing lie =
      FiniteLieRing::create(pres.quot, std::move(tab), name, CheckLevel::full);
  return LiePresentation{std::move(lie), std::move(pres)};
}

InnerDerLie inner_der_lie(const GroupRing &gr, const Caps &caps) {
  const FiniteRing &b = gr.carrier();
  Submodule zrg = gr.central_coeff_span();
  Submodule zz = gr.center_of_central_coeff();

  // route (a): span of inner derivations induced by Z(R)[G]
  std::vector<IntVec> rows;
  for (const IntVec &z : zrg.gen_rows())
    rows.push_back(Derivation::inner(b, b.reduce(to_i64vec(z))).flat());
  Submodule inner_coords =
      Submodule::span(Ambient::repeated(b.ambient(), b.rank()), rows);
  DerivationSpace ispace = DerivationSpace::full_space(b, inner_coords);
  LiePresentation via_inner =
      derivation_lie(ispace, "IDer_R(" + b.name() + ")");

  // route (b): (Z(R)[G])^L / Z(Z(R)[G])
  LiePresentation via_quotient =
      lie_subquotient(b, zrg, zz, "(Z(R)[G])^L/Z in " + b.name());

  if (via_inner.lie.cardinality() != via_quotient.lie.cardinality())
    throw error("inner_der_lie: the two constructions disagree in size");

  // verify the Lie isomorphism alpha + Z |-> inner(alpha) on generators
  const std::size_t m = via_quotient.lie.rank();
  std::vector<IntVec> image(m);
  std::vector<Coeffs> reps(m);
  for (std::size_t j = 0; j < m; ++j) {
    reps[j] = b.reduce(
        to_i64vec(b.ambient().reduced(via_quotient.pres.gen_lifts.row(j))));
    auto c = ispace.coords_of(Derivation::inner(b, reps[j]));
    if (!c) throw error("inner_der_lie: quotient generator missed route (a)");
    image[j] = via_inner.pres.project(*c);
    // order relations must transport, otherwise the map is no homomorphism
    for (std::size_t cc = 0; cc < image[j].size(); ++cc)
      if ((image[j][cc] * via_quotient.lie.ambient().orders[j]) %
              via_inner.lie.ambient().orders[cc] !=
          0)
        throw error("inner_der_lie: generator order does not transport");
  }
  // group homomorphism with trivial kernel on a finite equal-size pair is an
  // isomorphism; kernel triviality: image spans and brackets match
  std::vector<IntVec> span_rows = image;
  Submodule image_span = Submodule::span(via_inner.lie.ambient(), span_rows);
  if (!image_span.is_full())
    throw error("inner_der_lie: generator images do not span route (a)");
  auto map_coords = [&](const Coeffs &qc) {
    Coeffs acc(via_inner.lie.rank(), 0);
    for (std::size_t j = 0; j < m; ++j)
      if (qc[j])
        for (std::size_t c = 0; c < via_inner.lie.rank(); ++c)
          acc[c] = static_cast<i64>(
              (acc[c] + static_cast<i128>(qc[j]) * image[j][c].get_si()) %
              via_inner.lie.ambient().orders[c]);
    return acc;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Coeffs lhs = map_coords(via_quotient.lie.table(i, j));
      Coeffs rhs = via_inner.lie.bracket(map_coords(via_quotient.lie.generator(i)),
                                         map_coords(via_quotient.lie.generator(j)));
      if (lhs != rhs) throw error("inner_der_lie: brackets do not transport");
    }
  return InnerDerLie{std::move(via_inner), std::move(via_quotient),
                     std::move(ispace)};
}

Coeffs engel_bracket(const FiniteRing &b, const Coeffs &x, const Coeffs &y,
                     std::size_t n) {
  if (n < 1) throw error("engel_bracket: n >= 1");
  Coeffs c = b.commutator(x, y);
  for (std::size_t i = 1; i < n; ++i) c = b.commutator(c, y);
  return c;
}

EngelReport engel_scan(const GroupRing &gr) {
  const FiniteRing &b = gr.carrier();
  EngelReport rep{true, 0, std::nullopt};
  for (std::size_t gi = 0; gi < gr.group().order() && rep.engel; ++gi)
    for (std::size_t hj = 0; hj < gr.group().order() && rep.engel; ++hj) {
      Coeffs c = gr.basis_element(gi);
      Coeffs h = gr.basis_element(hj);
      std::set<Coeffs> seen;
      std::size_t steps = 0;
      while (true) {
        c = b.commutator(c, h);
        ++steps;
        if (std::all_of(c.begin(), c.end(), [](i64 v) { return v == 0; })) {
          rep.max_steps = std::max(rep.max_steps, steps);
          break;
        }
        if (!seen.insert(c).second) {  // orbit cycled away from zero
          rep.engel = false;
          rep.witness = std::make_pair(gi, hj);
          break;
        }
      }
    }
  return rep;
}

bool commutator_power_identity(const FiniteRing &b, const Coeffs &x,
                               const Coeffs &y, std::uint64_t k) {
  if (k < 1) throw error("commutator_power_identity: k >= 1");
  Coeffs xy = b.commutator(x, y);
  Coeffs pre = b.commutator(xy, x);
  if (!std::all_of(pre.begin(), pre.end(), [](i64 v) { return v == 0; }))
    throw error("commutator_power_identity: [[x,y],x] != 0");
  Coeffs lhs = b.commutator(b.power(x, k), y);
  Coeffs rhs = b.scale(static_cast<i64>(k), b.mul(b.power(x, k - 1), xy));
  return lhs == rhs;
}

}  // namespace derring
