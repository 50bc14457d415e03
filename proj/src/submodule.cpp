#include "derring/submodule.hpp"

#include <numeric>

#include "derring/residue_echelon.hpp"

namespace derring {

std::int64_t Ambient::exponent() const {
  std::int64_t l = 1;
  for (std::int64_t n : orders) l = std::lcm(l, n);
  return l;
}

std::vector<std::int64_t> Ambient::reduced(std::vector<std::int64_t> v) const {
  if (v.size() != rank()) throw dim_error("Ambient::reduced: length");
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] %= orders[i];
    if (v[i] < 0) v[i] += orders[i];
  }
  return v;
}

IntVec Ambient::reduced(IntVec v) const {
  if (v.size() != rank()) throw dim_error("Ambient::reduced: length");
  for (std::size_t i = 0; i < v.size(); ++i)
    mpz_fdiv_r_ui(v[i].get_mpz_t(), v[i].get_mpz_t(),
                  static_cast<unsigned long>(orders[i]));
  return v;
}

Ambient Ambient::repeated(const Ambient &a, std::size_t copies) {
  std::vector<std::int64_t> o;
  o.reserve(a.rank() * copies);
  for (std::size_t c = 0; c < copies; ++c)
    o.insert(o.end(), a.orders.begin(), a.orders.end());
  return Ambient(std::move(o));
}

Ambient Ambient::concat(const Ambient &a, const Ambient &b) {
  std::vector<std::int64_t> o = a.orders;
  o.insert(o.end(), b.orders.begin(), b.orders.end());
  return Ambient(std::move(o));
}

IntVec to_ivec(const std::vector<std::int64_t> &v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Int(v[i]);
  return r;
}

std::vector<std::int64_t> to_i64vec(const IntVec &v) {
  std::vector<std::int64_t> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].fits_slong_p()) throw error("to_i64vec: entry too large");
    r[i] = v[i].get_si();
  }
  return r;
}

Submodule Submodule::span(const Ambient &amb, const std::vector<IntVec> &rows) {
  const std::size_t n = amb.rank();
  IntMatrix m(rows.size() + n, n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw dim_error("Submodule::span: row length");
    m.set_row(i, rows[i]);
  }
  for (std::size_t i = 0; i < n; ++i) m.at(rows.size() + i, i) = amb.orders[i];
  IntMatrix h = hermite_row_form(std::move(m));
  if (h.rows() != n) throw error("Submodule::span: lattice not full rank");
  return Submodule(amb, std::move(h));
}

Submodule Submodule::span(const Ambient &amb, const IntMatrix &rows) {
  std::vector<IntVec> rv;
  rv.reserve(rows.rows());
  for (std::size_t i = 0; i < rows.rows(); ++i) rv.push_back(rows.row(i));
  return span(amb, rv);
}

Submodule Submodule::zero(const Ambient &amb) { return span(amb, IntMatrix(0, amb.rank())); }

Submodule Submodule::full(const Ambient &amb) {
  return span(amb, IntMatrix::identity(amb.rank()));
}

IntMatrix Submodule::gens() const {
  IntMatrix out(0, amb_.rank());
  for (std::size_t i = 0; i < lat_.rows(); ++i) {
    IntVec r = amb_.reduced(lat_.row(i));
    if (!::derring::is_zero(r)) out.append_row(r);
  }
  return out;
}

std::vector<IntVec> Submodule::gen_rows() const {
  std::vector<IntVec> out;
  IntMatrix g = gens();
  out.reserve(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i) out.push_back(g.row(i));
  return out;
}

mpz_class Submodule::cardinality() const {
  mpz_class c = 1;
  for (std::size_t i = 0; i < lat_.rows(); ++i) {
    mpz_class q = Int(amb_.orders[i]) / lat_.at(i, i);
    c *= q;
  }
  return c;
}

bool Submodule::is_full() const { return cardinality() == amb_.cardinality(); }

bool Submodule::contains(const IntVec &v) const {
  IntVec y;
  return triangular_coords(lat_, amb_.reduced(v), y);
}

bool Submodule::contains(const Submodule &other) const {
  if (amb_ != other.amb_) throw error("Submodule::contains: ambient mismatch");
  for (std::size_t i = 0; i < other.lat_.rows(); ++i)
    if (!contains(other.lat_.row(i))) return false;
  return true;
}

Submodule Submodule::sum(const Submodule &other) const {
  if (amb_ != other.amb_) throw error("Submodule::sum: ambient mismatch");
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < lat_.rows(); ++i) rows.push_back(lat_.row(i));
  for (std::size_t i = 0; i < other.lat_.rows(); ++i)
    rows.push_back(other.lat_.row(i));
  return span(amb_, rows);
}

Submodule Submodule::intersect(const Submodule &other) const {
  if (amb_ != other.amb_) throw error("Submodule::intersect: ambient mismatch");
  MembershipSystem s1 = membership_system();
  MembershipSystem s2 = other.membership_system();
  IntMatrix a(s1.a.rows() + s2.a.rows(), amb_.rank());
  for (std::size_t i = 0; i < s1.a.rows(); ++i) a.set_row(i, s1.a.row(i));
  for (std::size_t i = 0; i < s2.a.rows(); ++i)
    a.set_row(s1.a.rows() + i, s2.a.row(i));
  Ambient cod = Ambient::concat(s1.cod, s2.cod);
  return kernel_mod(a, cod, amb_);
}

IntVec Submodule::reduce(IntVec v) const {
  if (v.size() != amb_.rank()) throw dim_error("Submodule::reduce: length");
  for (std::size_t i = 0; i < lat_.rows(); ++i) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v[i].get_mpz_t(), lat_.at(i, i).get_mpz_t());
    if (q != 0)
      for (std::size_t j = i; j < v.size(); ++j) v[j] -= q * lat_.at(i, j);
  }
  return v;
}

Submodule::MembershipSystem Submodule::membership_system() const {
  QuotientPresentation p = present_ambient_quotient(*this);
  // x in S  <=>  project(x) == 0; project(x) = (x * V) restricted to kept
  IntMatrix a(p.kept.size(), amb_.rank());
  std::vector<std::int64_t> d(p.kept.size());
  for (std::size_t j = 0; j < p.kept.size(); ++j) {
    for (std::size_t i = 0; i < amb_.rank(); ++i)
      a.at(j, i) = p.vmat.at(i, p.kept[j]);
    if (!p.full_d[p.kept[j]].fits_slong_p())
      throw error("membership_system: order too large");
    d[j] = p.full_d[p.kept[j]].get_si();
  }
  return MembershipSystem{std::move(a), Ambient(std::move(d))};
}

QuotientPresentation present_quotient(const IntMatrix &big,
                                      const IntMatrix &small) {
  const std::size_t n = big.cols();
  if (big.rows() != n || small.rows() != n || small.cols() != n)
    throw dim_error("present_quotient: lattices must be square");
  // relation matrix c with c * big == small
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVec y;
    if (!triangular_coords(big, small.row(i), y))
      throw error("present_quotient: small not inside big");
    c.set_row(i, y);
  }
  SmithResult s = smith_normal_form(c);
  QuotientPresentation p;
  p.big = big;
  p.vmat = s.v;
  p.full_d.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    p.full_d[j] = s.d.at(j, j);
    if (p.full_d[j] == 0) throw error("present_quotient: relation not full rank");
    if (p.full_d[j] > 1) p.kept.push_back(j);
  }
  IntMatrix lifts = s.v_inv * big;
  std::vector<std::int64_t> orders;
  p.gen_lifts = IntMatrix(p.kept.size(), n);
  for (std::size_t j = 0; j < p.kept.size(); ++j) {
    p.gen_lifts.set_row(j, lifts.row(p.kept[j]));
    if (!p.full_d[p.kept[j]].fits_slong_p())
      throw error("present_quotient: order too large");
    orders.push_back(p.full_d[p.kept[j]].get_si());
  }
  p.quot = Ambient(std::move(orders));
  return p;
}

IntVec QuotientPresentation::project(const IntVec &x) const {
  IntVec y;
  if (!triangular_coords(big, x, y))
    throw error("QuotientPresentation::project: vector outside big lattice");
  IntVec out(kept.size());
  for (std::size_t j = 0; j < kept.size(); ++j) {
    Int z = 0;
    for (std::size_t i = 0; i < y.size(); ++i) z += y[i] * vmat.at(i, kept[j]);
    mpz_fdiv_r(out[j].get_mpz_t(), z.get_mpz_t(), full_d[kept[j]].get_mpz_t());
  }
  return out;
}

bool QuotientPresentation::in_big(const IntVec &x) const {
  IntVec y;
  return triangular_coords(big, x, y);
}

IntVec QuotientPresentation::lift(const IntVec &coords) const {
  if (coords.size() != kept.size())
    throw dim_error("QuotientPresentation::lift: length");
  IntVec out(big.cols(), Int(0));
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (coords[j] != 0)
      for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += coords[j] * gen_lifts.at(j, i);
  return out;
}

QuotientPresentation present(const Submodule &s) {
  const std::size_t n = s.ambient().rank();
  IntMatrix orders(n, n);
  for (std::size_t i = 0; i < n; ++i) orders.at(i, i) = s.ambient().orders[i];
  return present_quotient(s.lattice(), orders);
}

QuotientPresentation present_ambient_quotient(const Submodule &s) {
  return present_quotient(IntMatrix::identity(s.ambient().rank()), s.lattice());
}

QuotientPresentation present_subquotient(const Submodule &s1,
                                         const Submodule &s2) {
  if (s1.ambient() != s2.ambient())
    throw error("present_subquotient: ambient mismatch");
  if (!s1.contains(s2)) throw error("present_subquotient: s2 not inside s1");
  return present_quotient(s1.lattice(), s2.lattice());
}

namespace {

struct RawSolution {
  std::optional<IntVec> particular;
  std::vector<IntVec> kernel_gens;
};

RawSolution solve_raw(const IntMatrix &a, const IntVec *b, const Ambient &cod,
                      const Ambient &dom) {
  if (a.rows() != cod.rank()) throw dim_error("solve_mod: rows != |cod|");
  if (a.cols() != dom.rank()) throw dim_error("solve_mod: cols != |dom|");
  if (b && b->size() != a.rows()) throw dim_error("solve_mod: rhs length");

  RawSolution out;
  const std::int64_t lcm = cod.exponent();
  if (lcm == 1) {  // every x solves the system
    out.particular = IntVec(dom.rank(), Int(0));
    IntMatrix id = IntMatrix::identity(dom.rank());
    for (std::size_t i = 0; i < dom.rank(); ++i)
      out.kernel_gens.push_back(id.row(i));
    return out;
  }
  if (lcm > (std::int64_t(1) << 31))
    throw cap_error("solve_mod: codomain exponent exceeds the modular engine");

  const std::uint64_t mod = static_cast<std::uint64_t>(lcm);
  ResidueEchelon ech(mod, dom.rank(), true);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const std::uint64_t scale =
        mod / static_cast<std::uint64_t>(cod.orders[i]);
    std::vector<std::uint64_t> row(dom.rank() + 1);
    for (std::size_t j = 0; j < dom.rank(); ++j) {
      std::uint64_t v = mpz_fdiv_ui(a.at(i, j).get_mpz_t(), mod);
      row[j] = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(v) * scale) % mod);
    }
    if (b) {
      std::uint64_t v = mpz_fdiv_ui((*b)[i].get_mpz_t(), mod);
      row[dom.rank()] = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(v) * scale) % mod);
    }
    ech.add_row(std::move(row));
  }
  ech.finalize();

  for (const auto &g : ech.kernel()) {
    IntVec v(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) v[j] = Int(static_cast<long>(g[j]));
    out.kernel_gens.push_back(std::move(v));
  }
  // mod * e_j solves the scaled system; needed whenever a domain order
  // exceeds the codomain exponent
  for (std::size_t j = 0; j < dom.rank(); ++j) {
    IntVec v(dom.rank(), Int(0));
    v[j] = lcm;
    out.kernel_gens.push_back(std::move(v));
  }
  auto part = ech.particular();
  if (part) {
    IntVec v(part->size());
    for (std::size_t j = 0; j < part->size(); ++j)
      v[j] = Int(static_cast<long>((*part)[j]));
    out.particular = std::move(v);
  }
  return out;
}

}  // namespace

std::optional<LinearSolution> solve_mod(const IntMatrix &a, const IntVec &b,
                                        const Ambient &cod,
                                        const Ambient &dom) {
  RawSolution raw = solve_raw(a, &b, cod, dom);
  if (!raw.particular) return std::nullopt;
  Submodule ker = Submodule::span(dom, raw.kernel_gens);
  IntVec x = ker.reduce(*raw.particular);
  // exactness belt: the reduced solution must still satisfy the system
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Int acc = -b[i];
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a.at(i, j) * x[j];
    if (acc % cod.orders[i] != 0)
      throw error("solve_mod: internal verification failed");
  }
  return LinearSolution{std::move(x), std::move(ker)};
}

Submodule kernel_mod(const IntMatrix &a, const Ambient &cod,
                     const Ambient &dom) {
  RawSolution raw = solve_raw(a, nullptr, cod, dom);
  return Submodule::span(dom, raw.kernel_gens);
}

}  // namespace derring
