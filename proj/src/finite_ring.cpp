#include "derring/finite_ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

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

RingElement::RingElement(const FiniteRing &ring, Coeffs c)
    : ring_(&ring), c_(ring.reduce(std::move(c))) {}

bool RingElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](i64 v) { return v == 0; });
}
RingElement RingElement::operator+(const RingElement &o) const {
  return RingElement(*ring_, ring_->add(c_, o.c_));
}
RingElement RingElement::operator-(const RingElement &o) const {
  return RingElement(*ring_, ring_->sub(c_, o.c_));
}
RingElement RingElement::operator*(const RingElement &o) const {
  return RingElement(*ring_, ring_->mul(c_, o.c_));
}
std::string RingElement::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c_.size(); ++i)
    os << c_[i] << (i + 1 < c_.size() ? "," : "");
  os << ")";
  return os.str();
}

FiniteRing FiniteRing::create(Ambient amb,
                              std::vector<std::vector<Coeffs>> table,
                              Coeffs one, std::string name, CheckLevel check) {
  const std::size_t n = amb.rank();
  for (i64 o : amb.orders)
    if (o > (i64(1) << 31)) throw error("FiniteRing: order too large");
  if (table.size() != n) throw dim_error("FiniteRing: table rows");
  FiniteRing r;
  r.amb_ = std::move(amb);
  r.tab_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw dim_error("FiniteRing: table cols");
    for (std::size_t j = 0; j < n; ++j)
      r.tab_.push_back(r.amb_.reduced(std::move(table[i][j])));
  }
  r.one_ = r.amb_.reduced(std::move(one));
  r.name_ = std::move(name);
  r.validate(check);
  return r;
}

Coeffs FiniteRing::generator(std::size_t i) const {
  Coeffs v(rank(), 0);
  if (amb_.orders[i] > 1) v[i] = 1;
  return v;
}

Coeffs FiniteRing::add(const Coeffs &x, const Coeffs &y) const {
  Coeffs r(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    r[i] = (x[i] + y[i]) % amb_.orders[i];
  return r;
}
Coeffs FiniteRing::sub(const Coeffs &x, const Coeffs &y) const {
  Coeffs r(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    r[i] = (x[i] - y[i]) % amb_.orders[i];
    if (r[i] < 0) r[i] += amb_.orders[i];
  }
  return r;
}
Coeffs FiniteRing::neg(const Coeffs &x) const { return sub(zero(), x); }
Coeffs FiniteRing::scale(i64 c, const Coeffs &x) const {
  Coeffs r(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    r[i] = mod_reduce(static_cast<i128>(c) * x[i], amb_.orders[i]);
  return r;
}

Coeffs FiniteRing::mul(const Coeffs &x, const Coeffs &y) const {
  const std::size_t n = rank();
  if (x.size() != n || y.size() != n) throw dim_error("FiniteRing::mul");
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

Coeffs FiniteRing::commutator(const Coeffs &x, const Coeffs &y) const {
  return sub(mul(x, y), mul(y, x));
}

Coeffs FiniteRing::power(const Coeffs &x, std::uint64_t k) const {
  if (k == 0) return one_;
  Coeffs r = x;
  for (std::uint64_t i = 1; i < k; ++i) r = mul(r, x);
  return r;
}

IntMatrix FiniteRing::left_mul_matrix(const Coeffs &v) const {
  const std::size_t n = rank();
  IntMatrix m(n, n);
  for (std::size_t u = 0; u < n; ++u) {
    Coeffs col = mul(v, generator(u));
    for (std::size_t c = 0; c < n; ++c) m.at(c, u) = col[c];
  }
  return m;
}

IntMatrix FiniteRing::right_mul_matrix(const Coeffs &v) const {
  const std::size_t n = rank();
  IntMatrix m(n, n);
  for (std::size_t u = 0; u < n; ++u) {
    Coeffs col = mul(generator(u), v);
    for (std::size_t c = 0; c < n; ++c) m.at(c, u) = col[c];
  }
  return m;
}

std::size_t FiniteRing::element_count_checked(i64 cap) const {
  mpz_class c = cardinality();
  if (c > cap)
    throw cap_error("enumeration cap exceeded for " + name_ + " (|B| = " +
                    c.get_str() + ", cap = " + std::to_string(cap) + ")");
  return static_cast<std::size_t>(c.get_ui());
}

Coeffs FiniteRing::element_at(std::size_t index) const {
  Coeffs v(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    v[i] = static_cast<i64>(index % static_cast<std::size_t>(amb_.orders[i]));
    index /= static_cast<std::size_t>(amb_.orders[i]);
  }
  return v;
}

std::size_t FiniteRing::element_index(const Coeffs &v) const {
  std::size_t idx = 0;
  for (std::size_t i = rank(); i-- > 0;)
    idx = idx * static_cast<std::size_t>(amb_.orders[i]) +
          static_cast<std::size_t>(v[i]);
  return idx;
}

void FiniteRing::validate(CheckLevel check) const {
  if (check == CheckLevel::none) return;
  const std::size_t n = rank();
  if (one_.size() != n) throw dim_error("FiniteRing: unity length");
  for (std::size_t i = 0; i < n; ++i) {
    Coeffs gi = generator(i);
    if (mul(one_, gi) != gi || mul(gi, one_) != gi)
      throw error("FiniteRing " + name_ + ": unity fails on generator " +
                  std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      // generator orders must kill their products
      const Coeffs &t = table(i, j);
      for (std::size_t l = 0; l < n; ++l) {
        if (mod_reduce(static_cast<i128>(amb_.orders[i]) * t[l],
                       amb_.orders[l]) != 0 ||
            mod_reduce(static_cast<i128>(amb_.orders[j]) * t[l],
                       amb_.orders[l]) != 0)
          throw error("FiniteRing " + name_ + ": table ignores generator order");
      }
    }
  }
  auto assoc_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    Coeffs left = mul(table(i, j), generator(k));
    Coeffs right = mul(generator(i), table(j, k));
    if (left != right)
      throw error("FiniteRing " + name_ + ": associativity fails at (" +
                  std::to_string(i) + "," + std::to_string(j) + "," +
                  std::to_string(k) + ")");
  };
  if (check == CheckLevel::full) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) assoc_triple(i, j, k);
  } else {
    std::uint64_t s = 0x9e3779b97f4a7c15ULL;  // fixed spot-check sequence
    for (int t = 0; t < 256 && n > 0; ++t) {
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      std::size_t i = (s >> 33) % n;
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      std::size_t j = (s >> 33) % n;
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      std::size_t k = (s >> 33) % n;
      assoc_triple(i, j, k);
    }
  }
}

Submodule FiniteRing::center() const {
  const std::size_t n = rank();
  IntMatrix a(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix lj = left_mul_matrix(generator(j));
    IntMatrix rj = right_mul_matrix(generator(j));
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t u = 0; u < n; ++u)
        a.at(j * n + c, u) = lj.at(c, u) - rj.at(c, u);
  }
  return kernel_mod(a, Ambient::repeated(amb_, n), amb_);
}

bool FiniteRing::is_commutative() const {
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i + 1; j < rank(); ++j)
      if (table(i, j) != table(j, i)) return false;
  return true;
}

std::optional<Coeffs> FiniteRing::inverse(const Coeffs &v) const {
  IntMatrix l = left_mul_matrix(v);
  IntVec b = to_ivec(one_);
  auto sol = solve_mod(l, b, amb_, amb_);
  if (!sol) return std::nullopt;
  Coeffs y = reduce(to_i64vec(sol->particular));
  if (mul(v, y) != one_ || mul(y, v) != one_)
    throw error("FiniteRing::inverse: one-sided inverse in a finite ring");
  return y;
}

std::vector<RingElement> FiniteRing::units(i64 cap) const {
  const std::size_t count = element_count_checked(cap);
  std::vector<RingElement> out;
  for (std::size_t idx = 0; idx < count; ++idx) {
    Coeffs v = element_at(idx);
    if (is_unit(v)) out.push_back(element(v));
  }
  return out;
}

std::vector<RingElement> FiniteRing::idempotents(i64 cap) const {
  const std::size_t count = element_count_checked(cap);
  std::vector<RingElement> out;
  for (std::size_t idx = 0; idx < count; ++idx) {
    Coeffs v = element_at(idx);
    if (mul(v, v) == v) out.push_back(element(v));
  }
  return out;
}

std::optional<Coeffs> FiniteRing::semiprime_witness(i64 cap) const {
  const std::size_t count = element_count_checked(cap);
  for (std::size_t idx = 1; idx < count; ++idx) {
    Coeffs x = element_at(idx);
    bool kills = true;
    for (std::size_t i = 0; i < rank() && kills; ++i)
      if (!element(mul(mul(x, generator(i)), x)).is_zero()) kills = false;
    if (kills) return x;
  }
  return std::nullopt;
}

bool FiniteRing::is_semiprime(i64 cap) const {
  return !semiprime_witness(cap).has_value();
}

bool FiniteRing::is_prime(i64 cap) const {
  const std::size_t count = element_count_checked(cap);
  for (std::size_t a = 1; a < count; ++a) {
    Coeffs x = element_at(a);
    std::vector<Coeffs> xg(rank());
    for (std::size_t i = 0; i < rank(); ++i) xg[i] = mul(x, generator(i));
    for (std::size_t b = 1; b < count; ++b) {
      Coeffs y = element_at(b);
      bool separated = false;
      for (std::size_t i = 0; i < rank() && !separated; ++i)
        if (!element(mul(xg[i], y)).is_zero()) separated = true;
      if (!separated) return false;
    }
  }
  return true;
}

FiniteRing::Radical FiniteRing::prime_radical(i64 cap) const {
  const std::size_t count = element_count_checked(cap);
  std::vector<bool> unit_mask(count);
  for (std::size_t idx = 0; idx < count; ++idx)
    unit_mask[idx] = is_unit(element_at(idx));
  std::vector<IntVec> members;
  for (std::size_t idx = 0; idx < count; ++idx) {
    Coeffs x = element_at(idx);
    bool in_radical = true;
    for (std::size_t a = 0; a < count && in_radical; ++a)
      if (!unit_mask[element_index(sub(one_, mul(element_at(a), x)))])
        in_radical = false;
    if (in_radical) members.push_back(to_ivec(x));
  }
  Submodule ideal = Submodule::span(amb_, members);
  if (ideal.cardinality() != static_cast<long>(members.size()))
    throw error("prime_radical: member set is not additively closed");
  // nilpotency certificate
  Submodule power = ideal;
  int k = 1;
  while (!power.is_zero()) {
    std::vector<IntVec> rows;
    for (const IntVec &u : power.gen_rows())
      for (const IntVec &v : ideal.gen_rows())
        rows.push_back(to_ivec(mul(reduce(to_i64vec(u)), reduce(to_i64vec(v)))));
    Submodule next = Submodule::span(amb_, rows);
    ++k;
    if (k > static_cast<int>(count) + 2)
      throw error("prime_radical: radical failed to nilpotate");
    power = next;
  }
  return Radical{ideal, k};
}

Submodule FiniteRing::annihilator(const Submodule &k) const {
  if (k.ambient() != amb_) throw error("annihilator: ambient mismatch");
  std::vector<IntVec> kg = k.gen_rows();
  const std::size_t n = rank();
  IntMatrix a(2 * kg.size() * n, n);
  std::size_t row = 0;
  for (const IntVec &gv : kg) {
    Coeffs g = reduce(to_i64vec(gv));
    IntMatrix l = left_mul_matrix(g);   // r -> g * r
    IntMatrix r = right_mul_matrix(g);  // r -> r * g
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t u = 0; u < n; ++u) {
        a.at(row + c, u) = l.at(c, u);
        a.at(row + n + c, u) = r.at(c, u);
      }
    row += 2 * n;
  }
  return kernel_mod(a, Ambient::repeated(amb_, 2 * kg.size()), amb_);
}

Submodule FiniteRing::commutator_span() const {
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i + 1; j < rank(); ++j)
      rows.push_back(to_ivec(sub(table(i, j), table(j, i))));
  return Submodule::span(amb_, rows);
}

Submodule FiniteRing::commutator_ideal() const {
  Submodule s = commutator_span();
  while (true) {
    std::vector<IntVec> rows;
    for (const IntVec &gv : s.gen_rows()) {
      rows.push_back(gv);
      Coeffs g = reduce(to_i64vec(gv));
      for (std::size_t i = 0; i < rank(); ++i) {
        rows.push_back(to_ivec(mul(generator(i), g)));
        rows.push_back(to_ivec(mul(g, generator(i))));
      }
    }
    Submodule next = Submodule::span(amb_, rows);
    if (next == s) return s;
    s = next;
  }
}

bool FiniteRing::is_invertible_prime(i64 p) const {
  return is_unit(scale(p, one_));
}

std::vector<i64> FiniteRing::pi_additive() const {
  return prime_factors(amb_.exponent());
}

std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> out;
  for (i64 p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

FiniteRing make_zmod(i64 n) {
  if (n < 1) throw error("make_zmod: n must be >= 1");
  Coeffs one{1 % n};
  return FiniteRing::create(Ambient({n}), {{Coeffs{1 % n}}}, one,
                            "Zmod(" + std::to_string(n) + ")");
}

FiniteRing make_matrix_ring(const FiniteRing &r, std::size_t k) {
  if (k < 1) throw error("make_matrix_ring: k must be >= 1");
  const std::size_t nr = r.rank();
  const std::size_t n = k * k * nr;
  auto slot = [&](std::size_t p, std::size_t q, std::size_t t) {
    return (p * k + q) * nr + t;
  };
  std::vector<std::int64_t> orders(n);
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q)
      for (std::size_t t = 0; t < nr; ++t)
        orders[slot(p, q, t)] = r.ambient().orders[t];
  std::vector<std::vector<Coeffs>> tab(n, std::vector<Coeffs>(n, Coeffs(n, 0)));
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q)
      for (std::size_t s = 0; s < nr; ++s)
        for (std::size_t u = 0; u < k; ++u)
          for (std::size_t v = 0; v < k; ++v)
            for (std::size_t t = 0; t < nr; ++t) {
              if (q != u) continue;
              const Coeffs &prod = r.table(s, t);
              Coeffs &dst = tab[slot(p, q, s)][slot(u, v, t)];
              for (std::size_t l = 0; l < nr; ++l)
                dst[slot(p, v, l)] = prod[l];
            }
  Coeffs one(n, 0);
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t t = 0; t < nr; ++t) one[slot(p, p, t)] = r.one()[t];
  return FiniteRing::create(Ambient(std::move(orders)), std::move(tab),
                            std::move(one),
                            "Mat(" + std::to_string(k) + "," + r.name() + ")");
}

FiniteRing make_product(const FiniteRing &a, const FiniteRing &b) {
  const std::size_t na = a.rank(), nb = b.rank(), n = na + nb;
  std::vector<std::int64_t> orders = a.ambient().orders;
  orders.insert(orders.end(), b.ambient().orders.begin(),
                b.ambient().orders.end());
  std::vector<std::vector<Coeffs>> tab(n, std::vector<Coeffs>(n, Coeffs(n, 0)));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t l = 0; l < na; ++l) tab[i][j][l] = a.table(i, j)[l];
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t l = 0; l < nb; ++l)
        tab[na + i][na + j][na + l] = b.table(i, j)[l];
  Coeffs one = a.one();
  one.insert(one.end(), b.one().begin(), b.one().end());
  return FiniteRing::create(Ambient(std::move(orders)), std::move(tab),
                            std::move(one),
                            "Prod(" + a.name() + "," + b.name() + ")");
}

namespace {

// dense polynomial helpers over Z/p, lowest degree first
std::vector<i64> poly_mod(std::vector<i64> a, const std::vector<i64> &m, i64 p) {
  // m monic of degree d
  const std::size_t d = m.size() - 1;
  while (a.size() > d) {
    i64 c = a.back() % p;
    std::size_t off = a.size() - 1 - d;
    if (c != 0)
      for (std::size_t i = 0; i <= d; ++i) {
        a[off + i] = ((a[off + i] - c * m[i]) % p + p * p) % p;
      }
    a.pop_back();
  }
  a.resize(d, 0);
  return a;
}

bool poly_divides(const std::vector<i64> &div, std::vector<i64> rem, i64 p) {
  // both monic-normalized inputs; returns true when div | rem over Z/p
  const std::size_t d = div.size() - 1;
  while (rem.size() > d) {
    i64 lead = rem.back() % p;
    if (lead != 0) {
      // multiply div by lead * inverse(div lead); div monic, so just lead
      std::size_t off = rem.size() - 1 - d;
      for (std::size_t i = 0; i <= d; ++i)
        rem[off + i] = ((rem[off + i] - lead * div[i]) % p + p * p) % p;
    }
    rem.pop_back();
  }
  for (i64 c : rem)
    if (c % p != 0) return false;
  return true;
}

bool poly_irreducible(const std::vector<i64> &f, i64 p) {
  const std::size_t e = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= e; ++d) {
    // all monic polynomials of degree d
    std::vector<i64> g(d + 1, 0);
    g[d] = 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= static_cast<std::size_t>(p);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t t = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<i64>(t % static_cast<std::size_t>(p));
        t /= static_cast<std::size_t>(p);
      }
      if (poly_divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

FiniteRing make_field(i64 p, const std::vector<i64> &monic) {
  if (p < 2 || prime_factors(p) != std::vector<i64>{p})
    throw error("make_field: p must be prime");
  if (monic.size() < 2 || monic.back() % p != 1)
    throw error("make_field: modulus must be monic of degree >= 1");
  std::vector<i64> f(monic.size());
  for (std::size_t i = 0; i < monic.size(); ++i) f[i] = ((monic[i] % p) + p) % p;
  f.back() = 1;
  if (!poly_irreducible(f, p)) throw error("make_field: reducible polynomial");
  const std::size_t e = f.size() - 1;
  // powers x^0 .. x^(2e-2) reduced mod f
  std::vector<std::vector<i64>> pw(2 * e - 1);
  std::vector<i64> cur(1, 1);
  for (std::size_t m = 0; m < 2 * e - 1; ++m) {
    std::vector<i64> padded = cur;
    pw[m] = poly_mod(padded, f, p);
    cur.insert(cur.begin(), 0);  // multiply by x
  }
  std::vector<std::int64_t> orders(e, p);
  std::vector<std::vector<Coeffs>> tab(e, std::vector<Coeffs>(e));
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) {
      Coeffs v(e);
      for (std::size_t l = 0; l < e; ++l) v[l] = pw[i + j][l];
      tab[i][j] = v;
    }
  Coeffs one(e, 0);
  one[0] = 1;
  return FiniteRing::create(Ambient(std::move(orders)), std::move(tab),
                            std::move(one),
                            "GF(" + std::to_string(p) + "," +
                                std::to_string(e) + ")");
}

FiniteRing make_field(i64 p, std::size_t e) {
  if (e < 1) throw error("make_field: e must be >= 1");
  if (prime_factors(p) != std::vector<i64>{p})
    throw error("make_field: p must be prime");
  if (e == 1) {
    FiniteRing r = make_zmod(p);
    r.rename("GF(" + std::to_string(p) + ",1)");
    return r;
  }
  // lexicographically first monic irreducible of degree e
  std::vector<i64> f(e + 1, 0);
  f[e] = 1;
  std::size_t total = 1;
  for (std::size_t i = 0; i < e; ++i) total *= static_cast<std::size_t>(p);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t t = idx;
    for (std::size_t i = 0; i < e; ++i) {
      f[i] = static_cast<i64>(t % static_cast<std::size_t>(p));
      t /= static_cast<std::size_t>(p);
    }
    if (poly_irreducible(f, p)) return make_field(p, f);
  }
  throw error("make_field: no irreducible polynomial found");
}

RingQuotient quotient_ring(const FiniteRing &b, const Submodule &ideal,
                           CheckLevel check) {
  if (ideal.ambient() != b.ambient())
    throw error("quotient_ring: ambient mismatch");
  for (const IntVec &gv : ideal.gen_rows()) {
    Coeffs g = b.reduce(to_i64vec(gv));
    for (std::size_t i = 0; i < b.rank(); ++i) {
      if (!ideal.contains(to_ivec(b.mul(b.generator(i), g))) ||
          !ideal.contains(to_ivec(b.mul(g, b.generator(i)))))
        throw error("quotient_ring: not a two-sided ideal");
    }
  }
  QuotientPresentation pres = present_ambient_quotient(ideal);
  const std::size_t m = pres.quot.rank();
  std::vector<Coeffs> reps(m);
  for (std::size_t j = 0; j < m; ++j)
    reps[j] = b.reduce(to_i64vec(b.ambient().reduced(pres.gen_lifts.row(j))));
  std::vector<std::vector<Coeffs>> tab(m, std::vector<Coeffs>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      tab[i][j] = to_i64vec(pres.project(to_ivec(b.mul(reps[i], reps[j]))));
  Coeffs one = to_i64vec(pres.project(to_ivec(b.one())));
  FiniteRing q = FiniteRing::create(pres.quot, std::move(tab), std::move(one),
                                    b.name() + "/I", check);
  return RingQuotient{std::move(q), std::move(pres)};
}

}  // namespace derring
