#include "derring/residue_echelon.hpp"

#include <algorithm>
#include <numeric>

namespace derring {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

// g = gcd(a, b) with x*a + y*b == g
i64 extgcd(i64 a, i64 b, i64 &x, i64 &y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  i64 x1, y1;
  i64 g = extgcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

u64 to_residue(i64 v, u64 m) {
  i64 r = v % static_cast<i64>(m);
  if (r < 0) r += static_cast<i64>(m);
  return static_cast<u64>(r);
}

// unit u (gcd(u, m) == 1) with u*a == gcd(a, m) (mod m); needs a % m != 0
u64 unit_for(u64 a, u64 m) {
  u64 g = std::gcd(a, m);
  u64 a1 = a / g, m1 = m / g;
  u64 u = 1;
  if (m1 > 1) {
    i64 x, y;
    extgcd(static_cast<i64>(a1 % m1), static_cast<i64>(m1), x, y);
    u = to_residue(x, m1);
    if (u == 0) u = 1;
  }
  while (std::gcd(u, m) != 1) u += m1;
  return u % m;
}

}  // namespace

ResidueEchelon::ResidueEchelon(u64 modulus, std::size_t cols, bool with_rhs)
    : mod_(modulus), cols_(cols), with_rhs_(with_rhs),
      pivot_row_(cols, npos) {
  if (modulus == 0) throw error("ResidueEchelon: modulus must be positive");
}

void ResidueEchelon::add_row(std::vector<u64> row) {
  if (row.size() != width()) throw dim_error("ResidueEchelon: row width");
  for (u64 &v : row) v %= mod_;
  finalized_ = false;
  insert(std::move(row));
}

void ResidueEchelon::add_row(const IntVec &coeffs, const Int *rhs) {
  if (coeffs.size() != cols_) throw dim_error("ResidueEchelon: row width");
  std::vector<u64> row(width());
  for (std::size_t j = 0; j < cols_; ++j)
    row[j] = mpz_fdiv_ui(coeffs[j].get_mpz_t(), mod_);
  if (with_rhs_) row[cols_] = rhs ? mpz_fdiv_ui(rhs->get_mpz_t(), mod_) : 0;
  finalized_ = false;
  insert(std::move(row));
}

void ResidueEchelon::insert(std::vector<u64> first) {
  std::vector<std::vector<u64>> pending;
  pending.push_back(std::move(first));
  auto submul = [&](std::vector<u64> &dst, const std::vector<u64> &src, u64 f) {
    f %= mod_;
    if (f == 0) return;
    for (std::size_t j = 0; j < dst.size(); ++j)
      dst[j] = (dst[j] + mod_ - mulmod(f, src[j], mod_)) % mod_;
  };
  auto is_null = [](const std::vector<u64> &r) {
    for (u64 v : r)
      if (v) return false;
    return true;
  };
  auto push_annihilator = [&](const std::vector<u64> &row, u64 pivot) {
    u64 q = mod_ / pivot;
    if (q <= 1) return;
    std::vector<u64> ann(row.size());
    for (std::size_t j = 0; j < row.size(); ++j)
      ann[j] = mulmod(q, row[j], mod_);
    if (!is_null(ann)) pending.push_back(std::move(ann));
  };

  while (!pending.empty()) {
    std::vector<u64> r = std::move(pending.back());
    pending.pop_back();
    std::size_t c = 0;
    while (c < cols_ && r[c] == 0) ++c;
    bool installed = false;
    while (c < cols_) {
      if (pivot_row_[c] == npos) {
        u64 u = unit_for(r[c], mod_);
        for (u64 &v : r) v = mulmod(u, v, mod_);
        u64 g = r[c];  // gcd of the old entry with mod; divides mod
        pivot_row_[c] = rows_.size();
        push_annihilator(r, g);
        rows_.push_back(std::move(r));
        installed = true;
        break;
      }
      u64 p = rows_[pivot_row_[c]][c];
      if (r[c] % p == 0) {
        submul(r, rows_[pivot_row_[c]], r[c] / p);
      } else {
        i64 x, y;
        u64 g = static_cast<u64>(
            extgcd(static_cast<i64>(p), static_cast<i64>(r[c]), x, y));
        const std::vector<u64> piv = rows_[pivot_row_[c]];
        std::vector<u64> comb(piv.size());
        u64 xm = to_residue(x, mod_), ym = to_residue(y, mod_);
        for (std::size_t j = 0; j < piv.size(); ++j)
          comb[j] = (mulmod(xm, piv[j], mod_) + mulmod(ym, r[j], mod_)) % mod_;
        // comb[c] == g, and g | p | mod
        std::vector<u64> old = piv;
        submul(old, comb, p / g);
        submul(r, comb, r[c] / g);
        push_annihilator(comb, g);
        rows_[pivot_row_[c]] = std::move(comb);
        if (!is_null(old)) pending.push_back(std::move(old));
      }
      while (c < cols_ && r[c] == 0) ++c;
    }
    if (!installed && with_rhs_ && r[cols_] % mod_ != 0) inconsistent_ = true;
  }
}

void ResidueEchelon::finalize() {
  if (finalized_) return;
  std::vector<std::vector<u64>> sorted;
  sorted.reserve(rows_.size());
  std::vector<std::size_t> pcol;
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_row_[c] != npos) {
      pcol.push_back(c);
      sorted.push_back(std::move(rows_[pivot_row_[c]]));
    }
  rows_ = std::move(sorted);
  std::fill(pivot_row_.begin(), pivot_row_.end(), npos);
  for (std::size_t i = 0; i < rows_.size(); ++i) pivot_row_[pcol[i]] = i;
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    u64 p = rows_[j][pcol[j]];
    for (std::size_t i = 0; i < j; ++i) {
      u64 q = rows_[i][pcol[j]] / p;
      if (q == 0) continue;
      for (std::size_t cc = 0; cc < width(); ++cc)
        rows_[i][cc] =
            (rows_[i][cc] + mod_ - mulmod(q, rows_[j][cc], mod_)) % mod_;
    }
  }
  finalized_ = true;
}

std::optional<std::vector<u64>> ResidueEchelon::particular() const {
  if (!with_rhs_) throw error("ResidueEchelon: no rhs column");
  if (!finalized_) throw error("ResidueEchelon: finalize() before particular()");
  if (inconsistent_) return std::nullopt;
  std::vector<u64> x(cols_, 0);
  for (std::size_t i = rows_.size(); i-- > 0;) {
    const std::vector<u64> &row = rows_[i];
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    unsigned __int128 acc = row[cols_];  // rhs
    for (std::size_t j = c + 1; j < cols_; ++j)
      acc += static_cast<unsigned __int128>(mod_ - mulmod(row[j], x[j], mod_));
    u64 t = static_cast<u64>(acc % mod_);
    u64 p = row[c];  // divides mod
    if (t % p != 0) return std::nullopt;
    x[c] = (t / p) % (mod_ / p);
  }
  return x;
}

std::vector<std::vector<u64>> ResidueEchelon::kernel() const {
  if (!finalized_) throw error("ResidueEchelon: finalize() before kernel()");
  const std::size_t r = rows_.size();
  ResidueEchelon aux(mod_, r + cols_, false);
  for (std::size_t j = 0; j < cols_; ++j) {
    std::vector<u64> row(r + cols_, 0);
    for (std::size_t i = 0; i < r; ++i) row[i] = rows_[i][j];
    row[r + j] = 1;
    aux.add_row(std::move(row));
  }
  aux.finalize();
  std::vector<std::vector<u64>> gens;
  for (const auto &row : aux.rows()) {
    bool zero_prefix = true;
    for (std::size_t i = 0; i < r && zero_prefix; ++i)
      if (row[i] != 0) zero_prefix = false;
    if (!zero_prefix) continue;
    gens.emplace_back(row.begin() + static_cast<long>(r), row.end());
  }
  return gens;
}

}  // namespace derring
