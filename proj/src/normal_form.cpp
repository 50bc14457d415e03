#include "derring/normal_form.hpp"

#include <sstream>

namespace derring {

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? " [" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << at(i, j).get_str() << (j + 1 < cols_ ? " " : "");
    os << "]" << (i + 1 < rows_ ? "\n" : "");
  }
  os << "]";
  return os.str();
}

namespace {

int cmpabs(const Int &a, const Int &b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

std::size_t first_nonzero(const IntMatrix &m, std::size_t row) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m.at(row, j) != 0) return j;
  return m.cols();
}

}  // namespace

IntMatrix hermite_row_form(IntMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclid on the column until only row r holds a nonzero entry.
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (a.at(i, c) != 0 &&
            (best == m || cmpabs(a.at(i, c), a.at(best, c)) < 0))
          best = i;
      if (best == m) break;
      a.swap_rows(r, best);
      bool below = false;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a.at(i, c) == 0) continue;
        Int q = a.at(i, c) / a.at(r, c);
        if (q != 0) a.add_row_mult(i, r, -q);
        if (a.at(i, c) != 0) below = true;
      }
      if (!below) break;
    }
    if (r < m && a.at(r, c) != 0) {
      if (a.at(r, c) < 0) a.negate_row(r);
      for (std::size_t i = 0; i < r; ++i) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a.at(i, c).get_mpz_t(),
                   a.at(r, c).get_mpz_t());
        if (q != 0) a.add_row_mult(i, r, -q);
      }
      ++r;
    }
  }
  IntMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i) out.set_row(i, a.row(i));
  return out;
}

SmithResult smith_normal_form(const IntMatrix &a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithResult res{IntMatrix::identity(m), a, IntMatrix::identity(n),
                  IntMatrix::identity(n)};
  IntMatrix &d = res.d;
  IntMatrix &u = res.u;
  IntMatrix &v = res.v;
  IntMatrix &vi = res.v_inv;

  auto row_add = [&](std::size_t dst, std::size_t src, const Int &q) {
    d.add_row_mult(dst, src, q);
    u.add_row_mult(dst, src, q);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Int &q) {
    d.add_col_mult(dst, src, q);
    v.add_col_mult(dst, src, q);
    vi.add_row_mult(src, dst, -q);
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    d.swap_rows(i, j);
    u.swap_rows(i, j);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    d.swap_cols(i, j);
    v.swap_cols(i, j);
    vi.swap_rows(i, j);
  };
  auto col_negate = [&](std::size_t j) {
    d.negate_col(j);
    v.negate_col(j);
    vi.negate_row(j);
  };

  const std::size_t mn = std::min(m, n);
  for (std::size_t k = 0; k < mn; ++k) {
    while (true) {
      // smallest nonzero entry of the trailing block to (k, k)
      std::size_t pi = m, pj = n;
      for (std::size_t i = k; i < m; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (d.at(i, j) != 0 &&
              (pi == m || cmpabs(d.at(i, j), d.at(pi, pj)) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi == m) {
        k = mn;  // trailing block zero; done
        break;
      }
      row_swap(k, pi);
      col_swap(k, pj);

      bool dirty = false;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (d.at(i, k) == 0) continue;
        Int q = d.at(i, k) / d.at(k, k);
        if (q != 0) row_add(i, k, -q);
        if (d.at(i, k) != 0) dirty = true;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (d.at(k, j) == 0) continue;
        Int q = d.at(k, j) / d.at(k, k);
        if (q != 0) col_add(j, k, -q);
        if (d.at(k, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // divisibility: d[k][k] must divide the whole trailing block
      bool fixed = true;
      for (std::size_t i = k + 1; i < m && fixed; ++i)
        for (std::size_t j = k + 1; j < n && fixed; ++j)
          if (d.at(i, j) % d.at(k, k) != 0) {
            row_add(k, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (k >= mn) break;
  }
  for (std::size_t k = 0; k < mn; ++k)
    if (d.at(k, k) < 0) col_negate(k);
  return res;
}

bool triangular_coords(const IntMatrix &h, const IntVec &x, IntVec &y) {
  const std::size_t r = h.rows(), n = h.cols();
  if (x.size() != n) throw dim_error("triangular_coords: length mismatch");
  y.assign(r, Int(0));
  IntVec res = x;
  std::size_t i = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (i < r && first_nonzero(h, i) == j) {
      if (res[j] % h.at(i, j) != 0) return false;
      y[i] = res[j] / h.at(i, j);
      if (y[i] != 0)
        for (std::size_t c = j; c < n; ++c) res[c] -= y[i] * h.at(i, c);
      ++i;
    } else if (res[j] != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace derring
