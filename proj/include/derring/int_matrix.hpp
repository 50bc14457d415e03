#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace derring {

using Int = mpz_class;
using IntVec = std::vector<Int>;

struct error : std::runtime_error {
  explicit error(const std::string &msg) : std::runtime_error(msg) {}
};
struct cap_error : error {
  explicit cap_error(const std::string &msg) : error(msg) {}
};
struct dim_error : error {
  explicit dim_error(const std::string &msg) : error(msg) {}
};

/// Dense matrix of arbitrary-precision integers.  Intermediates of the
/// normal-form algorithms are allowed to grow; nothing here wraps.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static IntMatrix from_rows(std::size_t cols, const std::vector<IntVec> &rows) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw dim_error("from_rows: ragged input");
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int &at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int &at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  IntVec row(std::size_t i) const {
    return IntVec(e_.begin() + static_cast<long>(i * cols_),
                  e_.begin() + static_cast<long>((i + 1) * cols_));
  }
  void set_row(std::size_t i, const IntVec &v) {
    if (v.size() != cols_) throw dim_error("set_row: wrong length");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
  }
  void append_row(const IntVec &v) {
    if (cols_ == 0 && rows_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw dim_error("append_row: wrong length");
    e_.insert(e_.end(), v.begin(), v.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
  }
  // row[a] += q * row[b]
  void add_row_mult(std::size_t a, std::size_t b, const Int &q) {
    for (std::size_t j = 0; j < cols_; ++j) at(a, j) += q * at(b, j);
  }
  void add_col_mult(std::size_t a, std::size_t b, const Int &q) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, a) += q * at(i, b);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
  }
  void negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix &o) const {
    if (cols_ != o.rows_) throw dim_error("matmul: shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int &a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
      }
    return r;
  }

  bool operator==(const IntMatrix &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const IntMatrix &o) const { return !(*this == o); }

  bool is_zero() const {
    for (const Int &x : e_)
      if (x != 0) return false;
    return true;
  }

  std::string str() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

// vector helpers
inline IntVec operator+(const IntVec &a, const IntVec &b) {
  if (a.size() != b.size()) throw dim_error("vec add: length mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline IntVec operator-(const IntVec &a, const IntVec &b) {
  if (a.size() != b.size()) throw dim_error("vec sub: length mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline IntVec operator*(const Int &c, const IntVec &a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}
inline bool is_zero(const IntVec &a) {
  for (const Int &x : a)
    if (x != 0) return false;
  return true;
}

}  // namespace derring
