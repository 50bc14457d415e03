#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "derring/int_matrix.hpp"

namespace derring {

/// Howell-form row accumulator modulo a fixed modulus (1 <= mod <= 2^31).
/// Rows are inserted one at a time; the accumulator keeps at most one row
/// per pivot column plus the annihilator rows required for the Howell
/// property, so the stored row set spans exactly the same row module as
/// everything inserted.  Columns [0, cols) may hold pivots; an optional
/// trailing right-hand-side column is carried along but never pivots.
class ResidueEchelon {
public:
  ResidueEchelon(std::uint64_t modulus, std::size_t cols, bool with_rhs);

  void add_row(std::vector<std::uint64_t> row);
  // reduce an integer row (and optional rhs) into Z/mod, then insert
  void add_row(const IntVec &coeffs, const Int *rhs = nullptr);

  /// Reduce entries above pivots; rows end up sorted by pivot column.
  void finalize();

  bool inconsistent() const { return inconsistent_; }
  std::uint64_t modulus() const { return mod_; }
  std::size_t cols() const { return cols_; }
  /// Echelon rows sorted by pivot column (call finalize() first).
  const std::vector<std::vector<std::uint64_t>> &rows() const { return rows_; }

  /// Canonical solution of the inserted system (requires rhs rows);
  /// nullopt when the system is inconsistent.
  std::optional<std::vector<std::uint64_t>> particular() const;

  /// Generators of { x : r * x == 0 (mod modulus) for every inserted row r },
  /// as vectors of length cols().
  std::vector<std::vector<std::uint64_t>> kernel() const;

private:
  std::uint64_t mod_;
  std::size_t cols_;
  bool with_rhs_;
  bool inconsistent_ = false;
  bool finalized_ = false;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivot_row_;  // column -> row index or npos

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t width() const { return cols_ + (with_rhs_ ? 1 : 0); }
  void insert(std::vector<std::uint64_t> r);
};

}  // namespace derring
