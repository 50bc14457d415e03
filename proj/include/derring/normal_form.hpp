#pragma once

#include "derring/int_matrix.hpp"

namespace derring {

/// u * a * v == d with u, v unimodular, d diagonal, d1 | d2 | ... , di >= 0.
/// v_inv is maintained alongside v so callers can change coordinates both ways.
struct SmithResult {
  IntMatrix u, d, v, v_inv;
};

SmithResult smith_normal_form(const IntMatrix &a);

/// Canonical row Hermite form of the lattice spanned by the rows of `a`:
/// pivot columns strictly increase, pivots positive, entries above a pivot
/// reduced into [0, pivot).  Zero rows are dropped, so equal row lattices
/// give identical results.
IntMatrix hermite_row_form(IntMatrix a);

/// Solve y * h = x exactly for upper-triangular h with positive pivots
/// (rows of h in Hermite shape).  Returns false when x is not in the row
/// lattice of h.
bool triangular_coords(const IntMatrix &h, const IntVec &x, IntVec &y);

}  // namespace derring
