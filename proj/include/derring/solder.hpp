#pragma once

#include <optional>

#include "derring/derivation.hpp"

namespace derring {

/// Dense value table h(x) indexed by the ring's element enumeration order.
struct Solder {
  std::vector<Coeffs> values;
};

/// Both solder conditions checked exhaustively:
///   (a+b) h(a+b) == a h(a) + b h(b) for all a, b
///   h(ab) == h(a) + h(b) for all nonzero a, b (ab may be zero)
bool is_solder(const FiniteRing &b, const std::vector<Coeffs> &values,
               std::int64_t cap);

/// Complete list, by exhaustive backtracking over value assignments.
std::vector<Solder> enumerate_solders(const FiniteRing &b, std::int64_t cap);

/// x -> x h(x) as a Derivation; present exactly when x [h(x), B] == 0 for
/// every x.
std::optional<Derivation> delta_from_solder(const FiniteRing &b,
                                            const Solder &h, std::int64_t cap);

struct SolderReport {
  bool conjugation_symmetric;   // h(xy) == h(yx)
  bool two_torsion_free;        // the hypothesis of the h(2) item
  bool h_two_zero;              // h(2) == 0 (meaningful under the hypothesis)
  bool idempotents_zero;        // h(e) == 0 for nonzero e with e^2 == e
  bool inverse_antisymmetric;   // xy == 1 implies h(x) == -h(y)
  bool involution_two_torsion;  // x^2 == 1 implies 2 h(x) == 0
  bool delta_is_derivation;
  bool clean() const {
    return conjugation_symmetric && (!two_torsion_free || h_two_zero) &&
           idempotents_zero && inverse_antisymmetric && involution_two_torsion;
  }
};
SolderReport check_solder_properties(const FiniteRing &b, const Solder &h,
                                     std::int64_t cap);

}  // namespace derring
