#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "modinv/graded_ideal.hpp"
#include "modinv/group.hpp"
#include "modinv/report.hpp"

namespace modinv {

/// J_1(G): degree-d slice is the sum over 1 <= e <= d of P_{d-e} times the
/// degree-e invariants.
GradedIdeal compute_J1(const MatrixGroup& g);

struct NextIdeal {
  GradedIdeal ideal;
  /// Canonical coset representatives of the positive-degree G-invariants of P / J.
  std::vector<Poly2> new_invariants;
};

/// J plus lifts of the invariants of P / J. Throws InfiniteQuotient when P / J
/// is not finite-dimensional.
NextIdeal next_ideal(const GradedIdeal& j, const MatrixGroup& g);

struct StableChainResult {
  MatrixGroup group;
  /// J_1, ..., J_k with J_k = J_{k+1}.
  std::vector<GradedIdeal> ideals;
  std::uint32_t stabilization_index = 0;
  /// new_invariants[i] lists the invariants found modulo ideals[i]; the last entry is empty.
  std::vector<std::vector<Poly2>> new_invariants;

  const GradedIdeal& stable_ideal() const { return ideals.back(); }
};

/// Iterates next_ideal until a step finds no invariants. Throws
/// IterationLimit after `max_iter` steps.
StableChainResult stable_chain(const MatrixGroup& g, std::uint32_t max_iter = 10);

/// The quotient of the coinvariant algebra of L^1 by its invariants: its
/// presentation, its monomial basis and its lack of invariants.
VerificationReport verify_basedos(Prime p);

}  // namespace modinv
