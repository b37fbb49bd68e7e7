#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "modinv/graded_ideal.hpp"
#include "modinv/group.hpp"
#include "modinv/poly2.hpp"
#include "modinv/report.hpp"

namespace modinv {

/// f -> (sigma(f) - f) / (c * v_sigma), with c = 1 unless rescaled.
class DemazureOp {
 public:
  explicit DemazureOp(Reflection r, std::optional<FpScalar> scale = std::nullopt);

  const Reflection& reflection() const noexcept { return r_; }
  Prime prime() const noexcept { return r_.prime(); }

  Poly2 apply(const Poly2& f) const;

  /// The operator on degree-d slices, a (d x (d+1)) matrix.
  Matrix slice_matrix(std::uint32_t d) const;

 private:
  Reflection r_;
  /// Inverse of the rescaling constant.
  std::uint32_t inv_scale_ = 1;
};

Poly2 delta(const DemazureOp& op, const Poly2& f);

/// ops[0](ops[1](... ops[k-1](f))).
Poly2 chain(std::span<const DemazureOp> ops, const Poly2& f);

struct GenInvResult {
  GradedIdeal ideal;
  std::vector<Poly2> generators;
  std::vector<std::uint32_t> degrees;
  bool regular_sequence = false;
  std::optional<std::uint32_t> topdeg;
};

/// The generalized-invariant ideal I(S), one degree at a time:
/// GI_0 = 0 and GI_d = { f : Delta_s(f) in GI_{d-1} for all s in S }.
/// Throws CapExceeded if the quotient does not vanish by the degree cap.
GenInvResult generalized_ideal(std::span<const DemazureOp> ops);
GenInvResult generalized_ideal(std::span<const Reflection> s);

/// Literal check that every length-k chain from S kills f, k = deg f.
/// Throws BudgetExceeded when |S|^k exceeds `budget`.
bool brute_force_is_gen_inv(std::span<const Reflection> s, const Poly2& f, std::uint64_t budget = 1'000'000);

/// Identities for Delta = Delta_omega and Delta' = Delta_omega'.
VerificationReport verify_operadorsD(Prime p, std::uint64_t seed = 1);

}  // namespace modinv
