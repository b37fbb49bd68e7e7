#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modinv/linalg.hpp"
#include "modinv/mat2.hpp"
#include "modinv/poly2.hpp"
#include "modinv/report.hpp"

namespace modinv {

/// Supplies the generators of an ideal degree by degree. The owning
/// GradedIdeal calls generators_in_degree once per degree, in increasing
/// order, until its slices saturate.
class SliceSource {
 public:
  virtual ~SliceSource() = default;
  virtual std::vector<Vec> generators_in_degree(std::uint32_t d) = 0;
  /// Upper bound on generator degrees, when one is known up front.
  virtual std::optional<std::uint32_t> generator_degree_bound() const { return std::nullopt; }
};

/// Homogeneous ideal of F_p[x, y] held as exact per-degree slices.
///
/// slice(d) = x * slice(d-1) + y * slice(d-1) + span(generators of degree d).
/// Slices are cached extend-only; copies of a GradedIdeal share the cache, and
/// cache extension is serialized per ideal.
class GradedIdeal {
 public:
  /// Ideal generated by nonzero homogeneous polynomials of positive degree.
  static GradedIdeal from_generators(Prime p, std::vector<Poly2> gens, std::string description = {});
  static GradedIdeal from_source(Prime p, std::unique_ptr<SliceSource> src, std::string description);

  /// This ideal plus the given homogeneous polynomials.
  GradedIdeal with_extra(std::vector<Poly2> extra, std::string description = {}) const;

  Prime prime() const noexcept;
  const std::string& description() const noexcept;
  /// The generators passed to from_generators; empty for source-backed ideals.
  const std::vector<Poly2>& explicit_generators() const noexcept;

  /// Degree-d slice as a subspace of F_p^{d+1}.
  const Subspace& slice(std::uint32_t d) const;

  /// First degree whose slice is full, searching up to `cap`.
  std::optional<std::uint32_t> saturation_degree(std::uint32_t cap) const;

  /// Degree bound for a generating set: the explicit bound when known, else
  /// the saturation degree. Throws CapExceeded if neither exists below `cap`.
  std::uint32_t generation_degree(std::uint32_t cap) const;

 private:
  struct State;
  explicit GradedIdeal(std::shared_ptr<State> s) : state_(std::move(s)) {}
  std::shared_ptr<State> state_;
};

/// Global degree cap: 4 p^2 unless MODINV_MAX_DEGREE is set.
std::uint32_t default_degree_cap(Prime p);

/// Degree-d subspace fixed by every generator. With `modulo`, the fixed
/// subspace of the quotient slice, returned as canonical coset representatives.
Subspace invariant_slice(Prime p, std::span<const Mat2> gens, std::uint32_t d,
                         const GradedIdeal* modulo = nullptr);

const Subspace& ideal_slice(const GradedIdeal& ideal, std::uint32_t d);

bool member(const GradedIdeal& ideal, const Poly2& f);

/// slice(b, d) is contained in slice(a, d) for every d up to b's generation degree.
bool ideal_contains(const GradedIdeal& a, const GradedIdeal& b);

bool ideal_equal(const GradedIdeal& a, const GradedIdeal& b);

struct QuotientDims {
  std::vector<std::uint64_t> dims;
  /// Top nonzero degree of a finite-dimensional quotient.
  std::optional<std::uint32_t> topdeg;

  std::uint64_t total() const;
};

/// dims[d] = (d + 1) - dim slice(d), stopping at the first zero. topdeg is
/// absent when no zero occurs up to the cap.
QuotientDims quotient_dims(const GradedIdeal& ideal, std::optional<std::uint32_t> cap = std::nullopt);

/// Lifts of a basis of slice(d) modulo P_1 * slice(d-1), degree by degree.
/// Throws DomainError if the slices are not monotone.
std::vector<Poly2> minimal_generators(std::span<const Subspace> slices);
std::vector<Poly2> minimal_generators(const GradedIdeal& ideal);

/// Coefficients of (1 - t^e1)(1 - t^e2) / (1 - t)^2.
std::vector<std::uint64_t> complete_intersection_series(std::uint32_t e1, std::uint32_t e2);

struct MonomialFamily {
  std::string name;
  Prime prime;
  std::vector<Monomial> monomials;
};

/// Two blocks: i <= rp-1, j <= p^2-p+r-1; and rp <= i <= p^2-p-1, j <= r-1.
MonomialFamily omega_family(std::uint32_t r, Prime p);
/// i <= r-1, j <= ps-1.
MonomialFamily gamma_family(std::uint32_t r, std::uint32_t s, Prime p);
/// i <= p-1, j <= 2p-2 with i + j != 3p-3; plus x^i for p <= i <= 2p-3.
MonomialFamily theta_family(Prime p);

/// Checks that the family maps onto a basis of each quotient slice of `ideal`
/// and that its size equals `expected_total`.
VerificationReport basis_check(const MonomialFamily& family, const GradedIdeal& ideal,
                               std::uint64_t expected_total);

}  // namespace modinv
