#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "modinv/fp.hpp"
#include "modinv/linalg.hpp"
#include "modinv/mat2.hpp"

namespace modinv {

struct Monomial {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  std::uint32_t degree() const noexcept { return x + y; }
  friend bool operator==(Monomial, Monomial) = default;
};

/// Graded lexicographic with x > y, largest first.
struct GrlexDesc {
  bool operator()(Monomial a, Monomial b) const noexcept {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.x > b.x;
  }
};

/// Sparse polynomial in F_p[x, y]. No stored coefficient is zero.
class Poly2 {
 public:
  using Terms = std::map<Monomial, std::uint32_t, GrlexDesc>;

  explicit Poly2(Prime p) : p_(p) {}

  static Poly2 constant(Prime p, std::int64_t c);
  static Poly2 monomial(Prime p, std::uint32_t i, std::uint32_t j, std::int64_t c = 1);
  static Poly2 x(Prime p) { return monomial(p, 1, 0); }
  static Poly2 y(Prime p) { return monomial(p, 0, 1); }

  /// Parses the text grammar: terms joined by + or -, each `[c*]x^i[*]y^j`.
  static Poly2 parse(std::string_view text, Prime p);

  Prime prime() const noexcept { return p_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  FpScalar coeff(std::uint32_t i, std::uint32_t j) const;

  /// Total degree, or -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  Poly2 homogeneous_component(std::uint32_t d) const;
  /// Degrees with a nonzero component, ascending.
  std::vector<std::uint32_t> degrees() const;

  Poly2 pow(std::uint32_t e) const;

  /// Canonical rendering: grlex order, coefficients in [1, p).
  std::string to_string() const;

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Poly2& a, FpScalar c);
  friend Poly2 operator*(FpScalar c, const Poly2& a) { return a * c; }

  friend bool operator==(const Poly2& a, const Poly2& b) noexcept {
    return a.p_ == b.p_ && a.terms_ == b.terms_;
  }

  /// Adds c * x^i y^j.
  void add_term(std::uint32_t i, std::uint32_t j, std::uint32_t c);

 private:
  Prime p_;
  Terms terms_;
};

/// alpha*x + beta*y, normalized so the first nonzero coefficient is 1.
class LinearForm {
 public:
  LinearForm(FpScalar alpha, FpScalar beta);

  FpScalar alpha() const noexcept { return alpha_; }
  FpScalar beta() const noexcept { return beta_; }
  Poly2 to_poly() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  FpScalar alpha_;
  FpScalar beta_;
};

class NotDivisible : public Error {
 public:
  explicit NotDivisible(Poly2 remainder)
      : Error("not exactly divisible; remainder " + remainder.to_string()),
        remainder_(std::move(remainder)) {}
  const Poly2& remainder() const noexcept { return remainder_; }

 private:
  Poly2 remainder_;
};

/// Substitutes the row vector (x, y) by (x, y) A: x -> a x + c y, y -> b x + d y.
/// act(A, act(B, f)) == act(A * B, f).
Poly2 act(const Mat2& a, const Poly2& f);

/// Exact quotient f / l. Throws NotDivisible carrying the remainder.
Poly2 div_exact_linear(const Poly2& f, const LinearForm& l);

/// Exact quotient f / g by leading-term cancellation. Throws NotDivisible.
Poly2 div_exact(const Poly2& f, const Poly2& g);

// Named polynomials.
Poly2 delta(Prime p);             // x y^p - x^p y
Poly2 dickson_d1(Prime p);        // (x y^{p^2} - x^{p^2} y) / delta
Poly2 dickson_d0(Prime p);        // (x^p y^{p^2} - x^{p^2} y^p) / delta
Poly2 gamma(std::uint32_t i, Prime p);
Poly2 rho(std::uint32_t s, Prime p);  // (y^p - x^{p-1} y)^s
Poly2 power(char var, std::uint32_t k, Prime p);

/// Looks up "delta", "d0", "d1", "gamma(i)", "rho(s)", "x^k", "y^k".
Poly2 make_named(std::string_view name, Prime p);

// Degree slices: a homogeneous degree-d polynomial is the length-(d+1)
// coefficient vector of (x^d, x^{d-1} y, ..., y^d).

Vec to_slice(const Poly2& f, std::uint32_t d);
Poly2 from_slice(Prime p, std::uint32_t d, std::span<const std::uint32_t> v);
/// Monomial x^{d-k} y^k as a slice vector.
Vec unit_slice(std::uint32_t d, std::uint32_t k);

/// Matrix of f -> act(A, f) on the degree-d slice; column k is the image of x^{d-k} y^k.
Matrix slice_action(const Mat2& a, std::uint32_t d);

/// Multiplication by x (or y) from degree d to degree d + 1.
Vec times_x(std::span<const std::uint32_t> v);
Vec times_y(std::span<const std::uint32_t> v);

/// Synthetic division of a degree-d slice vector by a linear form. Returns
/// false when the division leaves a remainder.
bool slice_div_linear(std::span<const std::uint32_t> f, const LinearForm& l, Vec& quotient);

struct VerificationReport;

/// Identities among delta, d0, d1 and the reductions modulo <delta^r>. Requires p > 2.
VerificationReport verify_formules(Prime p);

}  // namespace modinv
