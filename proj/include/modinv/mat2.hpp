#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "modinv/fp.hpp"

namespace modinv {

/// Invertible 2x2 matrix [[a, b], [c, d]] over F_p.
class Mat2 {
 public:
  /// Entries are reduced mod p. Throws DomainError when the determinant vanishes.
  Mat2(Prime p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static Mat2 identity(Prime p) { return Mat2(p, 1, 0, 0, 1); }
  static Mat2 diag(Prime p, std::int64_t a, std::int64_t b) { return Mat2(p, a, 0, 0, b); }
  /// x -> x + y, y -> y.
  static Mat2 omega(Prime p) { return Mat2(p, 1, 0, 1, 1); }
  /// x -> x, y -> x + y.
  static Mat2 omega_prime(Prime p) { return Mat2(p, 1, 1, 0, 1); }

  /// Builds from a code produced by code(); the code must denote an invertible matrix.
  static Mat2 from_code(Prime p, std::uint32_t code);

  /// Parses "a,b;c,d" (row-major integers, negatives allowed).
  static Mat2 parse(std::string_view text, Prime p);

  Prime prime() const noexcept { return p_; }
  std::uint32_t a() const noexcept { return a_; }
  std::uint32_t b() const noexcept { return b_; }
  std::uint32_t c() const noexcept { return c_; }
  std::uint32_t d() const noexcept { return d_; }

  std::uint32_t det() const noexcept;
  Mat2 inverse() const;
  bool is_identity() const noexcept { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }
  bool is_upper_triangular() const noexcept { return c_ == 0; }

  /// Dense index in [0, p^4), stable across runs.
  std::uint32_t code() const noexcept;

  std::string to_string() const;

  friend Mat2 operator*(const Mat2& l, const Mat2& r);
  friend bool operator==(const Mat2& l, const Mat2& r) noexcept {
    return l.p_ == r.p_ && l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_ && l.d_ == r.d_;
  }

 private:
  struct Unchecked {};
  Mat2(Unchecked, Prime p, std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d)
      : p_(p), a_(a), b_(b), c_(c), d_(d) {}

  Prime p_;
  std::uint32_t a_, b_, c_, d_;
};

/// Parses whitespace-separated matrices in the "a,b;c,d" grammar.
std::vector<Mat2> parse_matrix_list(std::string_view text, Prime p);

/// |GL_2(F_p)| = (p^2 - 1)(p^2 - p).
std::uint64_t gl2_order(Prime p);

}  // namespace modinv
