#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "modinv/errors.hpp"

namespace modinv {

/// A validated prime modulus. Construction rejects composites by trial division.
class Prime {
 public:
  explicit Prime(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }

  friend bool operator==(Prime a, Prime b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

inline void require_same(Prime a, Prime b) {
  if (!(a == b)) throw PrimeMismatch(a.value(), b.value());
}

/// Raw residue arithmetic. Inputs are assumed reduced.
namespace fp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return a >= b ? a - b : a + p - b;
}

inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) noexcept { return a == 0 ? 0 : p - a; }

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

/// Reduces a signed integer into [0, p).
inline std::uint32_t reduce(std::int64_t v, std::uint32_t p) noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

/// Inverse by the extended Euclidean algorithm. Throws DivisionByZero on 0.
std::uint32_t inv(std::uint32_t a, std::uint32_t p);

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) noexcept;

}  // namespace fp

/// An element of F_p carrying its modulus.
class FpScalar {
 public:
  FpScalar(std::int64_t v, Prime p) : value_(fp::reduce(v, p.value())), p_(p) {}

  std::uint32_t value() const noexcept { return value_; }
  Prime prime() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FpScalar operator-() const { return FpScalar(fp::neg(value_, p_.value()), p_); }

  friend FpScalar operator+(FpScalar a, FpScalar b) {
    require_same(a.p_, b.p_);
    return FpScalar(fp::add(a.value_, b.value_, a.p_.value()), a.p_);
  }
  friend FpScalar operator-(FpScalar a, FpScalar b) {
    require_same(a.p_, b.p_);
    return FpScalar(fp::sub(a.value_, b.value_, a.p_.value()), a.p_);
  }
  friend FpScalar operator*(FpScalar a, FpScalar b) {
    require_same(a.p_, b.p_);
    return FpScalar(fp::mul(a.value_, b.value_, a.p_.value()), a.p_);
  }
  friend FpScalar operator/(FpScalar a, FpScalar b);

  friend bool operator==(FpScalar a, FpScalar b) noexcept {
    return a.p_ == b.p_ && a.value_ == b.value_;
  }

 private:
  std::uint32_t value_;
  Prime p_;
};

FpScalar inv(FpScalar a);
FpScalar pow(FpScalar a, std::uint64_t e);

std::ostream& operator<<(std::ostream& os, FpScalar a);

/// C(a, b) mod p as the product of base-p digit binomials (Lucas).
FpScalar lucas_binom(std::uint64_t a, std::uint64_t b, Prime p);

/// sum_{t=0}^{k-1} C(k(p-1), i + t(p-1)) mod p, for 0 <= i < p and 1 <= k < p.
FpScalar binomial_sum_check(Prime p, std::int64_t i, std::int64_t k);

/// n! mod p.
FpScalar factorial(std::uint64_t n, Prime p);

/// Least generator of F_p^*. Returns 1 for p = 2.
std::uint32_t primitive_root(Prime p);

/// Multiplicative order of a nonzero residue.
std::uint32_t multiplicative_order(std::uint32_t a, Prime p);

}  // namespace modinv
