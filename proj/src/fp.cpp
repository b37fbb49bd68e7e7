#include "modinv/fp.hpp"

#include <ostream>

#include "modinv/fault.hpp"

namespace modinv {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Prime::Prime(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p > 46337) throw DomainError("prime too large for 32-bit residue products");
}

namespace fp {

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw DivisionByZero();
  std::int64_t r0 = p, r1 = a % p, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  return reduce(s0, p);
}

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) noexcept {
  std::uint32_t result = 1 % p;
  std::uint32_t base = a % p;
  while (e > 0) {
    if (e & 1) result = mul(result, base, p);
    base = mul(base, base, p);
    e >>= 1;
  }
  return result;
}

}  // namespace fp

FpScalar operator/(FpScalar a, FpScalar b) {
  require_same(a.p_, b.p_);
  return FpScalar(fp::mul(a.value_, fp::inv(b.value_, b.p_.value()), a.p_.value()), a.p_);
}

FpScalar inv(FpScalar a) { return FpScalar(fp::inv(a.value(), a.prime().value()), a.prime()); }

FpScalar pow(FpScalar a, std::uint64_t e) {
  return FpScalar(fp::pow(a.value(), e, a.prime().value()), a.prime());
}

std::ostream& operator<<(std::ostream& os, FpScalar a) { return os << a.value(); }

namespace {

// C(n, k) mod p for 0 <= k <= n < p.
std::uint32_t small_binom(std::uint32_t n, std::uint32_t k, std::uint32_t p) {
  std::uint32_t num = 1, den = 1;
  for (std::uint32_t t = 1; t <= k; ++t) {
    num = fp::mul(num, n - k + t, p);
    den = fp::mul(den, t, p);
  }
  return fp::mul(num, fp::inv(den, p), p);
}

}  // namespace

FpScalar lucas_binom(std::uint64_t a, std::uint64_t b, Prime prime) {
  const std::uint32_t p = prime.value();
  std::uint32_t result = 1;
  if (b > a) {
    result = 0;
  } else {
    while (b > 0 || a > 0) {
      auto ad = static_cast<std::uint32_t>(a % p);
      auto bd = static_cast<std::uint32_t>(b % p);
      if (bd > ad) {
        result = 0;
        break;
      }
      result = fp::mul(result, small_binom(ad, bd, p), p);
      a /= p;
      b /= p;
    }
  }
  if (fault::armed(fault::Site::LucasBinom)) result = fp::add(result, 1, p);
  return FpScalar(result, prime);
}

FpScalar binomial_sum_check(Prime prime, std::int64_t i, std::int64_t k) {
  const std::int64_t p = prime.value();
  if (i < 0 || i >= p || k < 1 || k >= p)
    throw DomainError("binomial_sum_check requires 0 <= i < p and 1 <= k < p");
  FpScalar sum(0, prime);
  for (std::int64_t t = 0; t < k; ++t)
    sum = sum + lucas_binom(static_cast<std::uint64_t>(k * (p - 1)),
                            static_cast<std::uint64_t>(i + t * (p - 1)), prime);
  return sum;
}

FpScalar factorial(std::uint64_t n, Prime prime) {
  const std::uint32_t p = prime.value();
  if (n >= p) return FpScalar(0, prime);
  std::uint32_t r = 1;
  for (std::uint64_t t = 2; t <= n; ++t) r = fp::mul(r, static_cast<std::uint32_t>(t), p);
  return FpScalar(r, prime);
}

std::uint32_t multiplicative_order(std::uint32_t a, Prime prime) {
  const std::uint32_t p = prime.value();
  a %= p;
  if (a == 0) throw DivisionByZero();
  std::uint32_t order = 1;
  for (std::uint32_t x = a; x != 1; x = fp::mul(x, a, p)) ++order;
  return order;
}

std::uint32_t primitive_root(Prime prime) {
  const std::uint32_t p = prime.value();
  for (std::uint32_t g = 1; g < p; ++g)
    if (multiplicative_order(g, prime) == p - 1) return g;
  throw InternalError("no primitive root found");
}

}  // namespace modinv
