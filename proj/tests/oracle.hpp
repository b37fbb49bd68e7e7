#pragma once

// Naive reference implementations used to cross-check the engine. Nothing
// here calls into the library except for converting Poly2 values.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "modinv/poly2.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;

/// Exact binomial coefficient.
inline cpp_int binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  cpp_int r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::uint32_t mod(const cpp_int& v, std::uint32_t p) {
  cpp_int r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

inline std::int64_t mod64(std::int64_t v, std::int64_t p) { return ((v % p) + p) % p; }

/// Dense polynomial: (i, j) -> coefficient of x^i y^j, entries nonzero mod p.
struct Dense {
  std::uint32_t p;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t> c;

  void add(std::uint32_t i, std::uint32_t j, std::int64_t v) {
    auto& slot = c[{i, j}];
    slot = mod64(slot + v, p);
    if (slot == 0) c.erase({i, j});
  }
  bool zero() const { return c.empty(); }
  friend bool operator==(const Dense&, const Dense&) = default;
};

inline Dense from_poly(const modinv::Poly2& f) {
  Dense d{f.prime().value(), {}};
  for (const auto& [m, v] : f.terms()) d.add(m.x, m.y, v);
  return d;
}

inline Dense mono(std::uint32_t p, std::uint32_t i, std::uint32_t j, std::int64_t v = 1) {
  Dense d{p, {}};
  d.add(i, j, v);
  return d;
}

inline Dense add(const Dense& a, const Dense& b, std::int64_t sign = 1) {
  Dense out = a;
  for (const auto& [e, v] : b.c) out.add(e.first, e.second, sign * v);
  return out;
}

inline Dense mul(const Dense& a, const Dense& b) {
  Dense out{a.p, {}};
  for (const auto& [ea, va] : a.c)
    for (const auto& [eb, vb] : b.c) out.add(ea.first + eb.first, ea.second + eb.second, va * vb % a.p);
  return out;
}

/// (u x + v y)^n by the binomial theorem.
inline Dense linear_power(std::uint32_t p, std::int64_t u, std::int64_t v, std::uint32_t n) {
  Dense out{p, {}};
  for (std::uint32_t k = 0; k <= n; ++k) {
    cpp_int term = binom(n, k);
    for (std::uint32_t t = 0; t < n - k; ++t) term *= u;
    for (std::uint32_t t = 0; t < k; ++t) term *= v;
    out.add(n - k, k, static_cast<std::int64_t>(mod(term, p)));
  }
  return out;
}

/// x -> a x + c y, y -> b x + d y.
inline Dense substitute(const Dense& f, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  Dense out{f.p, {}};
  for (const auto& [e, v] : f.c) {
    Dense t = mul(linear_power(f.p, a, c, e.first), linear_power(f.p, b, d, e.second));
    for (const auto& [et, vt] : t.c) out.add(et.first, et.second, vt * v % f.p);
  }
  return out;
}

inline std::int64_t inv(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, base = mod64(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

/// Lex leading exponent with x > y.
inline std::pair<std::uint32_t, std::uint32_t> lead(const Dense& f) { return f.c.rbegin()->first; }

/// Schoolbook division by lex leading terms. Returns (quotient, remainder).
inline std::pair<Dense, Dense> long_divide(Dense f, const Dense& g) {
  Dense q{f.p, {}}, r{f.p, {}};
  const auto lg = lead(g);
  const std::int64_t lc_inv = inv(g.c.at(lg), f.p);
  while (!f.zero()) {
    const auto lf = lead(f);
    const std::int64_t cf = f.c.at(lf);
    if (lf.first >= lg.first && lf.second >= lg.second) {
      const Dense t = mono(f.p, lf.first - lg.first, lf.second - lg.second, cf * lc_inv % f.p);
      q = add(q, t);
      f = add(f, mul(t, g), -1);
    } else {
      r.add(lf.first, lf.second, cf);
      f.c.erase(lf);
    }
  }
  return {q, r};
}

inline Dense random_homogeneous(std::uint32_t p, std::uint32_t d, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
  Dense out{p, {}};
  for (std::uint32_t j = 0; j <= d; ++j) out.add(d - j, j, coeff(rng));
  return out;
}

inline modinv::Poly2 to_poly(const Dense& d) {
  modinv::Poly2 f{modinv::Prime(d.p)};
  for (const auto& [e, v] : d.c) f.add_term(e.first, e.second, static_cast<std::uint32_t>(v));
  return f;
}

/// Every vector of F_p^n, for exhaustive checks over tiny spaces.
inline std::vector<std::vector<std::uint32_t>> all_vectors(std::uint32_t p, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out{{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& v : out)
      for (std::uint32_t a = 0; a < p; ++a) {
        auto w = v;
        w.push_back(a);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace oracle
