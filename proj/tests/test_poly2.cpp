#include <gtest/gtest.h>

#include <random>

#include "modinv/poly2.hpp"
#include "oracle.hpp"

using namespace modinv;

namespace {

Poly2 random_poly(Prime p, std::uint32_t max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> c(0, p.value() - 1);
  Poly2 f(p);
  for (std::uint32_t d = 0; d <= max_degree; ++d)
    for (std::uint32_t j = 0; j <= d; ++j) f.add_term(d - j, j, c(rng));
  return f;
}

Mat2 random_mat(Prime p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> c(0, p.value() - 1);
  for (;;) {
    const std::uint32_t a = c(rng), b = c(rng), cc = c(rng), d = c(rng);
    if ((static_cast<std::uint64_t>(a) * d + p.value() * p.value() - static_cast<std::uint64_t>(b) * cc) % p.value())
      return Mat2(p, a, b, cc, d);
  }
}

}  // namespace

TEST(Poly2Text, ParseAndPrintRoundTrip) {
  const Prime p(5);
  const Poly2 f = Poly2::parse("x*y^3 + 2*x^3*y - 7 + y", p);
  EXPECT_EQ(f.to_string(), "2*x^3*y + x*y^3 + y + 3");
  EXPECT_EQ(Poly2::parse(f.to_string(), p), f);
  EXPECT_EQ(Poly2::parse("0", p).to_string(), "0");
  EXPECT_EQ(Poly2::parse("x^2y", p), Poly2::monomial(p, 2, 1));
  EXPECT_THROW(Poly2::parse("x^", p), ParseError);
  EXPECT_THROW(Poly2::parse("z", p), ParseError);
}

TEST(Poly2Text, RandomRoundTrip) {
  std::mt19937_64 rng(3);
  for (std::uint32_t q : {2u, 3u, 7u}) {
    const Prime p(q);
    for (int i = 0; i < 30; ++i) {
      const Poly2 f = random_poly(p, 6, rng);
      EXPECT_EQ(Poly2::parse(f.to_string(), p), f);
    }
  }
}

TEST(Named, Delta) { EXPECT_EQ(make_named("delta", Prime(3)).to_string(), "2*x^3*y + x*y^3"); }

TEST(Named, D1AtTwoByLongDivision) {
  const Prime p(2);
  // (x y^4 - x^4 y) / (x y^2 - x^2 y) with the schoolbook oracle.
  const auto num = oracle::add(oracle::mono(2, 1, 4), oracle::mono(2, 4, 1), -1);
  const auto den = oracle::add(oracle::mono(2, 1, 2), oracle::mono(2, 2, 1), -1);
  const auto [q, r] = oracle::long_divide(num, den);
  EXPECT_TRUE(r.zero());
  EXPECT_EQ(oracle::from_poly(dickson_d1(p)), q);
  EXPECT_EQ(dickson_d1(p).to_string(), "x^2 + x*y + y^2");
}

TEST(Named, DicksonByLongDivision) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const Prime p(q);
    const auto dl = oracle::add(oracle::mono(q, 1, q), oracle::mono(q, q, 1), -1);
    const auto n1 = oracle::add(oracle::mono(q, 1, q * q), oracle::mono(q, q * q, 1), -1);
    const auto n0 = oracle::add(oracle::mono(q, q, q * q), oracle::mono(q, q * q, q), -1);
    EXPECT_EQ(oracle::from_poly(dickson_d1(p)), oracle::long_divide(n1, dl).first);
    EXPECT_EQ(oracle::from_poly(dickson_d0(p)), oracle::long_divide(n0, dl).first);
  }
}

TEST(Named, D1MonomialSum) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const Prime p(q);
    Poly2 s(p);
    for (std::uint32_t i = 0; i <= q; ++i) s += Poly2::monomial(p, (q - 1) * i, (q - 1) * (q - i));
    EXPECT_EQ(dickson_d1(p), s);
  }
}

TEST(Named, D0IsDeltaPower) {
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    const Prime p(q);
    EXPECT_EQ(dickson_d0(p), delta(p).pow(q - 1));
  }
}

TEST(Named, GammaAndRho) {
  const Prime p(3);
  EXPECT_EQ(gamma(2, p), Poly2::parse("x^4 - x^2*y^2 + y^4", p));
  EXPECT_EQ(rho(2, p), Poly2::parse("y^3 - x^2*y", p).pow(2));
  EXPECT_EQ(make_named("gamma(2)", p), gamma(2, p));
  EXPECT_EQ(make_named("y^4", p), Poly2::monomial(p, 0, 4));
  EXPECT_THROW(make_named("nope", p), ParseError);
}

TEST(Action, Examples) {
  const Prime p(5);
  EXPECT_EQ(act(Mat2::omega(p), Poly2::x(p)), Poly2::parse("x + y", p));
  EXPECT_EQ(act(Mat2::omega(p), Poly2::y(p)), Poly2::y(p));
  EXPECT_EQ(act(Mat2::diag(p, 2, 3), Poly2::monomial(p, 2, 1)), Poly2::monomial(p, 2, 1, 4 * 3));
  const Poly2 f = Poly2::parse("x^3*y + 2*y^4 + x", p);
  EXPECT_EQ(act(Mat2::identity(p), f), f);
}

TEST(Action, OmegaOnPowerOfX) {
  // omega(x^{mp}) - x^{mp} = (x^p + y^p)^m - x^{mp}.
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const Prime p(q);
    for (std::uint32_t m = 1; m <= 3; ++m) {
      const Poly2 lhs = act(Mat2::omega(p), Poly2::monomial(p, m * q, 0));
      const Poly2 rhs = (Poly2::monomial(p, q, 0) + Poly2::monomial(p, 0, q)).pow(m);
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(Action, MatchesSubstitutionOracle) {
  std::mt19937_64 rng(17);
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    const Prime p(q);
    for (int i = 0; i < 20; ++i) {
      const Mat2 a = random_mat(p, rng);
      const Poly2 f = random_poly(p, 6, rng);
      EXPECT_EQ(oracle::from_poly(act(a, f)), oracle::substitute(oracle::from_poly(f), a.a(), a.b(), a.c(), a.d()));
    }
  }
}

TEST(Action, Composition) {
  std::mt19937_64 rng(23);
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    const Prime p(q);
    for (int i = 0; i < 50; ++i) {
      const Mat2 a = random_mat(p, rng), b = random_mat(p, rng);
      const Poly2 f = random_poly(p, 5, rng);
      ASSERT_EQ(act(a, act(b, f)), act(a * b, f));
    }
  }
}

TEST(Action, RingHomomorphism) {
  std::mt19937_64 rng(29);
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const Prime p(q);
    for (int i = 0; i < 15; ++i) {
      const Mat2 a = random_mat(p, rng);
      const Poly2 f = random_poly(p, 4, rng), g = random_poly(p, 4, rng);
      EXPECT_EQ(act(a, f * g), act(a, f) * act(a, g));
      EXPECT_EQ(act(a, f + g), act(a, f) + act(a, g));
    }
  }
}

TEST(Product, MatchesNaiveExpansion) {
  std::mt19937_64 rng(31);
  for (std::uint32_t q : {2u, 5u}) {
    const Prime p(q);
    for (int i = 0; i < 20; ++i) {
      const Poly2 f = random_poly(p, 5, rng), g = random_poly(p, 5, rng);
      EXPECT_EQ(oracle::from_poly(f * g), oracle::mul(oracle::from_poly(f), oracle::from_poly(g)));
    }
  }
}

TEST(Division, FreshmansDream) {
  const Prime p(3);
  const Poly2 f = (Poly2::x(p) + Poly2::y(p)).pow(3) - Poly2::monomial(p, 3, 0);
  EXPECT_EQ(div_exact_linear(f, LinearForm(FpScalar(0, p), FpScalar(1, p))), Poly2::monomial(p, 0, 2));
}

TEST(Division, NotDivisibleCarriesRemainder) {
  const Prime p(3);
  try {
    div_exact_linear(Poly2::x(p), LinearForm(FpScalar(0, p), FpScalar(1, p)));
    FAIL() << "expected NotDivisible";
  } catch (const NotDivisible& e) {
    EXPECT_FALSE(e.remainder().is_zero());
  }
}

TEST(Division, RandomExactQuotients) {
  std::mt19937_64 rng(37);
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    const Prime p(q);
    for (int i = 0; i < 20; ++i) {
      const std::uint32_t a = std::uniform_int_distribution<std::uint32_t>(0, q - 1)(rng);
      const LinearForm l(FpScalar(a == 0 ? 0 : 1, p), FpScalar(a == 0 ? 1 : a, p));
      const Poly2 f = random_poly(p, 6, rng);
      const Poly2 prod = f * l.to_poly();
      EXPECT_EQ(div_exact_linear(prod, l), f);
      const auto [oq, orr] = oracle::long_divide(oracle::from_poly(prod), oracle::from_poly(l.to_poly()));
      EXPECT_TRUE(orr.zero());
      EXPECT_EQ(oracle::from_poly(f), oq);
    }
  }
}

TEST(Division, ByPolynomial) {
  const Prime p(5);
  const Poly2 g = delta(p);
  const Poly2 f = Poly2::parse("x^2 + 3*x*y + y^7", p);
  EXPECT_EQ(div_exact(f * g, g), f);
  EXPECT_THROW(div_exact(f * g + Poly2::x(p), g), NotDivisible);
}

TEST(LinearForm, Normalization) {
  const Prime p(5);
  const LinearForm l(FpScalar(2, p), FpScalar(4, p));
  EXPECT_EQ(l.alpha().value(), 1u);
  EXPECT_EQ(l.beta().value(), 2u);
  EXPECT_THROW(LinearForm(FpScalar(0, p), FpScalar(0, p)), DomainError);
}

TEST(Slices, ActionMatchesPolynomialAction) {
  std::mt19937_64 rng(41);
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const Prime p(q);
    for (int i = 0; i < 10; ++i) {
      const Mat2 a = random_mat(p, rng);
      const std::uint32_t d = 1 + i % 7;
      const Poly2 f = random_poly(p, d, rng).homogeneous_component(d);
      EXPECT_EQ(from_slice(p, d, slice_action(a, d).apply(to_slice(f, d))), act(a, f));
    }
  }
}

TEST(Slices, DivisionMatchesPolynomialDivision) {
  std::mt19937_64 rng(43);
  const Prime p(7);
  for (int i = 0; i < 20; ++i) {
    const LinearForm l(FpScalar(1, p), FpScalar(i % 7, p));
    const std::uint32_t d = 1 + i % 6;
    const Poly2 f = random_poly(p, d - 1, rng).homogeneous_component(d - 1);
    const Poly2 prod = f * l.to_poly();
    Vec quot;
    ASSERT_TRUE(slice_div_linear(to_slice(prod, d), l, quot));
    EXPECT_EQ(from_slice(p, d - 1, quot), f);
  }
  Vec quot;
  EXPECT_FALSE(slice_div_linear(to_slice(Poly2::x(p), 1), LinearForm(FpScalar(0, p), FpScalar(1, p)), quot));
}

TEST(Slices, Encoding) {
  const Prime p(3);
  EXPECT_EQ(to_slice(Poly2::parse("x^2 + 2*y^2", p), 2), (Vec{1, 0, 2}));
  EXPECT_EQ(times_x(Vec{1, 2}), (Vec{1, 2, 0}));
  EXPECT_EQ(times_y(Vec{1, 2}), (Vec{0, 1, 2}));
  EXPECT_EQ(unit_slice(3, 1), (Vec{0, 1, 0, 0}));
}

TEST(Homogeneity, PreservedByActionAndDivision) {
  const Prime p(5);
  const Poly2 f = Poly2::parse("x^4 + 3*x*y^3", p);
  const Poly2 g = act(Mat2::omega(p), f);
  EXPECT_TRUE(g.is_homogeneous());
  EXPECT_EQ(g.degree(), 4);
  const Poly2 q = div_exact_linear(g - f, LinearForm(FpScalar(0, p), FpScalar(1, p)));
  EXPECT_TRUE(q.is_homogeneous());
  EXPECT_EQ(q.degree(), 3);
}
