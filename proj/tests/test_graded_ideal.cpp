#include <gtest/gtest.h>

#include <cstdlib>

#include "modinv/graded_ideal.hpp"
#include "modinv/group.hpp"
#include "modinv/stable_chain.hpp"
#include "oracle.hpp"

using namespace modinv;

namespace {

Poly2 P(const char* text, Prime p) { return Poly2::parse(text, p); }

GradedIdeal ideal(Prime p, std::vector<const char*> gens) {
  std::vector<Poly2> g;
  for (const char* t : gens) g.push_back(P(t, p));
  return GradedIdeal::from_generators(p, g);
}

/// Span of every monomial multiple of the generators, built without the slice recurrence.
Subspace naive_slice(Prime p, const std::vector<Poly2>& gens, std::uint32_t d) {
  std::vector<Vec> rows;
  for (const auto& g : gens) {
    const int e = g.degree();
    if (e > static_cast<int>(d)) continue;
    for (std::uint32_t j = 0; j <= d - e; ++j) {
      const auto prod = oracle::mul(oracle::from_poly(g), oracle::mono(p.value(), d - e - j, j));
      Vec v(d + 1, 0);
      for (const auto& [ex, c] : prod.c) v[ex.second] = static_cast<std::uint32_t>(c);
      rows.push_back(v);
    }
  }
  return echelon(p, d + 1, rows);
}

/// Fixed vectors by exhaustive enumeration through the substitution oracle.
std::size_t naive_invariant_count(Prime p, const std::vector<Mat2>& gens, std::uint32_t d) {
  std::size_t count = 0;
  for (const auto& v : oracle::all_vectors(p.value(), d + 1)) {
    oracle::Dense f{p.value(), {}};
    for (std::uint32_t k = 0; k <= d; ++k) f.add(d - k, k, v[k]);
    bool fixed = true;
    for (const auto& g : gens) fixed = fixed && oracle::substitute(f, g.a(), g.b(), g.c(), g.d()) == f;
    count += fixed;
  }
  return count;
}

std::vector<Mat2> mats(const CatalogSpec& spec, Prime p) {
  std::vector<Mat2> out;
  for (const auto& r : catalog_generators(spec, p)) out.push_back(r.matrix());
  return out;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST(IdealSlice, Examples) {
  const Prime p(3);
  const GradedIdeal a = ideal(p, {"x", "y^6"});
  EXPECT_EQ(a.slice(2), echelon(p, 3, {{1, 0, 0}, {0, 1, 0}}));
  EXPECT_TRUE(a.slice(0).is_zero());
  const GradedIdeal b = GradedIdeal::from_generators(p, {dickson_d1(p), delta(p)});
  EXPECT_EQ(b.slice(4), echelon(p, 5, {to_slice(delta(p), 4)}));
}

TEST(IdealSlice, MatchesNaiveMultiples) {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const Prime p(q);
    const std::vector<Poly2> gens{dickson_d1(p), delta(p), gamma(2, p)};
    const GradedIdeal id = GradedIdeal::from_generators(p, gens);
    for (std::uint32_t d = 0; d <= 3 * q; ++d) EXPECT_EQ(id.slice(d), naive_slice(p, gens, d)) << "d=" << d;
  }
}

TEST(IdealSlice, SaturationAndMonotonicity) {
  const Prime p(5);
  const GradedIdeal id = ideal(p, {"x^2", "y^3"});
  EXPECT_EQ(id.saturation_degree(50), 4u);
  for (std::uint32_t d = 4; d < 12; ++d) EXPECT_TRUE(id.slice(d).is_full());
  for (std::uint32_t d = 0; d < 10; ++d) {
    std::vector<Vec> up;
    for (const auto& v : id.slice(d).basis()) {
      up.push_back(times_x(v));
      up.push_back(times_y(v));
    }
    EXPECT_TRUE(id.slice(d + 1).contains(echelon(p, d + 2, up)));
  }
}

TEST(IdealSlice, RejectsBadGenerators) {
  const Prime p(3);
  EXPECT_THROW(GradedIdeal::from_generators(p, {P("x + y^2", p)}), DomainError);
  EXPECT_THROW(GradedIdeal::from_generators(p, {P("1", p)}), DomainError);
  EXPECT_THROW(GradedIdeal::from_generators(p, {Poly2::x(Prime(5))}), PrimeMismatch);
}

TEST(Member, Examples) {
  const Prime p(3);
  EXPECT_FALSE(member(ideal(p, {"x", "y^6"}), P("y^2", p)));
  EXPECT_TRUE(member(ideal(p, {"x", "y^2"}), P("y^2", p)));
  const GradedIdeal a = GradedIdeal::from_generators(p, {dickson_d1(p), delta(p), gamma(2, p)});
  EXPECT_TRUE(member(a, P("x^2*y^4", p)));
  EXPECT_TRUE(member(a, P("x^2*y^4 + x^3*y - x*y^3", p)));
}

TEST(IdealEqual, Examples) {
  const Prime p(3);
  const GradedIdeal a = GradedIdeal::from_generators(p, {dickson_d1(p), delta(p), gamma(2, p), P("x^2*y^4", p)});
  const GradedIdeal b = GradedIdeal::from_generators(p, {dickson_d1(p), delta(p), gamma(2, p)});
  EXPECT_TRUE(ideal_equal(a, b));
  EXPECT_FALSE(ideal_equal(ideal(p, {"x", "y^3"}), ideal(p, {"x", "y^2"})));
  EXPECT_TRUE(ideal_equal(a, a));
  EXPECT_TRUE(ideal_contains(ideal(p, {"x", "y^2"}), ideal(p, {"x", "y^3"})));
  EXPECT_FALSE(ideal_contains(ideal(p, {"x", "y^3"}), ideal(p, {"x", "y^2"})));
}

TEST(IdealEqual, NonSaturatingSourceNeedsCap) {
  const Prime p(3);
  // A source-backed ideal with no generator bound must saturate to be compared.
  const GradedIdeal single = GradedIdeal::from_generators(p, {delta(p)}).with_extra({});
  setenv("MODINV_MAX_DEGREE", "20", 1);
  EXPECT_FALSE(single.saturation_degree(20).has_value());
  EXPECT_THROW(ideal_equal(single, ideal(p, {"x^2", "y"})), CapExceeded);
  unsetenv("MODINV_MAX_DEGREE");
}

TEST(QuotientDims, Examples) {
  const Prime p(3);
  const QuotientDims a = quotient_dims(ideal(p, {"x", "y^2"}));
  EXPECT_EQ(a.dims, (std::vector<std::uint64_t>{1, 1}));
  EXPECT_EQ(a.topdeg, 1u);

  const QuotientDims b = quotient_dims(GradedIdeal::from_generators(p, {dickson_d1(p), delta(p)}));
  EXPECT_EQ(b.total(), 24u);
  EXPECT_EQ(b.topdeg, 8u);
  EXPECT_TRUE(std::equal(b.dims.begin(), b.dims.end(), b.dims.rbegin()));

  const QuotientDims c = quotient_dims(GradedIdeal::from_generators(p, {delta(p)}));
  EXPECT_FALSE(c.topdeg.has_value());
}

TEST(MinimalGenerators, Examples) {
  const Prime p(3);
  const auto g = minimal_generators(ideal(p, {"x", "y^2", "x*y", "y^3"}));
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], Poly2::x(p));
  EXPECT_EQ(g[1], P("y^2", p));
}

TEST(MinimalGenerators, RejectsNonMonotoneSlices) {
  const Prime p(3);
  std::vector<Subspace> slices{Subspace(p, 1), Subspace::full(p, 2), Subspace(p, 3)};
  EXPECT_THROW(minimal_generators(slices), DomainError);
}

TEST(InvariantSlice, Examples) {
  const Prime p(3);
  const std::vector<Mat2> wp{Mat2::omega_prime(p)};
  EXPECT_EQ(invariant_slice(p, wp, 1), echelon(p, 2, {{1, 0}}));
  EXPECT_EQ(invariant_slice(p, mats(CatalogL{1}, p), 4), echelon(p, 5, {to_slice(delta(p), 4)}));
  EXPECT_TRUE(invariant_slice(p, mats(CatalogL{1}, p), 0).is_full());
  EXPECT_THROW(invariant_slice(Prime(5), wp, 1), PrimeMismatch);
}

TEST(InvariantSlice, MatchesExhaustiveSearch) {
  for (std::uint32_t q : {2u, 3u}) {
    const Prime p(q);
    for (const auto& spec : catalog_specs(p))
      for (std::uint32_t d = 1; d <= (q == 2 ? 7u : 5u); ++d) {
        const auto gens = mats(spec, p);
        EXPECT_EQ(ipow(q, invariant_slice(p, gens, d).dim()), naive_invariant_count(p, gens, d))
            << to_string(spec) << " d=" << d;
      }
  }
}

TEST(InvariantSlice, ModuloIdealGivesCanonicalRepresentatives) {
  const Prime p(3);
  const GradedIdeal j1 = GradedIdeal::from_generators(p, {dickson_d1(p), delta(p)});
  const Subspace inv = invariant_slice(p, mats(CatalogL{1}, p), 4, &j1);
  ASSERT_EQ(inv.dim(), 1u);
  // gamma_2 modulo <delta> in degree 4.
  EXPECT_EQ(inv, echelon(p, 5, {j1.slice(4).reduce(to_slice(gamma(2, p), 4))}));
  for (const auto& v : inv.basis()) EXPECT_EQ(j1.slice(4).reduce(v), v);
}

TEST(CatalogCoinvariants, HilbertSeriesAndDuality) {
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    const Prime p(q);
    for (const auto& spec : catalog_specs(p)) {
      const GradedIdeal j1 = compute_J1(catalog_group(spec, p));
      const QuotientDims qd = quotient_dims(j1);
      ASSERT_TRUE(qd.topdeg.has_value());
      std::uint32_t e1, e2;
      if (const auto* l = std::get_if<CatalogL>(&spec)) {
        e1 = q * q - q;
        e2 = l->r * (q + 1);
      } else {
        const auto& u = std::get<CatalogU>(spec);
        e1 = u.r;
        e2 = u.s * q;
      }
      // Expand (1 - t^e1)(1 - t^e2) / (1 - t)^2 as a product of truncated geometric sums.
      std::vector<std::int64_t> series(e1 + e2 + 1, 0);
      for (std::uint32_t i = 0; i < e1; ++i)
        for (std::uint32_t j = 0; j < e2; ++j) ++series[i + j];
      while (!series.empty() && series.back() == 0) series.pop_back();
      std::vector<std::int64_t> got(qd.dims.begin(), qd.dims.end());
      EXPECT_EQ(got, series) << to_string(spec) << " p=" << q;
      EXPECT_EQ(qd.dims.front(), 1u);
      EXPECT_EQ(qd.dims.back(), 1u);
      EXPECT_TRUE(std::equal(qd.dims.begin(), qd.dims.end(), qd.dims.rbegin()));
      EXPECT_EQ(qd.total(), catalog_order(spec, p));
    }
  }
}

TEST(CatalogCoinvariants, J1SlicesAreSumsOfInvariantMultiples) {
  const Prime p(3);
  for (const auto& spec : catalog_specs(p)) {
    const auto gens = mats(spec, p);
    const GradedIdeal j1 = compute_J1(catalog_group(spec, p));
    for (std::uint32_t d = 1; d <= 12; ++d) {
      std::vector<Vec> rows;
      for (std::uint32_t e = 1; e <= d; ++e) {
        const Subspace inv = invariant_slice(p, gens, e);
        for (const auto& v : inv.basis())
          for (std::uint32_t j = 0; j <= d - e; ++j) {
            const auto prod = oracle::mul(oracle::from_poly(from_slice(p, e, v)), oracle::mono(3, d - e - j, j));
            Vec w(d + 1, 0);
            for (const auto& [ex, c] : prod.c) w[ex.second] = static_cast<std::uint32_t>(c);
            rows.push_back(w);
          }
      }
      EXPECT_EQ(j1.slice(d), echelon(p, d + 1, rows)) << to_string(spec) << " d=" << d;
    }
  }
}

TEST(BasisCheck, Examples) {
  const Prime p(3);
  const auto omega = basis_check(omega_family(1, p), GradedIdeal::from_generators(p, {dickson_d1(p), delta(p)}), 24);
  EXPECT_EQ(omega.status(), Status::Pass);
  EXPECT_EQ(omega_family(1, p).monomials.size(), 24u);

  const auto g = gamma_family(1, 1, p);
  ASSERT_EQ(g.monomials.size(), 3u);
  EXPECT_EQ(basis_check(g, ideal(p, {"x", "y^3"}), 3).status(), Status::Pass);

  const GradedIdeal q = GradedIdeal::from_generators(p, {dickson_d1(p), delta(p), gamma(2, p), P("x^2*y^4", p)});
  EXPECT_EQ(basis_check(theta_family(p), q, 15).status(), Status::Pass);
}

TEST(BasisCheck, DetectsWrongFamily) {
  const Prime p(3);
  EXPECT_EQ(basis_check(gamma_family(1, 1, p), ideal(p, {"x", "y^2"}), 3).status(), Status::Fail);
  EXPECT_EQ(basis_check(gamma_family(1, 1, p), ideal(p, {"y", "x^3"}), 3).status(), Status::Fail);
}

TEST(FamilySizes, MatchGroupOrders) {
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    const Prime p(q);
    for (auto r : divisors_of_p_minus_1(p)) {
      EXPECT_EQ(omega_family(r, p).monomials.size(), r * q * (q * q - 1));
      for (auto s : divisors_of_p_minus_1(p)) EXPECT_EQ(gamma_family(r, s, p).monomials.size(), r * s * q);
    }
    if (q >= 3) EXPECT_EQ(theta_family(p).monomials.size(), 2 * q * q - 3);
  }
}

TEST(Series, CompleteIntersection) {
  EXPECT_EQ(complete_intersection_series(1, 3), (std::vector<std::uint64_t>{1, 1, 1}));
  EXPECT_EQ(complete_intersection_series(2, 2), (std::vector<std::uint64_t>{1, 2, 1}));
}

TEST(DegreeCap, Override) {
  setenv("MODINV_MAX_DEGREE", "17", 1);
  EXPECT_EQ(default_degree_cap(Prime(5)), 17u);
  unsetenv("MODINV_MAX_DEGREE");
  EXPECT_EQ(default_degree_cap(Prime(5)), 100u);
}
