#include <gtest/gtest.h>

#include "modinv/group.hpp"

using namespace modinv;

TEST(Mat2, ParseReducesNegatives) {
  const Prime p(3);
  EXPECT_EQ(Mat2::parse("-1,1;0,1", p), Mat2(p, 2, 1, 0, 1));
  EXPECT_EQ(Mat2::parse("2,1;0,1", p).to_string(), "2,1;0,1");
  EXPECT_THROW(Mat2::parse("1,1;1,1", p), DomainError);
  EXPECT_THROW(Mat2::parse("1,1;1", p), ParseError);
  EXPECT_EQ(parse_matrix_list("1,0;1,1  1,1;0,1", p).size(), 2u);
}

TEST(Mat2, InverseAndOrder) {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const Prime p(q);
    const Mat2 a(p, 1, 1, 0, q - 1);
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_EQ(generate_closure(p, {Mat2::omega(p), Mat2::omega_prime(p), Mat2::diag(p, primitive_root(p), 1)}).order(),
              gl2_order(p));
  }
  EXPECT_EQ(gl2_order(Prime(3)), 48u);
}

TEST(Reflection, ImageForm) {
  const Prime p(5);
  const Reflection w(Mat2::omega(p)), wp(Mat2::omega_prime(p));
  EXPECT_EQ(w.vsigma(), LinearForm(FpScalar(0, p), FpScalar(1, p)));
  EXPECT_EQ(wp.vsigma(), LinearForm(FpScalar(1, p), FpScalar(0, p)));
  EXPECT_TRUE(w.is_transvection());
  EXPECT_FALSE(Reflection(Mat2::diag(p, 2, 1)).is_transvection());
  EXPECT_THROW(Reflection(Mat2::diag(p, 2, 2)), DomainError);
  EXPECT_FALSE(is_reflection(Mat2::identity(p)));
}

TEST(Catalog, OrdersMatchClosures) {
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    const Prime p(q);
    for (const auto& spec : catalog_specs(p)) {
      const MatrixGroup g = catalog_group(spec, p);
      EXPECT_EQ(g.order(), catalog_order(spec, p)) << to_string(spec) << " p=" << q;
      for (const auto& r : catalog_generators(spec, p)) EXPECT_TRUE(is_reflection(r.matrix()));
    }
  }
}

TEST(Catalog, LrIsDeterminantCondition) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const Prime p(q);
    for (auto r : divisors_of_p_minus_1(p)) {
      const MatrixGroup g = catalog_group(CatalogL{r}, p);
      for (const auto& e : g.elements()) EXPECT_EQ(fp::pow(e.det(), r, q), 1u);
    }
  }
}

TEST(Catalog, UrsIsUpperTriangular) {
  const Prime p(5);
  for (const auto& spec : catalog_specs(p))
    if (std::holds_alternative<CatalogU>(spec)) {
      const MatrixGroup g = catalog_group(spec, p);
      for (const auto& e : g.elements()) EXPECT_TRUE(e.is_upper_triangular());
    }
}

TEST(Catalog, SpecParsing) {
  EXPECT_EQ(to_string(parse_catalog_spec("L:2")), "L(2)");
  EXPECT_EQ(to_string(parse_catalog_spec("U:2,1")), "U(2,1)");
  EXPECT_THROW(parse_catalog_spec("U:2"), ParseError);
  EXPECT_THROW(parse_catalog_spec("Q:1"), ParseError);
  EXPECT_THROW(catalog_generators(CatalogL{3}, Prime(5)), DomainError);
}

TEST(Classify, WeylExamplesAtThree) {
  const Prime p(3);
  auto tag = [&](const char* m) { return classify(generate_closure(p, parse_matrix_list(m, p))).tag_string(); };
  EXPECT_EQ(tag("-1,1;0,1 -1,0;0,1"), "U(2,1)");
  EXPECT_EQ(tag("1,1;0,-1 -1,0;0,1"), "U(2,2)");
  EXPECT_EQ(tag("1,1;0,-1 1,0;0,-1"), "U(1,2)");
}

TEST(Classify, ConjugatedCatalogGroup) {
  const Prime p(5);
  const Mat2 g(p, 1, 2, 3, 4);
  const MatrixGroup h = conjugate(catalog_group(CatalogU{2, 1}, p), g);
  const GroupClass cls = classify(h);
  ASSERT_EQ(cls.tag_string(), "U(2,1)");
  ASSERT_TRUE(cls.conjugator.has_value());
  EXPECT_EQ(conjugate(h, *cls.conjugator), catalog_group(CatalogU{2, 1}, p));
}

TEST(Classify, NonCatalogCases) {
  const Prime p(3);
  // Order 2, prime to 3.
  EXPECT_EQ(classify(generate_closure(p, {Mat2::diag(p, 2, 1)})).tag_string(), "PrimeToP");
  // Cyclic of order 6 generated by a non-reflection; its reflections only give order 3.
  EXPECT_EQ(classify(generate_closure(p, {Mat2(p, 2, 1, 0, 2)})).tag_string(), "OtherModular");
}

TEST(Classify, GL2AtTwo) {
  const Prime p(2);
  EXPECT_EQ(classify(generate_closure(p, {Mat2::omega(p), Mat2::omega_prime(p)})).tag_string(), "L(1)");
  EXPECT_EQ(classify(generate_closure(p, {Mat2::omega(p)})).tag_string(), "U(1,1)");
}

TEST(Closure, CapIsEnforced) {
  const Prime p(3);
  EXPECT_THROW(generate_closure(p, {Mat2::omega(p), Mat2::omega_prime(p)}, 5), CapExceeded);
}

TEST(Reflections, Count) {
  // p^2 - 1 transvections and p(p+1)(p-2) diagonalizable reflections.
  for (std::uint32_t q : {2u, 3u, 5u}) EXPECT_EQ(all_reflections(Prime(q)).size(), q * q - 1 + q * (q + 1) * (q - 2));
}
