#include "modinv/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <random>
#include <thread>

#include "modinv/demazure.hpp"
#include "modinv/graded_ideal.hpp"
#include "modinv/group.hpp"
#include "modinv/stable_chain.hpp"

namespace modinv {

namespace {

VerificationReport make_report(Prime p, std::string target) {
  VerificationReport rep;
  rep.prime = p.value();
  rep.target = std::move(target);
  return rep;
}

std::string join(const std::vector<Poly2>& polys) {
  std::string out = "<";
  for (std::size_t i = 0; i < polys.size(); ++i) out += (i ? ", " : "") + polys[i].to_string();
  return out + ">";
}

std::string describe(const GradedIdeal& ideal) {
  try {
    return join(minimal_generators(ideal));
  } catch (const Error& e) {
    return std::string("(") + e.what() + ")";
  }
}

template <class T>
std::string join_nums(const std::vector<T>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

void expect_ideal(VerificationReport& rep, const std::string& name, const GradedIdeal& got,
                  const GradedIdeal& expected) {
  const bool eq = ideal_equal(got, expected);
  rep.expect(eq, name, expected.description(), eq ? expected.description() : describe(got));
}

std::vector<Mat2> matrices(const std::vector<Reflection>& refl) {
  std::vector<Mat2> out;
  for (const auto& r : refl) out.push_back(r.matrix());
  return out;
}

std::string matrices_string(const std::vector<Mat2>& ms) {
  std::string out;
  for (std::size_t i = 0; i < ms.size(); ++i) out += (i ? " " : "") + ms[i].to_string();
  return out;
}

GradedIdeal xr_ysp(Prime p, std::uint32_t r, std::uint32_t s) {
  return GradedIdeal::from_generators(p, {power('x', r, p), power('y', s * p.value(), p)});
}

GradedIdeal dickson_ideal(Prime p, std::uint32_t r) {
  return GradedIdeal::from_generators(p, {dickson_d1(p), delta(p).pow(r)},
                                      "<d1, delta^" + std::to_string(r) + ">");
}

GradedIdeal stable_l1(Prime p) {
  const std::uint32_t q = p.value();
  return GradedIdeal::from_generators(p, {dickson_d1(p), delta(p), gamma(2, p), Poly2::monomial(p, q - 1, 2 * q - 2)},
                                      "<d1, delta, gamma_2, x^(p-1)*y^(2p-2)>");
}

bool palindromic(const QuotientDims& qd) {
  if (qd.dims.empty() || qd.dims.front() != 1 || qd.dims.back() != 1) return false;
  return std::equal(qd.dims.begin(), qd.dims.end(), qd.dims.rbegin());
}

void check_coinvariants(VerificationReport& rep, const std::string& tag, const GradedIdeal& j1,
                        std::uint64_t order, std::uint32_t topdeg, std::uint32_t e1, std::uint32_t e2) {
  const QuotientDims qd = quotient_dims(j1);
  rep.expect(qd.total() == order, tag + " total dimension = |G|", std::to_string(order), std::to_string(qd.total()));
  rep.expect(qd.topdeg == topdeg, tag + " fundamental class degree", std::to_string(topdeg),
             qd.topdeg ? std::to_string(*qd.topdeg) : "infinite");
  rep.expect(palindromic(qd), tag + " Poincare duality", "palindromic", join_nums(qd.dims));
  const auto series = complete_intersection_series(e1, e2);
  rep.expect(qd.dims == series, tag + " Hilbert series", join_nums(series), join_nums(qd.dims));
}

// ---- grups ----

struct ClassifyOutcome {
  bool ok;
  std::string detail;
};

ClassifyOutcome check_classification(const MatrixGroup& g) {
  const GroupClass cls = classify(g);
  const auto spec = cls.catalog();
  if (!spec || !cls.conjugator) return {false, "order " + std::to_string(g.order()) + " -> " + cls.tag_string()};
  if (!(conjugate(g, *cls.conjugator) == catalog_group(*spec, g.prime())))
    return {false, cls.tag_string() + " conjugator " + cls.conjugator->to_string() + " does not conjugate"};
  return {true, cls.tag_string()};
}

VerificationReport verify_grups(Prime p) {
  auto rep = make_report(p, "grups");
  const std::uint32_t q = p.value();
  const auto refl = all_reflections(p);
  std::vector<std::vector<Mat2>> subsets;
  std::string scope;
  if (q <= 3) {
    scope = "all subsets of size <= 3";
    const std::size_t n = refl.size();
    for (std::size_t a = 0; a < n; ++a) {
      subsets.push_back({refl[a]});
      for (std::size_t b = a + 1; b < n; ++b) {
        subsets.push_back({refl[a], refl[b]});
        for (std::size_t c = b + 1; c < n; ++c) subsets.push_back({refl[a], refl[b], refl[c]});
      }
    }
  } else if (q == 5) {
    scope = "all subsets of size <= 2";
    for (std::size_t a = 0; a < refl.size(); ++a) {
      subsets.push_back({refl[a]});
      for (std::size_t b = a + 1; b < refl.size(); ++b) subsets.push_back({refl[a], refl[b]});
    }
  } else {
    scope = "400 seeded random subsets of size 2 or 3";
    std::mt19937_64 rng(0x6772757073ull + q);
    std::uniform_int_distribution<std::size_t> pick(0, refl.size() - 1);
    for (int i = 0; i < 400; ++i) {
      std::vector<Mat2> s{refl[pick(rng)], refl[pick(rng)]};
      if (i % 2) s.push_back(refl[pick(rng)]);
      subsets.push_back(std::move(s));
    }
  }

  std::map<std::vector<std::uint32_t>, ClassifyOutcome> memo;
  std::size_t modular = 0, failures = 0;
  std::string first_failure = "none";
  std::map<std::string, std::size_t> seen_classes;
  for (const auto& s : subsets) {
    const MatrixGroup g = generate_closure(p, s);
    if (g.order() % q != 0) continue;
    ++modular;
    std::vector<std::uint32_t> key;
    for (const auto& e : g.elements()) key.push_back(e.code());
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(std::move(key), check_classification(g)).first;
    if (it->second.ok) {
      ++seen_classes[it->second.detail];
    } else if (failures++ == 0) {
      first_failure = matrices_string(s) + ": " + it->second.detail;
    }
  }
  rep.expect(failures == 0, scope + ": modular closures are catalog groups up to conjugacy",
             "0 failures", std::to_string(failures) + " failures; first: " + first_failure);
  rep.expect(modular > 0, "modular closures found", "> 0", std::to_string(modular));

  std::size_t self_fail = 0;
  std::string self_detail = "all";
  for (const auto& spec : catalog_specs(p)) {
    const GroupClass cls = classify(catalog_group(spec, p));
    if (!cls.catalog() || !(*cls.catalog() == spec)) {
      if (self_fail++ == 0) self_detail = to_string(spec) + " -> " + cls.tag_string();
    }
  }
  rep.expect(self_fail == 0, "catalog groups classify as themselves", "all", self_detail);
  return rep;
}

// ---- invariantsU ----

VerificationReport verify_invariantsU(Prime p) {
  auto rep = make_report(p, "invariantsU");
  const std::uint32_t q = p.value();
  for (auto r : divisors_of_p_minus_1(p))
    for (auto s : divisors_of_p_minus_1(p)) {
      const CatalogU spec{r, s};
      const std::string tag = to_string(CatalogSpec{spec});
      const auto gens = matrices(catalog_generators(spec, p));
      const Poly2 a = power('x', r, p), b = rho(s, p);
      bool fixed = true;
      for (const auto& g : gens) fixed = fixed && act(g, a) == a && act(g, b) == b;
      rep.expect(fixed, tag + " x^r, rho(s) invariant", "invariant", fixed ? "invariant" : "moved");

      // Degree by degree, invariants are spanned by the monomials in the two generators.
      const std::uint32_t top = 2 * (r + s * q);
      bool ok = true;
      std::string got = "equal through degree " + std::to_string(top);
      for (std::uint32_t d = 1; d <= top && ok; ++d) {
        std::vector<Vec> rows;
        for (std::uint32_t i = 0; i * r <= d; ++i)
          if ((d - i * r) % (s * q) == 0) rows.push_back(to_slice(a.pow(i) * b.pow((d - i * r) / (s * q)), d));
        const Subspace expected = echelon(p, d + 1, std::move(rows));
        const Subspace inv = invariant_slice(p, gens, d);
        if (!(inv == expected)) {
          ok = false;
          got = "degree " + std::to_string(d) + ": dim " + std::to_string(inv.dim()) + " vs " +
                std::to_string(expected.dim());
        }
      }
      rep.expect(ok, tag + " invariants = F_p[x^r, rho(s)]", "equal through degree " + std::to_string(top), got);
    }
  return rep;
}

// ---- baseL / baseU ----

VerificationReport verify_baseL(Prime p) {
  auto rep = make_report(p, "baseL");
  const std::uint32_t q = p.value();
  for (auto r : divisors_of_p_minus_1(p)) {
    const CatalogL spec{r};
    const std::string tag = to_string(CatalogSpec{spec});
    const MatrixGroup g = catalog_group(spec, p);
    const std::uint64_t order = std::uint64_t{r} * q * (q * q - 1);
    rep.expect(g.order() == order, tag + " order", std::to_string(order), std::to_string(g.order()));
    const GradedIdeal j1 = compute_J1(g);
    expect_ideal(rep, tag + " J_1", j1, dickson_ideal(p, r));
    rep.absorb(basis_check(omega_family(r, p), j1, order), tag + " ");
    check_coinvariants(rep, tag, j1, order, (r * q - 1) + (q * q - q + r - 1), q * q - q, r * (q + 1));
  }
  return rep;
}

VerificationReport verify_baseU(Prime p) {
  auto rep = make_report(p, "baseU");
  const std::uint32_t q = p.value();
  for (auto r : divisors_of_p_minus_1(p))
    for (auto s : divisors_of_p_minus_1(p)) {
      const CatalogU spec{r, s};
      const std::string tag = to_string(CatalogSpec{spec});
      const MatrixGroup g = catalog_group(spec, p);
      const std::uint64_t order = std::uint64_t{r} * s * q;
      rep.expect(g.order() == order, tag + " order", std::to_string(order), std::to_string(g.order()));
      const GradedIdeal j1 = compute_J1(g);
      expect_ideal(rep, tag + " J_1", j1, xr_ysp(p, r, s));
      rep.absorb(basis_check(gamma_family(r, s, p), j1, order), tag + " ");
      check_coinvariants(rep, tag, j1, order, (r - 1) + (q * s - 1), r, s * q);
    }
  return rep;
}

// ---- lemabinomial ----

VerificationReport verify_lemabinomial(Prime p) {
  auto rep = make_report(p, "lemabinomial");
  const std::int64_t q = p.value();
  std::size_t count = 0, bad = 0;
  std::string first = "none";
  for (std::int64_t i = 0; i < q; ++i)
    for (std::int64_t k = 1; k < q; ++k) {
      ++count;
      const FpScalar got = binomial_sum_check(p, i, k);
      const FpScalar want(i % 2 ? -1 : 1, p);
      if (!(got == want) && bad++ == 0)
        first = "i=" + std::to_string(i) + " k=" + std::to_string(k) + " sum=" + std::to_string(got.value());
    }
  rep.expect(bad == 0, "sum = (-1)^i for all 0 <= i < p, 1 <= k < p (" + std::to_string(count) + " cases)",
             "0 mismatches", std::to_string(bad) + " mismatches; first: " + first);
  return rep;
}

// ---- calculinvest ----

VerificationReport verify_calculinvest(Prime p) {
  auto rep = make_report(p, "calculinvest");
  const std::uint32_t q = p.value();
  for (auto r : divisors_of_p_minus_1(p)) {
    const CatalogL spec{r};
    const std::string tag = to_string(CatalogSpec{spec});
    const MatrixGroup g = catalog_group(spec, p);
    const GradedIdeal j1 = compute_J1(g);
    const NextIdeal next = next_ideal(j1, g);
    if (r > 1) {
      rep.expect(next.new_invariants.empty(), tag + " coinvariants have no invariants", "none",
                 join(next.new_invariants));
      continue;
    }
    std::vector<Poly2> expected{Poly2::monomial(p, q - 1, q * q - q)};
    for (std::uint32_t i = 2; i + 1 <= q; ++i) expected.push_back(gamma(i, p));

    const std::uint32_t top = *quotient_dims(j1).topdeg;
    bool ok = true;
    std::string got = "equal";
    for (std::uint32_t d = 1; d <= top && ok; ++d) {
      std::vector<Vec> want, have;
      for (const auto& f : expected)
        if (static_cast<std::uint32_t>(f.degree()) == d) want.push_back(j1.slice(d).reduce(to_slice(f, d)));
      for (const auto& f : next.new_invariants)
        if (static_cast<std::uint32_t>(f.degree()) == d) have.push_back(to_slice(f, d));
      const Subspace ws = echelon(p, d + 1, std::move(want)), hs = echelon(p, d + 1, std::move(have));
      if (!(ws == hs)) {
        ok = false;
        got = "degree " + std::to_string(d) + ": dim " + std::to_string(hs.dim()) + " vs " + std::to_string(ws.dim());
      }
    }
    rep.expect(ok, tag + " invariants of coinvariants = span{mu, gamma_2..gamma_(p-1)}", "equal", got);
  }
  return rep;
}

// ---- stableL / stableU ----

bool chain_monotone(const StableChainResult& res, std::uint32_t top) {
  for (std::size_t i = 0; i + 1 < res.ideals.size(); ++i)
    for (std::uint32_t d = 0; d <= top; ++d)
      if (!res.ideals[i + 1].slice(d).contains(res.ideals[i].slice(d))) return false;
  return true;
}

VerificationReport verify_stableL(Prime p) {
  auto rep = make_report(p, "stableL");
  for (auto r : divisors_of_p_minus_1(p)) {
    const CatalogL spec{r};
    const std::string tag = to_string(CatalogSpec{spec});
    const StableChainResult res = stable_chain(catalog_group(spec, p));
    const std::uint32_t want_index = r == 1 ? 2 : 1;
    rep.expect(res.stabilization_index == want_index, tag + " stabilization index", std::to_string(want_index),
               std::to_string(res.stabilization_index));
    expect_ideal(rep, tag + " J_1", res.ideals.front(), dickson_ideal(p, r));
    if (r == 1) expect_ideal(rep, tag + " J_inf", res.stable_ideal(), stable_l1(p));
    const std::uint32_t top = *quotient_dims(res.ideals.front()).topdeg;
    rep.expect(chain_monotone(res, top), tag + " chain increasing", "increasing",
               chain_monotone(res, top) ? "increasing" : "not increasing");
  }
  return rep;
}

VerificationReport verify_stableU(Prime p) {
  auto rep = make_report(p, "stableU");
  for (auto r : divisors_of_p_minus_1(p))
    for (auto s : divisors_of_p_minus_1(p)) {
      const CatalogU spec{r, s};
      const std::string tag = to_string(CatalogSpec{spec});
      const StableChainResult res = stable_chain(catalog_group(spec, p));
      const std::uint32_t want_index = r == 1 ? 2 : 1;
      rep.expect(res.stabilization_index == want_index, tag + " stabilization index", std::to_string(want_index),
                 std::to_string(res.stabilization_index));
      expect_ideal(rep, tag + " J_1", res.ideals.front(), xr_ysp(p, r, s));
      if (r == 1)
        expect_ideal(rep, tag + " J_inf", res.stable_ideal(),
                     GradedIdeal::from_generators(p, {Poly2::x(p), power('y', s, p)}));
      const std::uint32_t top = *quotient_dims(res.ideals.front()).topdeg;
      rep.expect(chain_monotone(res, top), tag + " chain increasing", "increasing",
                 chain_monotone(res, top) ? "increasing" : "not increasing");
    }
  return rep;
}

// ---- genU / genL ----

void expect_gen(VerificationReport& rep, const std::string& tag, Prime p, const std::vector<Mat2>& s,
                const GradedIdeal& expected, const MatrixGroup& expected_group) {
  std::vector<Reflection> refl;
  for (const auto& m : s) refl.emplace_back(m);
  const MatrixGroup g = generate_closure(p, s);
  rep.expect(g == expected_group, tag + " S generates the group", std::to_string(expected_group.order()),
             std::to_string(g.order()));
  const GenInvResult res = generalized_ideal(refl);
  expect_ideal(rep, tag + " I(S)", res.ideal, expected);
  rep.expect(res.regular_sequence, tag + " regular sequence", "true", res.regular_sequence ? "true" : "false");
}

VerificationReport verify_genU(Prime p) {
  auto rep = make_report(p, "genU");
  const std::uint32_t q = p.value();
  const std::uint32_t z = primitive_root(p);
  for (auto r : divisors_of_p_minus_1(p))
    for (auto s : divisors_of_p_minus_1(p)) {
      const CatalogU spec{r, s};
      const std::string tag = to_string(CatalogSpec{spec});
      const MatrixGroup group = catalog_group(spec, p);
      const GradedIdeal big = xr_ysp(p, r, s);
      expect_gen(rep, tag + " with order-p element", p, matrices(catalog_generators(spec, p)), big, group);

      const std::uint32_t alpha = fp::pow(z, (q - 1) / r, q), beta = fp::pow(z, (q - 1) / s, q);
      if (r > 1) {
        std::vector<Mat2> gens{Mat2(p, alpha, 1, 0, 1), Mat2::diag(p, alpha, 1)};
        if (s > 1) gens.push_back(Mat2::diag(p, 1, beta));
        expect_gen(rep, tag + " diagonalizable only", p, gens, big, group);
      } else if (s > 1) {
        const std::vector<Mat2> gens{Mat2(p, 1, 1, 0, beta), Mat2::diag(p, 1, beta)};
        expect_gen(rep, tag + " diagonalizable only", p, gens,
                   GradedIdeal::from_generators(p, {Poly2::x(p), power('y', s, p)}), group);
      }
    }
  return rep;
}

VerificationReport verify_genL(Prime p) {
  auto rep = make_report(p, "genL");
  const std::uint32_t q = p.value();
  for (auto r : divisors_of_p_minus_1(p)) {
    const CatalogL spec{r};
    const std::string tag = to_string(CatalogSpec{spec});
    const auto refl = catalog_generators(spec, p);
    const GenInvResult res = generalized_ideal(refl);
    expect_ideal(rep, tag + " I(S)", res.ideal, dickson_ideal(p, r));
    rep.expect(res.regular_sequence, tag + " regular sequence", "true", res.regular_sequence ? "true" : "false");
    std::vector<std::uint32_t> want{r * (q + 1), q * q - q}, got = res.degrees;
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    rep.expect(got == want, tag + " generator degrees", join_nums(want), join_nums(got));
  }
  if (q > 2) {
    const std::vector<Mat2> s{Mat2::omega(p), Mat2(p, 1, 2, 0, 1)};
    expect_gen(rep, "L(1) via {omega, [[1,2],[0,1]]}", p, s, dickson_ideal(p, 1), catalog_group(CatalogL{1}, p));
  }
  return rep;
}

// ---- weyl_examples ----

VerificationReport verify_weyl(Prime p) {
  auto rep = make_report(p, "weyl_examples");
  if (p.value() != 3) {
    rep.skip("rank-two Weyl group reductions", "explicit reflection matrices are given for p = 3 only");
    return rep;
  }
  struct Example {
    std::string name, matrices;
    CatalogU expected;
  };
  const std::vector<Example> examples{
      {"SU(3)", "-1,1;0,1 -1,0;0,1", {2, 1}},
      {"G2", "1,1;0,-1 -1,0;0,1", {2, 2}},
      {"PSU(3)", "1,1;0,-1 1,0;0,-1", {1, 2}},
  };
  for (const auto& ex : examples) {
    const auto ms = parse_matrix_list(ex.matrices, p);
    const MatrixGroup g = generate_closure(p, ms);
    const GroupClass cls = classify(g);
    const std::string want = to_string(CatalogSpec{ex.expected});
    rep.expect(cls.tag_string() == want, ex.name + " classifies", want, cls.tag_string());

    const bool has_transvection =
        std::any_of(ms.begin(), ms.end(), [](const Mat2& m) { return Reflection(m).is_transvection(); });
    const GradedIdeal expected = ex.expected.r > 1 || has_transvection
                                     ? xr_ysp(p, ex.expected.r, ex.expected.s)
                                     : GradedIdeal::from_generators(p, {Poly2::x(p), power('y', ex.expected.s, p)});
    expect_gen(rep, ex.name, p, ms, expected, catalog_group(CatalogSpec{ex.expected}, p));
    if (ex.name == "PSU(3)") expect_ideal(rep, "PSU(3) J_1", compute_J1(g), xr_ysp(p, 1, 2));
  }
  return rep;
}

VerificationReport formules_or_skip(Prime p) {
  if (p.value() == 2) {
    auto rep = make_report(p, "formules");
    rep.skip("identities (1)-(6)", "stated for p > 2");
    return rep;
  }
  return verify_formules(p);
}

}  // namespace

const std::vector<TheoremSpec>& theorem_catalog() {
  static const std::vector<TheoremSpec> catalog{
      {"grups", "reflection groups of order divisible by p are U(r,s) or L(r) up to conjugacy", verify_grups},
      {"invariantsU", "invariants of U(r,s) are F_p[x^r, (y^p - x^(p-1) y)^s]", verify_invariantsU},
      {"formules", "identities among d0, d1, delta", formules_or_skip},
      {"baseL", "Omega(r) is a basis of the coinvariants of L(r)", verify_baseL},
      {"baseU", "Gamma(r,s) is a basis of the coinvariants of U(r,s)", verify_baseU},
      {"lemabinomial", "binomial sums are (-1)^i mod p", verify_lemabinomial},
      {"calculinvest", "invariants of the coinvariant algebra of L(r)", verify_calculinvest},
      {"basedos", "the second quotient for L(1)", verify_basedos},
      {"stableL", "stable invariants of L(r)", verify_stableL},
      {"stableU", "stable invariants of U(r,s)", verify_stableU},
      {"genU", "generalized invariants for reflection sets generating U(r,s)", verify_genU},
      {"genL", "generalized invariants for reflection sets generating L(r)", verify_genL},
      {"operadorsD", "identities for the operators Delta and Delta'",
       [](Prime p) { return verify_operadorsD(p); }},
      {"weyl_examples", "rank-two Weyl group reductions at p = 3", verify_weyl},
  };
  return catalog;
}

const TheoremSpec& find_theorem(std::string_view id) {
  for (const auto& t : theorem_catalog())
    if (t.id == id) return t;
  throw UnknownTarget("unknown theorem '" + std::string(id) + "'");
}

VerificationReport run_theorem(const TheoremSpec& spec, Prime p, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  try {
    rep = spec.run(p);
  } catch (const std::exception& e) {
    rep = make_report(p, spec.id);
    rep.expect(false, "engine completed", "no error", e.what());
  }
  rep.prime = p.value();
  rep.target = spec.id;
  if (timing)
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                         .count();
  return rep;
}

std::vector<VerificationReport> run_verification(std::span<const Prime> primes, std::span<const std::string> targets,
                                                 const RunOptions& options) {
  std::vector<const TheoremSpec*> specs;
  for (const auto& t : targets) specs.push_back(&find_theorem(t));
  std::sort(specs.begin(), specs.end(), [](const TheoremSpec* a, const TheoremSpec* b) {
    const auto& cat = theorem_catalog();
    return a - cat.data() < b - cat.data();
  });
  specs.erase(std::unique(specs.begin(), specs.end()), specs.end());
  std::vector<Prime> ps(primes.begin(), primes.end());
  std::sort(ps.begin(), ps.end(), [](Prime a, Prime b) { return a.value() < b.value(); });
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());

  std::vector<std::pair<Prime, const TheoremSpec*>> jobs;
  for (const auto& p : ps)
    for (const auto* s : specs) jobs.emplace_back(p, s);

  std::vector<VerificationReport> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++)
      out[i] = run_theorem(*jobs[i].second, jobs[i].first, options.timing);
  };
  unsigned n = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, jobs.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace modinv
