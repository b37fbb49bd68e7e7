#include "modinv/stable_chain.hpp"

namespace modinv {

namespace {

class InvariantSource final : public SliceSource {
 public:
  InvariantSource(Prime p, std::vector<Mat2> gens) : p_(p), gens_(std::move(gens)) {}

  std::vector<Vec> generators_in_degree(std::uint32_t d) override {
    if (d == 0) return {};
    return invariant_slice(p_, gens_, d).basis();
  }

 private:
  Prime p_;
  std::vector<Mat2> gens_;
};

}  // namespace

GradedIdeal compute_J1(const MatrixGroup& g) {
  return GradedIdeal::from_source(g.prime(), std::make_unique<InvariantSource>(g.prime(), g.generators()),
                                  "J_1(G), |G| = " + std::to_string(g.order()));
}

NextIdeal next_ideal(const GradedIdeal& j, const MatrixGroup& g) {
  require_same(j.prime(), g.prime());
  const Prime p = g.prime();
  const QuotientDims qd = quotient_dims(j);
  if (!qd.topdeg) throw InfiniteQuotient("quotient by " + j.description() + " is not finite-dimensional");
  std::vector<Poly2> found;
  for (std::uint32_t d = 1; d <= *qd.topdeg; ++d) {
    const Subspace inv = invariant_slice(p, g.generators(), d, &j);
    for (const Vec& v : inv.basis()) found.push_back(from_slice(p, d, v));
  }
  if (found.empty()) return {j, {}};
  GradedIdeal next = j.with_extra(found, j.description() + " + invariants");
  return {std::move(next), std::move(found)};
}

StableChainResult stable_chain(const MatrixGroup& g, std::uint32_t max_iter) {
  StableChainResult out{g, {compute_J1(g)}, 0, {}};
  for (std::uint32_t step = 0; step < max_iter; ++step) {
    NextIdeal n = next_ideal(out.ideals.back(), g);
    const bool stable = n.new_invariants.empty();
    out.new_invariants.push_back(std::move(n.new_invariants));
    if (stable) {
      out.stabilization_index = static_cast<std::uint32_t>(out.ideals.size());
      return out;
    }
    out.ideals.push_back(std::move(n.ideal));
  }
  throw IterationLimit("chain did not stabilize within " + std::to_string(max_iter) + " steps");
}

VerificationReport verify_basedos(Prime p) {
  const std::uint32_t q = p.value();
  VerificationReport rep;
  rep.prime = q;
  rep.target = "basedos";
  if (q < 3) {
    rep.skip("presentation, basis and invariants of Q", "stated for p > 2; p = 2 is handled separately");
    return rep;
  }
  const Poly2 d1 = dickson_d1(p), dl = delta(p);
  const Poly2 mu = Poly2::monomial(p, q - 1, q * q - q);
  std::vector<Poly2> gens{d1, dl, mu};
  for (std::uint32_t i = 2; i <= q - 1; ++i) gens.push_back(gamma(i, p));
  const GradedIdeal big = GradedIdeal::from_generators(p, gens, "<d1, delta, mu, gamma_2..gamma_(p-1)>");
  const GradedIdeal small = GradedIdeal::from_generators(
      p, {d1, dl, gamma(2, p), Poly2::monomial(p, q - 1, 2 * q - 2)}, "<d1, delta, gamma_2, x^(p-1) y^(2p-2)>");

  const bool eq = ideal_equal(big, small);
  rep.expect(eq, "(1) Q = P/<d1, delta, gamma_2, x^(p-1)y^(2p-2)>", "equal", eq ? "equal" : "different");

  const std::uint64_t theta_size = 2ull * q * q - 3;
  rep.absorb(basis_check(theta_family(p), big, theta_size), "(2) ");

  const QuotientDims qd = quotient_dims(big);
  const auto gens_l1 = catalog_generators(CatalogL{1}, p);
  std::vector<Mat2> mats;
  for (const auto& r : gens_l1) mats.push_back(r.matrix());
  std::string got = "none";
  if (qd.topdeg)
    for (std::uint32_t d = 1; d <= *qd.topdeg; ++d)
      if (!invariant_slice(p, mats, d, &big).is_zero()) {
        got = "invariant in degree " + std::to_string(d);
        break;
      }
  rep.expect(qd.topdeg && got == "none", "(3) no positive-degree L^1 invariants in Q", "none",
             qd.topdeg ? got : "infinite quotient");

  if (q == 3) {
    const GradedIdeal three = GradedIdeal::from_generators(p, {d1, dl, gamma(2, p)}, "<d1, delta, gamma_2>");
    const bool eq3 = ideal_equal(big, three);
    rep.expect(eq3, "p = 3: Q = P/<d1, delta, gamma_2>", "equal", eq3 ? "equal" : "different");
  }
  return rep;
}

}  // namespace modinv
