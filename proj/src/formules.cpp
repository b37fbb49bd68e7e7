#include <algorithm>

#include "modinv/graded_ideal.hpp"
#include "modinv/poly2.hpp"
#include "modinv/report.hpp"

namespace modinv {

namespace {

Poly2 mono(Prime p, std::uint32_t i, std::uint32_t j) { return Poly2::monomial(p, i, j); }

std::string show_diff(const Poly2& lhs, const Poly2& rhs) {
  return "difference " + (lhs - rhs).to_string();
}

}  // namespace

VerificationReport verify_formules(Prime p) {
  const std::uint32_t q = p.value();
  if (q == 2) throw DomainError("the identities are stated for p > 2");
  VerificationReport rep;
  rep.prime = q;
  rep.target = "formules";
  const Poly2 d1 = dickson_d1(p), d0 = dickson_d0(p), dl = delta(p);

  {
    Poly2 sum(p);
    for (std::uint32_t i = 0; i <= q; ++i) sum += mono(p, (q - 1) * i, (q - 1) * (q - i));
    rep.expect(d1 == sum, "(1) d1 as a monomial sum", sum.to_string(), d1.to_string());
  }
  {
    const Poly2 lhs = mono(p, 0, q * q - 1);
    const Poly2 rhs = mono(p, 0, q - 1) * d1 - d0;
    rep.expect(lhs == rhs, "(2) y^(p^2-1) = y^(p-1) d1 - d0", "0", show_diff(lhs, rhs));
  }
  {
    bool ok = true;
    std::string got = "all equal";
    const Poly2 base = mono(p, 0, q - 1) - mono(p, q - 1, 0);
    for (std::uint32_t r = 0; r <= q - 1 && ok; ++r) {
      const Poly2 lhs = mono(p, 0, q * q - q + r);
      const Poly2 rhs = mono(p, 0, r) * d1 - mono(p, q - r - 1, 0) * base.pow(q - r - 1) * dl.pow(r);
      if (!(lhs == rhs)) {
        ok = false;
        got = "r=" + std::to_string(r) + ": " + show_diff(lhs, rhs);
      }
    }
    rep.expect(ok, "(3) y^(p^2-p+r) for 0 <= r <= p-1", "all equal", got);
  }
  {
    Poly2 sum(p);
    for (std::uint32_t k = 1; k + 2 <= q; ++k)
      sum += FpScalar(k, p) * mono(p, q * q - 2 * q - k * q + k, k * (q - 1) - 1);
    const Poly2 rhs = mono(p, q * q - q, 0) + mono(p, 0, q * q - q) - mono(p, q - 1, q * q - 2 * q + 1) - dl * sum;
    rep.expect(d1 == rhs, "(4) d1 via delta", "0", show_diff(d1, rhs));
  }

  const std::uint32_t cap = 2 * q * q;
  {
    const GradedIdeal id = GradedIdeal::from_generators(p, {dl}, "<delta>");
    bool ok = true;
    std::string got = "all in <delta>";
    for (std::uint32_t i = q; i < cap && ok; ++i) {
      const std::uint32_t b = (i - 1) % (q - 1) + 1;
      for (std::uint32_t j = 1; i + j <= cap && ok; ++j) {
        const Poly2 diff = mono(p, i, j) - mono(p, b, i + j - b);
        if (!member(id, diff)) {
          ok = false;
          got = "i=" + std::to_string(i) + " j=" + std::to_string(j) + ": " + diff.to_string() + " not in <delta>";
        }
      }
    }
    rep.expect(ok, "(5) x^i y^j = x^b y^* mod <delta>, i+j <= 2p^2", "all in <delta>", got);
  }
  {
    bool ok = true;
    std::string got = "all reducible";
    for (std::uint32_t r = 1; r + 1 < q && ok; ++r) {
      const GradedIdeal id = GradedIdeal::from_generators(p, {dl.pow(r)}, "<delta^r>");
      for (std::uint32_t n = r; n <= cap && ok; ++n) {
        std::vector<Vec> rows = id.slice(n).basis();
        for (std::uint32_t s = 0; s <= std::min(r * q - 1, n); ++s) rows.push_back(unit_slice(n, n - s));
        const Subspace target = echelon(p, n + 1, std::move(rows));
        for (std::uint32_t j = r; j <= n && ok; ++j)
          if (!target.contains(unit_slice(n, j))) {
            ok = false;
            got = "r=" + std::to_string(r) + ": x^" + std::to_string(n - j) + "*y^" + std::to_string(j);
          }
      }
    }
    rep.expect(ok, "(6) reduction mod <delta^r> to x^s y^*, s <= rp-1", "all reducible", got);
  }
  return rep;
}

}  // namespace modinv
