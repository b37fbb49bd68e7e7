#include "modinv/graded_ideal.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>

namespace modinv {

namespace {

class ExplicitSource final : public SliceSource {
 public:
  ExplicitSource(std::vector<Poly2> gens) : gens_(std::move(gens)) {
    for (const auto& g : gens_) bound_ = std::max(bound_, static_cast<std::uint32_t>(g.degree()));
  }

  std::vector<Vec> generators_in_degree(std::uint32_t d) override {
    std::vector<Vec> out;
    for (const auto& g : gens_)
      if (static_cast<std::uint32_t>(g.degree()) == d) out.push_back(to_slice(g, d));
    return out;
  }

  std::optional<std::uint32_t> generator_degree_bound() const override { return bound_; }

 private:
  std::vector<Poly2> gens_;
  std::uint32_t bound_ = 0;
};

class SumSource final : public SliceSource {
 public:
  SumSource(GradedIdeal base, std::vector<Poly2> extra) : base_(std::move(base)), extra_(std::move(extra)) {}

  std::vector<Vec> generators_in_degree(std::uint32_t d) override {
    std::vector<Vec> out = base_.slice(d).basis();
    for (const auto& g : extra_)
      if (static_cast<std::uint32_t>(g.degree()) == d) out.push_back(to_slice(g, d));
    return out;
  }

 private:
  GradedIdeal base_;
  std::vector<Poly2> extra_;
};

void require_homogeneous(const std::vector<Poly2>& gens, Prime p) {
  for (const auto& g : gens) {
    require_same(p, g.prime());
    if (g.is_zero() || !g.is_homogeneous() || g.degree() < 1)
      throw DomainError("ideal generators must be nonzero homogeneous of positive degree: " + g.to_string());
  }
}

}  // namespace

struct GradedIdeal::State {
  State(Prime p, std::unique_ptr<SliceSource> s, std::vector<Poly2> g, std::string desc)
      : prime(p), src(std::move(s)), gens(std::move(g)), description(std::move(desc)) {}

  Prime prime;
  std::unique_ptr<SliceSource> src;
  std::vector<Poly2> gens;
  std::string description;

  std::mutex mutex;
  std::deque<Subspace> slices;
  std::optional<std::uint32_t> full_from;
};

GradedIdeal GradedIdeal::from_generators(Prime p, std::vector<Poly2> gens, std::string description) {
  require_homogeneous(gens, p);
  if (description.empty()) {
    description = "<";
    for (std::size_t i = 0; i < gens.size(); ++i) description += (i ? ", " : "") + gens[i].to_string();
    description += ">";
  }
  auto src = std::make_unique<ExplicitSource>(gens);
  return GradedIdeal(std::make_shared<State>(p, std::move(src), std::move(gens), std::move(description)));
}

GradedIdeal GradedIdeal::from_source(Prime p, std::unique_ptr<SliceSource> src, std::string description) {
  return GradedIdeal(std::make_shared<State>(p, std::move(src), std::vector<Poly2>{}, std::move(description)));
}

GradedIdeal GradedIdeal::with_extra(std::vector<Poly2> extra, std::string description) const {
  require_homogeneous(extra, prime());
  if (description.empty()) description = state_->description + " + " + std::to_string(extra.size()) + " more";
  return from_source(prime(), std::make_unique<SumSource>(*this, std::move(extra)), std::move(description));
}

Prime GradedIdeal::prime() const noexcept { return state_->prime; }
const std::string& GradedIdeal::description() const noexcept { return state_->description; }
const std::vector<Poly2>& GradedIdeal::explicit_generators() const noexcept { return state_->gens; }

const Subspace& GradedIdeal::slice(std::uint32_t d) const {
  State& s = *state_;
  std::lock_guard lock(s.mutex);
  while (s.slices.size() <= d) {
    const auto e = static_cast<std::uint32_t>(s.slices.size());
    if (s.full_from) {
      s.slices.push_back(Subspace::full(s.prime, e + 1));
      continue;
    }
    std::vector<Vec> rows;
    if (e > 0) {
      const Subspace& prev = s.slices.back();
      for (const Vec& v : prev.basis()) {
        rows.push_back(times_x(v));
        rows.push_back(times_y(v));
      }
    }
    for (Vec& g : s.src->generators_in_degree(e)) {
      if (g.size() != e + 1) throw DimensionMismatch("generator slice has wrong length");
      rows.push_back(std::move(g));
    }
    Subspace next = echelon(s.prime, e + 1, std::move(rows));
    if (e > 0 && s.slices.back().is_full() && !next.is_full())
      throw InternalError("saturation violated at degree " + std::to_string(e));
    if (next.is_full()) s.full_from = e;
    s.slices.push_back(std::move(next));
  }
  return s.slices[d];
}

std::optional<std::uint32_t> GradedIdeal::saturation_degree(std::uint32_t cap) const {
  for (std::uint32_t d = 0; d <= cap; ++d)
    if (slice(d).is_full()) return d;
  return std::nullopt;
}

std::uint32_t GradedIdeal::generation_degree(std::uint32_t cap) const {
  if (auto b = state_->src->generator_degree_bound()) return *b;
  if (auto s = saturation_degree(cap)) return *s;
  throw CapExceeded("ideal " + description() + " does not saturate by degree " + std::to_string(cap));
}

std::uint32_t default_degree_cap(Prime p) {
  if (const char* env = std::getenv("MODINV_MAX_DEGREE")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::uint32_t>(v);
  }
  return 4 * p.value() * p.value();
}

Subspace invariant_slice(Prime p, std::span<const Mat2> gens, std::uint32_t d, const GradedIdeal* modulo) {
  for (const auto& g : gens) require_same(p, g.prime());
  if (modulo) require_same(p, modulo->prime());
  const std::uint32_t q = p.value();
  const std::size_t n = d + 1;
  const Subspace zero(p, n);
  const Subspace& w = modulo ? modulo->slice(d) : zero;

  Subspace fixed = Subspace::full(p, n);
  for (const auto& g : gens) {
    if (fixed.is_zero()) break;
    const Matrix act = slice_action(g, d);
    // Column k: (g - 1) e_k reduced modulo w.
    Matrix sys(p, n, n);
    for (std::size_t k = 0; k < n; ++k) {
      Vec col(n);
      for (std::size_t i = 0; i < n; ++i) col[i] = act.at(i, k);
      col[k] = fp::sub(col[k], 1, q);
      const Vec red = w.reduce(col);
      for (std::size_t i = 0; i < n; ++i) sys.at(i, k) = red[i];
    }
    fixed = intersect(fixed, kernel(sys));
  }
  if (w.is_zero()) return fixed;
  std::vector<Vec> reps;
  for (const Vec& v : fixed.basis()) {
    Vec r = w.reduce(v);
    if (!is_zero_vec(r)) reps.push_back(std::move(r));
  }
  return echelon(p, n, std::move(reps));
}

const Subspace& ideal_slice(const GradedIdeal& ideal, std::uint32_t d) { return ideal.slice(d); }

bool member(const GradedIdeal& ideal, const Poly2& f) {
  require_same(ideal.prime(), f.prime());
  for (auto d : f.degrees())
    if (!ideal.slice(d).contains(to_slice(f, d))) return false;
  return true;
}

bool ideal_contains(const GradedIdeal& a, const GradedIdeal& b) {
  require_same(a.prime(), b.prime());
  const std::uint32_t top = b.generation_degree(default_degree_cap(b.prime()));
  for (std::uint32_t d = 0; d <= top; ++d)
    if (!a.slice(d).contains(b.slice(d))) return false;
  return true;
}

bool ideal_equal(const GradedIdeal& a, const GradedIdeal& b) {
  require_same(a.prime(), b.prime());
  const std::uint32_t cap = default_degree_cap(a.prime());
  const std::uint32_t top = std::max(a.generation_degree(cap), b.generation_degree(cap));
  for (std::uint32_t d = 0; d <= top; ++d)
    if (!(a.slice(d) == b.slice(d))) return false;
  return true;
}

std::uint64_t QuotientDims::total() const {
  std::uint64_t t = 0;
  for (auto v : dims) t += v;
  return t;
}

QuotientDims quotient_dims(const GradedIdeal& ideal, std::optional<std::uint32_t> cap) {
  const std::uint32_t limit = cap.value_or(default_degree_cap(ideal.prime()));
  QuotientDims out;
  for (std::uint32_t d = 0; d <= limit; ++d) {
    const std::uint64_t dim = d + 1 - ideal.slice(d).dim();
    if (dim == 0) {
      if (d > 0) out.topdeg = d - 1;
      return out;
    }
    out.dims.push_back(dim);
  }
  return out;
}

std::vector<Poly2> minimal_generators(std::span<const Subspace> slices) {
  std::vector<Poly2> out;
  for (std::size_t d = 0; d < slices.size(); ++d) {
    const Subspace& cur = slices[d];
    if (cur.ambient_dim() != d + 1) throw DimensionMismatch("slice " + std::to_string(d) + " has wrong ambient dim");
    std::vector<Vec> lower;
    if (d > 0)
      for (const Vec& v : slices[d - 1].basis()) {
        lower.push_back(times_x(v));
        lower.push_back(times_y(v));
      }
    const Subspace generated = echelon(cur.prime(), d + 1, std::move(lower));
    if (!cur.contains(generated)) throw DomainError("slices are not monotone at degree " + std::to_string(d));
    std::vector<Vec> fresh;
    for (const Vec& v : cur.basis()) {
      Vec r = generated.reduce(v);
      if (!is_zero_vec(r)) fresh.push_back(std::move(r));
    }
    const Subspace lifts = echelon(cur.prime(), d + 1, std::move(fresh));
    for (const Vec& v : lifts.basis()) out.push_back(from_slice(cur.prime(), static_cast<std::uint32_t>(d), v));
  }
  return out;
}

std::vector<Poly2> minimal_generators(const GradedIdeal& ideal) {
  const std::uint32_t top = ideal.generation_degree(default_degree_cap(ideal.prime()));
  std::vector<Subspace> slices;
  for (std::uint32_t d = 0; d <= top; ++d) slices.push_back(ideal.slice(d));
  return minimal_generators(slices);
}

std::vector<std::uint64_t> complete_intersection_series(std::uint32_t e1, std::uint32_t e2) {
  if (e1 == 0 || e2 == 0) return {};
  std::vector<std::uint64_t> out(e1 + e2 - 1, 0);
  for (std::uint32_t i = 0; i < e1; ++i)
    for (std::uint32_t j = 0; j < e2; ++j) ++out[i + j];
  return out;
}

MonomialFamily omega_family(std::uint32_t r, Prime p) {
  const std::uint32_t q = p.value();
  MonomialFamily f{"Omega(" + std::to_string(r) + ")", p, {}};
  for (std::uint32_t i = 0; i <= r * q - 1; ++i)
    for (std::uint32_t j = 0; j <= q * q - q + r - 1; ++j) f.monomials.push_back({i, j});
  for (std::uint32_t i = r * q; i + 1 <= q * q - q; ++i)
    for (std::uint32_t j = 0; j < r; ++j) f.monomials.push_back({i, j});
  return f;
}

MonomialFamily gamma_family(std::uint32_t r, std::uint32_t s, Prime p) {
  MonomialFamily f{"Gamma(" + std::to_string(r) + "," + std::to_string(s) + ")", p, {}};
  for (std::uint32_t i = 0; i < r; ++i)
    for (std::uint32_t j = 0; j < p.value() * s; ++j) f.monomials.push_back({i, j});
  return f;
}

MonomialFamily theta_family(Prime p) {
  const std::uint32_t q = p.value();
  MonomialFamily f{"Theta", p, {}};
  for (std::uint32_t i = 0; i <= q - 1; ++i)
    for (std::uint32_t j = 0; j <= 2 * q - 2; ++j)
      if (i + j != 3 * q - 3) f.monomials.push_back({i, j});
  for (std::uint32_t i = q; i + 3 <= 2 * q; ++i) f.monomials.push_back({i, 0});
  return f;
}

VerificationReport basis_check(const MonomialFamily& family, const GradedIdeal& ideal, std::uint64_t expected_total) {
  require_same(family.prime, ideal.prime());
  const Prime p = ideal.prime();
  VerificationReport rep;
  rep.prime = p.value();
  rep.target = "basis_check " + family.name;

  rep.expect(family.monomials.size() == expected_total, family.name + " size", std::to_string(expected_total),
             std::to_string(family.monomials.size()));

  const QuotientDims qd = quotient_dims(ideal);
  rep.expect(qd.topdeg.has_value(), "quotient finite-dimensional", "finite", qd.topdeg ? "finite" : "infinite");
  if (!qd.topdeg) return rep;
  const std::uint32_t top = *qd.topdeg;

  std::map<std::uint32_t, std::vector<Monomial>> by_degree;
  for (const auto& m : family.monomials) by_degree[m.degree()].push_back(m);
  const bool in_range = by_degree.empty() || by_degree.rbegin()->first <= top;
  rep.expect(in_range, "monomials within quotient degrees", "max degree <= " + std::to_string(top),
             by_degree.empty() ? "none" : std::to_string(by_degree.rbegin()->first));

  bool all_ok = true;
  std::string first_bad;
  for (std::uint32_t d = 0; d <= top; ++d) {
    const Subspace& sl = ideal.slice(d);
    std::vector<Vec> images;
    for (const auto& m : by_degree[d]) images.push_back(sl.reduce(unit_slice(d, m.y)));
    const std::size_t count = images.size();
    const std::size_t independent = echelon(p, d + 1, std::move(images)).dim();
    if (count != qd.dims[d] || independent != count) {
      all_ok = false;
      if (first_bad.empty())
        first_bad = "degree " + std::to_string(d) + ": " + std::to_string(count) + " monomials, rank " +
                    std::to_string(independent) + ", quotient dim " + std::to_string(qd.dims[d]);
    }
  }
  rep.expect(all_ok, "basis in every degree", "count = rank = quotient dim", all_ok ? "ok" : first_bad);
  rep.expect(qd.total() == expected_total, "quotient total dimension", std::to_string(expected_total),
             std::to_string(qd.total()));
  return rep;
}

}  // namespace modinv
