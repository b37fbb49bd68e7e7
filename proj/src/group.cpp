#include "modinv/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace modinv {

bool is_reflection(const Mat2& a) noexcept {
  if (a.is_identity()) return false;
  const std::uint32_t p = a.prime().value();
  const std::uint32_t am = fp::sub(a.a(), 1, p), dm = fp::sub(a.d(), 1, p);
  return fp::mul(am, dm, p) == fp::mul(a.b(), a.c(), p);
}

namespace {

LinearForm image_form(const Mat2& m) {
  if (!is_reflection(m)) throw DomainError("not a reflection: " + m.to_string());
  const Prime p = m.prime();
  const std::uint32_t q = p.value();
  // Columns of m - 1 as linear forms col0 x + col1 y.
  const std::uint32_t c00 = fp::sub(m.a(), 1, q), c10 = m.c();
  if (c00 != 0 || c10 != 0) return LinearForm(FpScalar(c00, p), FpScalar(c10, p));
  return LinearForm(FpScalar(m.b(), p), FpScalar(fp::sub(m.d(), 1, q), p));
}

}  // namespace

Reflection::Reflection(const Mat2& m) : m_(m), v_(image_form(m)) {}

bool Reflection::is_transvection() const noexcept {
  // A reflection is unipotent iff its determinant (the nontrivial eigenvalue) is 1.
  return m_.det() == 1;
}

MatrixGroup::MatrixGroup(Prime p, std::vector<Mat2> generators, std::vector<Mat2> elements)
    : p_(p), gens_(std::move(generators)), elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end(), [](const Mat2& a, const Mat2& b) { return a.code() < b.code(); });
  codes_.reserve(elems_.size());
  for (const auto& e : elems_) codes_.push_back(e.code());
}

bool MatrixGroup::contains(const Mat2& g) const {
  return std::binary_search(codes_.begin(), codes_.end(), g.code());
}

std::vector<Mat2> MatrixGroup::reflections() const {
  std::vector<Mat2> out;
  for (const auto& e : elems_)
    if (is_reflection(e)) out.push_back(e);
  return out;
}

std::uint32_t MatrixGroup::determinant_image_order() const {
  std::vector<bool> seen(p_.value(), false);
  std::uint32_t count = 0;
  for (const auto& e : elems_)
    if (!seen[e.det()]) {
      seen[e.det()] = true;
      ++count;
    }
  return count;
}

MatrixGroup generate_closure(Prime p, const std::vector<Mat2>& gens, std::optional<std::uint64_t> cap) {
  for (const auto& g : gens) require_same(p, g.prime());
  const std::uint64_t limit = cap.value_or(gl2_order(p));
  const std::uint32_t q = p.value();
  std::vector<bool> seen(static_cast<std::size_t>(q) * q * q * q, false);
  std::vector<Mat2> elems{Mat2::identity(p)};
  seen[elems[0].code()] = true;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Mat2 h = elems[head] * g;
      if (seen[h.code()]) continue;
      seen[h.code()] = true;
      elems.push_back(h);
      if (elems.size() > limit)
        throw CapExceeded("closure exceeded " + std::to_string(limit) + " elements");
    }
  }
  return MatrixGroup(p, gens, std::move(elems));
}

std::string to_string(const CatalogSpec& spec) {
  if (const auto* l = std::get_if<CatalogL>(&spec)) return "L(" + std::to_string(l->r) + ")";
  const auto& u = std::get<CatalogU>(spec);
  return "U(" + std::to_string(u.r) + "," + std::to_string(u.s) + ")";
}

namespace {

std::uint32_t parse_u32(std::string_view s, std::string_view whole) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("bad group spec '" + std::string(whole) + "'");
  return v;
}

}  // namespace

CatalogSpec parse_catalog_spec(std::string_view text) {
  if (text.starts_with("L:")) return CatalogL{parse_u32(text.substr(2), text)};
  if (text.starts_with("U:")) {
    const auto rest = text.substr(2);
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw ParseError("U spec needs 'U:r,s'");
    return CatalogU{parse_u32(rest.substr(0, comma), text), parse_u32(rest.substr(comma + 1), text)};
  }
  throw ParseError("group spec must be L:r or U:r,s, got '" + std::string(text) + "'");
}

std::vector<std::uint32_t> divisors_of_p_minus_1(Prime p) {
  std::vector<std::uint32_t> out;
  const std::uint32_t n = p.value() - 1;
  for (std::uint32_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

namespace {

void require_divides(std::uint32_t r, Prime p) {
  if (r == 0 || (p.value() - 1) % r != 0)
    throw DomainError(std::to_string(r) + " does not divide p - 1 = " + std::to_string(p.value() - 1));
}

}  // namespace

std::vector<Reflection> catalog_generators(const CatalogSpec& spec, Prime p) {
  const std::uint32_t z = primitive_root(p);
  const std::uint32_t q = p.value();
  auto root_of_order = [&](std::uint32_t r) { return fp::pow(z, (q - 1) / r, q); };
  std::vector<Reflection> out;
  if (const auto* l = std::get_if<CatalogL>(&spec)) {
    require_divides(l->r, p);
    out.emplace_back(Mat2::omega(p));
    out.emplace_back(Mat2::omega_prime(p));
    if (l->r > 1) out.emplace_back(Mat2::diag(p, root_of_order(l->r), 1));
  } else {
    const auto& u = std::get<CatalogU>(spec);
    require_divides(u.r, p);
    require_divides(u.s, p);
    out.emplace_back(Mat2::omega_prime(p));
    if (u.r > 1) out.emplace_back(Mat2::diag(p, root_of_order(u.r), 1));
    if (u.s > 1) out.emplace_back(Mat2::diag(p, 1, root_of_order(u.s)));
  }
  return out;
}

MatrixGroup catalog_group(const CatalogSpec& spec, Prime p) {
  std::vector<Mat2> gens;
  for (const auto& r : catalog_generators(spec, p)) gens.push_back(r.matrix());
  return generate_closure(p, gens);
}

std::uint64_t catalog_order(const CatalogSpec& spec, Prime p) {
  const std::uint64_t q = p.value();
  if (const auto* l = std::get_if<CatalogL>(&spec)) return l->r * q * (q * q - 1);
  const auto& u = std::get<CatalogU>(spec);
  return std::uint64_t{u.r} * u.s * q;
}

std::vector<CatalogSpec> catalog_specs(Prime p) {
  std::vector<CatalogSpec> out;
  const auto divs = divisors_of_p_minus_1(p);
  for (auto r : divs) out.emplace_back(CatalogL{r});
  for (auto r : divs)
    for (auto s : divs) out.emplace_back(CatalogU{r, s});
  return out;
}

std::string GroupClass::tag_string() const {
  return std::visit(
      [](const auto& t) -> std::string {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, CatalogL> || std::is_same_v<T, CatalogU>)
          return to_string(CatalogSpec{t});
        else if constexpr (std::is_same_v<T, PrimeToP>)
          return "PrimeToP";
        else
          return "OtherModular";
      },
      tag);
}

std::optional<CatalogSpec> GroupClass::catalog() const {
  if (const auto* l = std::get_if<CatalogL>(&tag)) return CatalogSpec{*l};
  if (const auto* u = std::get_if<CatalogU>(&tag)) return CatalogSpec{*u};
  return std::nullopt;
}

MatrixGroup conjugate(const MatrixGroup& h, const Mat2& g) {
  const Mat2 gi = g.inverse();
  std::vector<Mat2> gens, elems;
  for (const auto& x : h.generators()) gens.push_back(g * x * gi);
  for (const auto& x : h.elements()) elems.push_back(g * x * gi);
  return MatrixGroup(h.prime(), std::move(gens), std::move(elems));
}

std::vector<Mat2> all_reflections(Prime p) {
  const std::uint32_t q = p.value();
  std::vector<Mat2> out;
  const std::uint32_t n = q * q * q * q;
  for (std::uint32_t code = 0; code < n; ++code) {
    std::uint32_t t = code;
    const std::uint32_t a = t % q;
    t /= q;
    const std::uint32_t b = t % q;
    t /= q;
    const std::uint32_t c = t % q;
    const std::uint32_t d = t / q;
    if (fp::sub(fp::mul(a, d, q), fp::mul(b, c, q), q) == 0) continue;
    Mat2 m(p, a, b, c, d);
    if (is_reflection(m)) out.push_back(m);
  }
  return out;
}

GroupClass classify(const MatrixGroup& g) {
  const Prime p = g.prime();
  const std::uint32_t q = p.value();
  if (g.order() % q != 0) return {GroupClass::PrimeToP{}, std::nullopt};

  const auto refl = g.reflections();
  if (generate_closure(p, refl).order() != g.order()) return {GroupClass::OtherModular{}, std::nullopt};

  // Elements of g to test under conjugation: its reflections generate it.
  const std::size_t nrefl = refl.size();
  const std::uint32_t det_order = g.determinant_image_order();

  const std::uint32_t ncodes = q * q * q * q;
  for (const auto& spec : catalog_specs(p)) {
    if (catalog_order(spec, p) != g.order()) continue;
    const MatrixGroup cat = catalog_group(spec, p);
    if (cat.reflections().size() != nrefl || cat.determinant_image_order() != det_order) continue;
    std::vector<bool> member(ncodes, false);
    for (const auto& e : cat.elements()) member[e.code()] = true;
    for (std::uint32_t code = 0; code < ncodes; ++code) {
      std::uint32_t t = code;
      const std::uint32_t a = t % q;
      t /= q;
      const std::uint32_t b = t % q;
      t /= q;
      const std::uint32_t c = t % q;
      const std::uint32_t d = t / q;
      if (fp::sub(fp::mul(a, d, q), fp::mul(b, c, q), q) == 0) continue;
      const Mat2 x(p, a, b, c, d);
      const Mat2 xi = x.inverse();
      bool ok = true;
      for (const auto& r : refl) {
        if (!member[(x * r * xi).code()]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      GroupClass out;
      if (const auto* l = std::get_if<CatalogL>(&spec))
        out.tag = *l;
      else
        out.tag = std::get<CatalogU>(spec);
      out.conjugator = x;
      return out;
    }
  }
  return {GroupClass::OtherModular{}, std::nullopt};
}

}  // namespace modinv
