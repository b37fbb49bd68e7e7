#include "modinv/poly2.hpp"

#include <cctype>
#include <sstream>

#include "modinv/fault.hpp"

namespace modinv {

Poly2 Poly2::constant(Prime p, std::int64_t c) {
  Poly2 f(p);
  f.add_term(0, 0, fp::reduce(c, p.value()));
  return f;
}

Poly2 Poly2::monomial(Prime p, std::uint32_t i, std::uint32_t j, std::int64_t c) {
  Poly2 f(p);
  f.add_term(i, j, fp::reduce(c, p.value()));
  return f;
}

void Poly2::add_term(std::uint32_t i, std::uint32_t j, std::uint32_t c) {
  if (c == 0) return;
  const std::uint32_t p = p_.value();
  auto [it, inserted] = terms_.try_emplace(Monomial{i, j}, c);
  if (inserted) return;
  it->second = fp::add(it->second, c, p);
  if (it->second == 0) terms_.erase(it);
}

FpScalar Poly2::coeff(std::uint32_t i, std::uint32_t j) const {
  auto it = terms_.find(Monomial{i, j});
  return FpScalar(it == terms_.end() ? 0 : it->second, p_);
}

int Poly2::degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

bool Poly2::is_homogeneous() const noexcept {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Poly2 Poly2::homogeneous_component(std::uint32_t d) const {
  Poly2 out(p_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

std::vector<std::uint32_t> Poly2::degrees() const {
  std::vector<std::uint32_t> out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    if (out.empty() || out.back() != it->first.degree()) out.push_back(it->first.degree());
  return out;
}

Poly2 Poly2::pow(std::uint32_t e) const {
  Poly2 result = constant(p_, 1);
  Poly2 base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly2 Poly2::operator-() const {
  Poly2 out(p_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, fp::neg(c, p_.value()));
  return out;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  require_same(p_, o.p_);
  for (const auto& [m, c] : o.terms_) add_term(m.x, m.y, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  require_same(p_, o.p_);
  for (const auto& [m, c] : o.terms_) add_term(m.x, m.y, fp::neg(c, p_.value()));
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  require_same(a.p_, b.p_);
  const std::uint32_t p = a.p_.value();
  Poly2 out(a.p_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma.x + mb.x, ma.y + mb.y, fp::mul(ca, cb, p));
  if (fault::armed(fault::Site::PolyProduct) && !out.is_zero()) {
    const Monomial lead = out.terms_.begin()->first;
    out.add_term(lead.x, lead.y, 1);
  }
  return out;
}

Poly2 operator*(const Poly2& a, FpScalar c) {
  require_same(a.p_, c.prime());
  Poly2 out(a.p_);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : a.terms_)
    out.terms_.emplace_hint(out.terms_.end(), m, fp::mul(v, c.value(), a.p_.value()));
  return out;
}

std::string Poly2::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool need_star = false;
    if (c != 1 || (m.x == 0 && m.y == 0)) {
      os << c;
      need_star = true;
    }
    if (m.x > 0) {
      if (need_star) os << '*';
      os << 'x';
      if (m.x > 1) os << '^' << m.x;
      need_star = true;
    }
    if (m.y > 0) {
      if (need_star) os << '*';
      os << 'y';
      if (m.y > 1) os << '^' << m.y;
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, Prime p) : s_(s), p_(p) {}

  Poly2 run() {
    Poly2 out(p_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      std::int64_t sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = next() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      term(out, sign);
      skip_ws();
    }
    return out;
  }

 private:
  void term(Poly2& out, std::int64_t sign) {
    std::int64_t coeff = 1;
    bool have_any = false;
    bool need_sep = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      have_any = true;
      need_sep = true;
    }
    std::uint64_t ex = 0, ey = 0;
    for (char var : {'x', 'y'}) {
      skip_ws();
      std::size_t save = pos_;
      if (need_sep && peek() == '*') {
        ++pos_;
        skip_ws();
      }
      if (peek() == var) {
        ++pos_;
        skip_ws();
        std::uint64_t e = 1;
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
          e = static_cast<std::uint64_t>(number());
        }
        (var == 'x' ? ex : ey) = e;
        have_any = true;
        need_sep = true;
      } else {
        pos_ = save;
      }
    }
    if (!have_any) fail("expected a term");
    out.add_term(static_cast<std::uint32_t>(ex), static_cast<std::uint32_t>(ey),
                 fp::reduce(sign * (coeff % static_cast<std::int64_t>(p_.value())), p_.value()));
  }

  std::int64_t number() {
    std::int64_t v = 0;
    bool any = false;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (next() - '0');
      if (v > (std::int64_t{1} << 40)) fail("integer too large");
      any = true;
    }
    if (!any) fail("expected integer");
    return v;
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char next() { return s_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  Prime p_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly2 Poly2::parse(std::string_view text, Prime p) { return PolyParser(text, p).run(); }

LinearForm::LinearForm(FpScalar alpha, FpScalar beta) : alpha_(alpha), beta_(beta) {
  require_same(alpha.prime(), beta.prime());
  if (alpha.is_zero() && beta.is_zero()) throw DomainError("linear form must be nonzero");
  const FpScalar lead = alpha.is_zero() ? beta : alpha;
  alpha_ = alpha / lead;
  beta_ = beta / lead;
}

Poly2 LinearForm::to_poly() const {
  const Prime p = alpha_.prime();
  Poly2 f(p);
  f.add_term(1, 0, alpha_.value());
  f.add_term(0, 1, beta_.value());
  return f;
}

namespace {

// Powers (u x + v y)^k for k = 0..n as slice vectors.
std::vector<Vec> linear_powers(std::uint32_t u, std::uint32_t v, std::uint32_t n, std::uint32_t p) {
  std::vector<Vec> pw{Vec{1}};
  for (std::uint32_t k = 1; k <= n; ++k) {
    const Vec& prev = pw.back();
    Vec cur(k + 1, 0);
    for (std::uint32_t t = 0; t < k; ++t) {
      if (prev[t] == 0) continue;
      cur[t] = fp::add(cur[t], fp::mul(prev[t], u, p), p);
      cur[t + 1] = fp::add(cur[t + 1], fp::mul(prev[t], v, p), p);
    }
    pw.push_back(std::move(cur));
  }
  return pw;
}

}  // namespace

Poly2 act(const Mat2& a, const Poly2& f) {
  require_same(a.prime(), f.prime());
  const Prime prime = f.prime();
  const std::uint32_t p = prime.value();
  if (f.is_zero()) return f;
  const auto top = static_cast<std::uint32_t>(f.degree());
  // x -> a x + c y, y -> b x + d y.
  const auto xp = linear_powers(a.a(), a.c(), top, p);
  const auto yp = linear_powers(a.b(), a.d(), top, p);
  Poly2 out(prime);
  for (const auto& [m, c] : f.terms()) {
    const Vec& u = xp[m.x];
    const Vec& w = yp[m.y];
    const std::uint32_t d = m.degree();
    for (std::uint32_t s = 0; s < u.size(); ++s) {
      if (u[s] == 0) continue;
      const std::uint32_t cu = fp::mul(c, u[s], p);
      for (std::uint32_t t = 0; t < w.size(); ++t)
        if (w[t] != 0) out.add_term(d - s - t, s + t, fp::mul(cu, w[t], p));
    }
  }
  return out;
}

Poly2 div_exact_linear(const Poly2& f, const LinearForm& l) {
  const Prime prime = f.prime();
  require_same(prime, l.alpha().prime());
  if (l.alpha().is_zero()) {
    // l = y
    Poly2 q(prime), rem(prime);
    for (const auto& [m, c] : f.terms()) {
      if (m.y == 0)
        rem.add_term(m.x, m.y, c);
      else
        q.add_term(m.x, m.y - 1, c);
    }
    if (!rem.is_zero()) throw NotDivisible(rem);
    return q;
  }
  // l = x + beta y. Under T: x -> x - beta y the form l becomes x.
  const std::int64_t beta = l.beta().value();
  const Mat2 t(prime, 1, 0, -beta, 1);
  const Mat2 t_inv = t.inverse();
  const Poly2 g = act(t, f);
  Poly2 q(prime), rem(prime);
  for (const auto& [m, c] : g.terms()) {
    if (m.x == 0)
      rem.add_term(m.x, m.y, c);
    else
      q.add_term(m.x - 1, m.y, c);
  }
  if (!rem.is_zero()) throw NotDivisible(act(t_inv, rem));
  return act(t_inv, q);
}

Poly2 div_exact(const Poly2& f, const Poly2& g) {
  require_same(f.prime(), g.prime());
  if (g.is_zero()) throw DivisionByZero();
  const Prime prime = f.prime();
  const std::uint32_t p = prime.value();
  const auto [glead, gc] = *g.terms().begin();
  const std::uint32_t gci = fp::inv(gc, p);
  Poly2 rem = f, q(prime);
  while (!rem.is_zero()) {
    const auto [m, c] = *rem.terms().begin();
    if (m.x < glead.x || m.y < glead.y) throw NotDivisible(rem);
    Poly2 t(prime);
    t.add_term(m.x - glead.x, m.y - glead.y, fp::mul(c, gci, p));
    rem -= t * g;
    if (!rem.is_zero() && !GrlexDesc{}(m, rem.terms().begin()->first))
      throw InternalError("division step did not lower the leading term");
    q += t;
  }
  return q;
}

Poly2 delta(Prime p) {
  const std::uint32_t q = p.value();
  return Poly2::monomial(p, 1, q) - Poly2::monomial(p, q, 1);
}

Poly2 dickson_d1(Prime p) {
  const std::uint32_t q = p.value();
  const Poly2 num = Poly2::monomial(p, 1, q * q) - Poly2::monomial(p, q * q, 1);
  Poly2 d1 = div_exact(num, delta(p));
  Poly2 closed(p);
  for (std::uint32_t i = 0; i <= q; ++i) closed.add_term((q - 1) * i, (q - 1) * (q - i), 1);
  if (!(d1 == closed)) throw InternalError("d1 disagrees with its monomial-sum form");
  return d1;
}

Poly2 dickson_d0(Prime p) {
  const std::uint32_t q = p.value();
  const Poly2 num = Poly2::monomial(p, q, q * q) - Poly2::monomial(p, q * q, q);
  Poly2 d0 = div_exact(num, delta(p));
  if (!(d0 == delta(p).pow(q - 1))) throw InternalError("d0 disagrees with delta^(p-1)");
  return d0;
}

Poly2 gamma(std::uint32_t i, Prime p) {
  if (i < 1) throw DomainError("gamma(i) needs i >= 1");
  const std::uint32_t e = p.value() - 1;
  Poly2 g(p);
  g.add_term(i * e, 0, 1);
  g.add_term(e, (i - 1) * e, p.value() - 1);
  g.add_term(0, i * e, 1);
  return g;
}

Poly2 rho(std::uint32_t s, Prime p) {
  const std::uint32_t q = p.value();
  return (Poly2::monomial(p, 0, q) - Poly2::monomial(p, q - 1, 1)).pow(s);
}

Poly2 power(char var, std::uint32_t k, Prime p) {
  if (var == 'x') return Poly2::monomial(p, k, 0);
  if (var == 'y') return Poly2::monomial(p, 0, k);
  throw DomainError(std::string("unknown variable ") + var);
}

Poly2 make_named(std::string_view name, Prime p) {
  auto arg = [&](std::string_view prefix) -> std::uint32_t {
    std::string_view rest = name.substr(prefix.size());
    if (rest.size() < 2 || rest.back() != ')') throw ParseError("bad named polynomial " + std::string(name));
    rest = rest.substr(0, rest.size() - 1);
    std::uint32_t v = 0;
    for (char ch : rest) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad argument in " + std::string(name));
      v = v * 10 + static_cast<std::uint32_t>(ch - '0');
    }
    return v;
  };
  if (name == "delta") return delta(p);
  if (name == "d0") return dickson_d0(p);
  if (name == "d1") return dickson_d1(p);
  if (name.starts_with("gamma(")) return gamma(arg("gamma("), p);
  if (name.starts_with("rho(")) return rho(arg("rho("), p);
  if (name.size() > 2 && (name[0] == 'x' || name[0] == 'y') && name[1] == '^') {
    std::uint32_t k = 0;
    for (char ch : name.substr(2)) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad power " + std::string(name));
      k = k * 10 + static_cast<std::uint32_t>(ch - '0');
    }
    return power(name[0], k, p);
  }
  throw ParseError("unknown named polynomial " + std::string(name));
}

Vec to_slice(const Poly2& f, std::uint32_t d) {
  Vec v(d + 1, 0);
  for (const auto& [m, c] : f.terms())
    if (m.degree() == d) v[m.y] = c;
  return v;
}

Poly2 from_slice(Prime p, std::uint32_t d, std::span<const std::uint32_t> v) {
  if (v.size() != d + 1) throw DimensionMismatch("slice vector length does not match degree");
  Poly2 f(p);
  for (std::uint32_t k = 0; k <= d; ++k) f.add_term(d - k, k, v[k]);
  return f;
}

Vec unit_slice(std::uint32_t d, std::uint32_t k) {
  Vec v(d + 1, 0);
  v[k] = 1;
  return v;
}

Matrix slice_action(const Mat2& a, std::uint32_t d) {
  const Prime prime = a.prime();
  const std::uint32_t p = prime.value();
  const auto xp = linear_powers(a.a(), a.c(), d, p);
  const auto yp = linear_powers(a.b(), a.d(), d, p);
  Matrix m(prime, d + 1, d + 1);
  for (std::uint32_t k = 0; k <= d; ++k) {
    const Vec& u = xp[d - k];
    const Vec& w = yp[k];
    for (std::uint32_t s = 0; s < u.size(); ++s) {
      if (u[s] == 0) continue;
      for (std::uint32_t t = 0; t < w.size(); ++t)
        if (w[t] != 0) m.at(s + t, k) = fp::add(m.at(s + t, k), fp::mul(u[s], w[t], p), p);
    }
  }
  if (fault::armed(fault::Site::SliceAction)) m.at(0, 0) = fp::add(m.at(0, 0), 1, p);
  return m;
}

Vec times_x(std::span<const std::uint32_t> v) {
  Vec out(v.begin(), v.end());
  out.push_back(0);
  return out;
}

Vec times_y(std::span<const std::uint32_t> v) {
  Vec out;
  out.reserve(v.size() + 1);
  out.push_back(0);
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

bool slice_div_linear(std::span<const std::uint32_t> f, const LinearForm& l, Vec& quotient) {
  const std::uint32_t p = l.alpha().prime().value();
  const std::size_t d = f.size() - 1;
  quotient.assign(d, 0);
  if (d == 0) return f[0] == 0;
  // f_k = alpha q_k + beta q_{k-1}
  if (l.alpha().is_zero()) {
    if (f[0] != 0) return false;
    for (std::size_t k = 1; k <= d; ++k) quotient[k - 1] = f[k];
    return true;
  }
  const std::uint32_t beta = l.beta().value();  // alpha == 1 after normalization
  std::uint32_t prev = 0;
  for (std::size_t k = 0; k < d; ++k) {
    prev = fp::sub(f[k], fp::mul(beta, prev, p), p);
    quotient[k] = prev;
  }
  return f[d] == fp::mul(beta, prev, p);
}

}  // namespace modinv
