#include "modinv/mat2.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace modinv {

Mat2::Mat2(Prime p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : p_(p),
      a_(fp::reduce(a, p.value())),
      b_(fp::reduce(b, p.value())),
      c_(fp::reduce(c, p.value())),
      d_(fp::reduce(d, p.value())) {
  if (det() == 0) throw DomainError("singular matrix " + to_string());
}

Mat2 Mat2::from_code(Prime p, std::uint32_t code) {
  const std::uint32_t q = p.value();
  const std::uint32_t a = code % q;
  code /= q;
  const std::uint32_t b = code % q;
  code /= q;
  const std::uint32_t c = code % q;
  code /= q;
  return Mat2(p, a, b, c, code % q);
}

std::uint32_t Mat2::det() const noexcept {
  const std::uint32_t p = p_.value();
  return fp::sub(fp::mul(a_, d_, p), fp::mul(b_, c_, p), p);
}

Mat2 Mat2::inverse() const {
  const std::uint32_t p = p_.value();
  const std::uint32_t di = fp::inv(det(), p);
  return Mat2(Unchecked{}, p_, fp::mul(d_, di, p), fp::mul(fp::neg(b_, p), di, p),
              fp::mul(fp::neg(c_, p), di, p), fp::mul(a_, di, p));
}

std::uint32_t Mat2::code() const noexcept {
  const std::uint32_t q = p_.value();
  return a_ + q * (b_ + q * (c_ + q * d_));
}

std::string Mat2::to_string() const {
  std::ostringstream os;
  os << a_ << ',' << b_ << ';' << c_ << ',' << d_;
  return os.str();
}

Mat2 operator*(const Mat2& l, const Mat2& r) {
  require_same(l.p_, r.p_);
  const std::uint32_t p = l.p_.value();
  auto dot = [p](std::uint32_t u0, std::uint32_t v0, std::uint32_t u1, std::uint32_t v1) {
    return fp::add(fp::mul(u0, v0, p), fp::mul(u1, v1, p), p);
  };
  return Mat2(Mat2::Unchecked{}, l.p_, dot(l.a_, r.a_, l.b_, r.c_), dot(l.a_, r.b_, l.b_, r.d_),
              dot(l.c_, r.a_, l.d_, r.c_), dot(l.c_, r.b_, l.d_, r.d_));
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("bad matrix entry in '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Mat2 Mat2::parse(std::string_view text, Prime p) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("matrix needs 'a,b;c,d': " + std::string(text));
  const auto r0 = text.substr(0, semi), r1 = text.substr(semi + 1);
  const auto c0 = r0.find(','), c1 = r1.find(',');
  if (c0 == std::string_view::npos || c1 == std::string_view::npos || r1.find(';') != std::string_view::npos)
    throw ParseError("matrix needs 'a,b;c,d': " + std::string(text));
  return Mat2(p, parse_int(r0.substr(0, c0), text), parse_int(r0.substr(c0 + 1), text),
              parse_int(r1.substr(0, c1), text), parse_int(r1.substr(c1 + 1), text));
}

std::vector<Mat2> parse_matrix_list(std::string_view text, Prime p) {
  std::vector<Mat2> out;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) out.push_back(Mat2::parse(tok, p));
  return out;
}

std::uint64_t gl2_order(Prime p) {
  const std::uint64_t q = p.value();
  return (q * q - 1) * (q * q - q);
}

}  // namespace modinv
