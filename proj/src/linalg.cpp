#include "modinv/linalg.hpp"

#include <algorithm>
#include <string>

namespace modinv {

namespace {

void check_len(std::size_t got, std::size_t want) {
  if (got != want)
    throw DimensionMismatch("vector of length " + std::to_string(got) + ", expected " +
                            std::to_string(want));
}

// row_a -= c * row_b, starting at column `from`.
void axpy(Vec& a, const Vec& b, std::uint32_t c, std::uint32_t p, std::size_t from = 0) {
  if (c == 0) return;
  const std::uint32_t nc = fp::neg(c, p);
  for (std::size_t j = from; j < a.size(); ++j)
    if (b[j] != 0) a[j] = fp::add(a[j], fp::mul(nc, b[j], p), p);
}

// Gauss-Jordan on rows in place; returns pivot columns, leaves only nonzero
// rows in reduced form.
std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t n, std::uint32_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const std::uint32_t s = fp::inv(rows[r][col], p);
    if (s != 1)
      for (std::size_t j = col; j < n; ++j) rows[r][j] = fp::mul(rows[r][j], s, p);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][col] != 0) axpy(rows[i], rows[r], rows[i][col], p, col);
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

Matrix Matrix::identity(Prime p, std::size_t n) {
  Matrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec Matrix::apply(std::span<const std::uint32_t> v) const {
  check_len(v.size(), cols_);
  const std::uint32_t p = p_.value();
  Vec out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc = (acc + std::uint64_t(at(i, j)) * v[j]) % p;
    out[i] = static_cast<std::uint32_t>(acc);
  }
  return out;
}

Subspace Subspace::full(Prime p, std::size_t n) {
  std::vector<Vec> rows(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return echelon(p, n, std::move(rows));
}

Vec Subspace::reduce(std::span<const std::uint32_t> v) const {
  check_len(v.size(), n_);
  Vec out(v.begin(), v.end());
  const std::uint32_t p = p_.value();
  for (std::size_t k = 0; k < rows_.size(); ++k) axpy(out, rows_[k], out[pivots_[k]], p);
  return out;
}

bool Subspace::contains(std::span<const std::uint32_t> v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_same(p_, other.p_);
  check_len(other.n_, n_);
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](const Vec& r) { return contains(r); });
}

Subspace echelon(Prime p, std::size_t n, std::vector<Vec> rows) {
  for (const Vec& r : rows) check_len(r.size(), n);
  Subspace s(p, n);
  s.pivots_ = rref(rows, n, p.value());
  s.rows_ = std::move(rows);
  return s;
}

std::size_t rank(const Matrix& m) {
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
  return rref(rows, m.cols(), m.prime().value()).size();
}

Subspace kernel(const Matrix& m) {
  const std::uint32_t p = m.prime().value();
  const std::size_t n = m.cols();
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
  const auto pivots = rref(rows, n, p);

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = fp::neg(rows[k][f], p);
    basis.push_back(std::move(v));
  }
  return echelon(m.prime(), n, std::move(basis));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same(a.prime(), b.prime());
  check_len(b.ambient_dim(), a.ambient_dim());
  std::vector<Vec> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return echelon(a.prime(), a.ambient_dim(), std::move(rows));
}

// Solve sum_i s_i A_i = sum_j t_j B_j via the kernel of the n x (ka + kb)
// system [A^T | -B^T]; the A-part of each solution spans the intersection.
Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same(a.prime(), b.prime());
  check_len(b.ambient_dim(), a.ambient_dim());
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace(a.prime(), n);
  if (a.is_full()) return b;
  if (b.is_full()) return a;
  const std::uint32_t p = a.prime().value();
  const std::size_t ka = a.dim(), kb = b.dim();
  Matrix sys(a.prime(), n, ka + kb);
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t r = 0; r < n; ++r) sys.at(r, i) = a.basis()[i][r];
  for (std::size_t j = 0; j < kb; ++j)
    for (std::size_t r = 0; r < n; ++r) sys.at(r, ka + j) = fp::neg(b.basis()[j][r], p);
  const Subspace sol = kernel(sys);
  std::vector<Vec> rows;
  for (const Vec& s : sol.basis()) {
    Vec v(n, 0);
    for (std::size_t i = 0; i < ka; ++i)
      if (s[i] != 0) axpy(v, a.basis()[i], fp::neg(s[i], p), p);
    rows.push_back(std::move(v));
  }
  return echelon(a.prime(), n, std::move(rows));
}

bool is_zero_vec(std::span<const std::uint32_t> v) noexcept {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t c) { return c == 0; });
}

}  // namespace modinv
