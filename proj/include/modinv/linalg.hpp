#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "modinv/fp.hpp"

namespace modinv {

using Vec = std::vector<std::uint32_t>;

/// Dense matrix over F_p, row-major.
class Matrix {
 public:
  Matrix(Prime p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(Prime p, std::size_t n);

  Prime prime() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint32_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const std::uint32_t> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  Vec apply(std::span<const std::uint32_t> v) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Prime p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

/// A linear subspace of F_p^n held as its reduced row-echelon basis.
/// Equal subspaces have identical bases.
class Subspace {
 public:
  Subspace(Prime p, std::size_t ambient_dim) : p_(p), n_(ambient_dim) {}

  static Subspace full(Prime p, std::size_t n);

  Prime prime() const noexcept { return p_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  bool is_zero() const noexcept { return rows_.empty(); }
  bool is_full() const noexcept { return rows_.size() == n_; }

  const std::vector<Vec>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Canonical coset representative of v modulo this subspace: v minus the
  /// combination of basis rows that clears every pivot column.
  Vec reduce(std::span<const std::uint32_t> v) const;

  bool contains(std::span<const std::uint32_t> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  friend Subspace echelon(Prime, std::size_t, std::vector<Vec>);

  Prime p_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Canonical span of the given rows. Every row must have length n.
Subspace echelon(Prime p, std::size_t n, std::vector<Vec> rows);

/// Null space {v : M v = 0}.
Subspace kernel(const Matrix& m);

std::size_t rank(const Matrix& m);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

bool is_zero_vec(std::span<const std::uint32_t> v) noexcept;

}  // namespace modinv
