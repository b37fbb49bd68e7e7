#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "modinv/mat2.hpp"
#include "modinv/poly2.hpp"

namespace modinv {

/// rank(A - 1) == 1.
bool is_reflection(const Mat2& a) noexcept;

/// A matrix with rank(sigma - 1) = 1 together with the normalized linear form
/// spanning the image of sigma - 1.
class Reflection {
 public:
  /// Throws DomainError if `m` is not a reflection.
  explicit Reflection(const Mat2& m);

  const Mat2& matrix() const noexcept { return m_; }
  const LinearForm& vsigma() const noexcept { return v_; }
  Prime prime() const noexcept { return m_.prime(); }
  /// Unipotent (order p) rather than diagonalizable.
  bool is_transvection() const noexcept;

 private:
  Mat2 m_;
  LinearForm v_;
};

/// Finite subgroup of GL_2(F_p) with its elements sorted by Mat2::code().
class MatrixGroup {
 public:
  MatrixGroup(Prime p, std::vector<Mat2> generators, std::vector<Mat2> elements);

  Prime prime() const noexcept { return p_; }
  const std::vector<Mat2>& generators() const noexcept { return gens_; }
  const std::vector<Mat2>& elements() const noexcept { return elems_; }
  std::uint64_t order() const noexcept { return elems_.size(); }
  bool contains(const Mat2& g) const;

  std::vector<Mat2> reflections() const;
  /// Order of the image of the determinant in F_p^*.
  std::uint32_t determinant_image_order() const;

  friend bool operator==(const MatrixGroup& a, const MatrixGroup& b) {
    return a.p_ == b.p_ && a.codes_ == b.codes_;
  }

 private:
  Prime p_;
  std::vector<Mat2> gens_;
  std::vector<Mat2> elems_;
  std::vector<std::uint32_t> codes_;
};

/// Breadth-first closure of the generators under multiplication. `cap`
/// defaults to |GL_2(F_p)|; throws CapExceeded beyond it.
MatrixGroup generate_closure(Prime p, const std::vector<Mat2>& gens,
                             std::optional<std::uint64_t> cap = std::nullopt);

/// Catalog families: L^r (A^r has determinant 1) and U_{r,s} (upper triangular,
/// alpha^r = beta^s = 1).
struct CatalogL {
  std::uint32_t r;
  friend bool operator==(CatalogL, CatalogL) = default;
};
struct CatalogU {
  std::uint32_t r, s;
  friend bool operator==(CatalogU, CatalogU) = default;
};
using CatalogSpec = std::variant<CatalogL, CatalogU>;

std::string to_string(const CatalogSpec& spec);
/// "L:r" or "U:r,s".
CatalogSpec parse_catalog_spec(std::string_view text);

std::vector<std::uint32_t> divisors_of_p_minus_1(Prime p);

/// Reflections generating the catalog group, identity entries dropped.
/// L^r: omega, omega', D(z^{(p-1)/r}, 1). U_{r,s}: omega', D(z^{(p-1)/r}, 1),
/// D(1, z^{(p-1)/s}); z is the least primitive root.
std::vector<Reflection> catalog_generators(const CatalogSpec& spec, Prime p);

MatrixGroup catalog_group(const CatalogSpec& spec, Prime p);

/// r p (p^2 - 1) for L^r, r s p for U_{r,s}.
std::uint64_t catalog_order(const CatalogSpec& spec, Prime p);

/// All catalog groups for p.
std::vector<CatalogSpec> catalog_specs(Prime p);

struct GroupClass {
  struct PrimeToP {
    friend bool operator==(PrimeToP, PrimeToP) = default;
  };
  struct OtherModular {
    friend bool operator==(OtherModular, OtherModular) = default;
  };
  using Tag = std::variant<CatalogL, CatalogU, PrimeToP, OtherModular>;

  Tag tag;
  /// g with g G g^{-1} equal to the catalog group, for catalog tags.
  std::optional<Mat2> conjugator;

  std::string tag_string() const;
  std::optional<CatalogSpec> catalog() const;
};

GroupClass classify(const MatrixGroup& g);

/// g H g^{-1}, elementwise.
MatrixGroup conjugate(const MatrixGroup& h, const Mat2& g);

/// All reflections of GL_2(F_p), ordered by code.
std::vector<Mat2> all_reflections(Prime p);

}  // namespace modinv
