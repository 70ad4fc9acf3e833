#pragma once

// PGL(2, p) acting on the projective line PL(F_p) by linear fractional maps.
//
// Points of PL(F_p) are indexed 0 .. p; index p is the point at infinity.
// Permutations compose left to right: `a.then(b)` applies a first, then b,
// so the permutation of the word xy is xperm.then(yperm). As matrices this
// is lft_permutation(Y * X); trace, determinant and order of XY and YX agree.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "januarial/field.hpp"

namespace januarial {

class ProjectivePoint {
 public:
  static ProjectivePoint finite(FieldElement z) { return {z.modulus(), z.value()}; }
  static ProjectivePoint infinity(PrimeModulus m) { return {m, m.value()}; }
  static ProjectivePoint from_index(PrimeModulus m, std::uint64_t index);

  PrimeModulus modulus() const noexcept { return modulus_; }
  std::uint64_t index() const noexcept { return index_; }
  bool is_infinity() const noexcept { return index_ == modulus_.value(); }
  /// Requires !is_infinity().
  FieldElement coordinate() const;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  ProjectivePoint(PrimeModulus m, std::uint64_t index) : modulus_(m), index_(index) {}

  PrimeModulus modulus_;
  std::uint64_t index_;
};

/// "inf" for the point at infinity, the residue otherwise.
std::string point_label(std::uint64_t index, std::uint64_t p);

/// A plain 2x2 matrix over F_p, entries in reading order.
struct Matrix2 {
  FieldElement a11, a12, a21, a22;

  static Matrix2 from_ints(PrimeModulus m, std::int64_t a11, std::int64_t a12, std::int64_t a21, std::int64_t a22);
  static Matrix2 identity(PrimeModulus m);

  PrimeModulus modulus() const noexcept { return a11.modulus(); }
  FieldElement det() const { return a11 * a22 - a12 * a21; }
  FieldElement trace() const { return a11 + a22; }
  bool is_scalar() const { return a12.is_zero() && a21.is_zero() && a11 == a22; }
  std::array<std::uint64_t, 4> residues() const { return {a11.value(), a12.value(), a21.value(), a22.value()}; }

  Matrix2 operator*(const Matrix2& rhs) const;
  Matrix2 scaled(FieldElement s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }

  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// An element of PGL(2, p), stored in canonical form: the first nonzero entry
/// in reading order is 1, so equal group elements compare equal.
class PglElement {
 public:
  /// Throws Error(kDomain) if det(m) = 0.
  explicit PglElement(const Matrix2& m);

  static PglElement identity(PrimeModulus m) { return PglElement(Matrix2::identity(m)); }

  const Matrix2& matrix() const noexcept { return matrix_; }
  PrimeModulus modulus() const noexcept { return matrix_.modulus(); }
  bool is_identity() const { return matrix_.is_scalar(); }

  PglElement operator*(const PglElement& rhs) const { return PglElement(matrix_ * rhs.matrix_); }
  PglElement inverse() const;

  friend bool operator==(const PglElement&, const PglElement&) = default;

 private:
  Matrix2 matrix_;
};

/// A bijection on the point indices 0 .. p.
class PointPermutation {
 public:
  explicit PointPermutation(std::vector<std::size_t> images);

  static PointPermutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i); }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  /// i -> next(this(i)).
  PointPermutation then(const PointPermutation& next) const;

  /// Disjoint cycles including fixed points; each cycle starts at its smallest
  /// point and cycles are ordered by that point.
  std::vector<std::vector<std::size_t>> cycles() const;
  std::size_t fixed_point_count() const;
  std::uint64_t order() const;

  friend bool operator==(const PointPermutation&, const PointPermutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// Cycle notation with 1-cycles omitted, e.g. "(0,21)(22,inf)"; "()" for the
/// identity.
std::string format_cycles(const PointPermutation& perm, std::uint64_t p);

ProjectivePoint apply_lft(const PglElement& m, const ProjectivePoint& pt);

PointPermutation lft_permutation(const PglElement& m);

/// Smallest n >= 1 with m^n scalar. Throws Error(kOrderOverflow) past p + 1.
std::uint64_t pgl_order(const PglElement& m);

/// (tr XY)^2 / det XY.
FieldElement theta_invariant(const PglElement& x, const PglElement& y);

/// tr^2 / det of a single element; the conjugacy invariant used for class
/// bucketing.
FieldElement trace_ratio(const PglElement& m);

/// Smallest b in [0, p) such that [[0, -1], [1, b]] has PGL order exactly
/// `order`. Throws Error(kNoOrderLElement) if there is none.
FieldElement find_order_trace(PrimeModulus p, std::uint64_t order);

}  // namespace januarial
