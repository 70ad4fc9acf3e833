#include "januarial/pgl2.hpp"

#include <algorithm>
#include <numeric>

#include "januarial/error.hpp"

namespace januarial {

ProjectivePoint ProjectivePoint::from_index(PrimeModulus m, std::uint64_t index) {
  if (index > m.value()) throw Error(ErrorCode::kDomain, "point index out of range");
  return {m, index};
}

FieldElement ProjectivePoint::coordinate() const {
  if (is_infinity()) throw Error(ErrorCode::kDomain, "the point at infinity has no affine coordinate");
  return FieldElement::from_residue(index_, modulus_);
}

std::string point_label(std::uint64_t index, std::uint64_t p) {
  return index == p ? std::string("inf") : std::to_string(index);
}

Matrix2 Matrix2::from_ints(PrimeModulus m, std::int64_t a11, std::int64_t a12, std::int64_t a21, std::int64_t a22) {
  return {FieldElement(a11, m), FieldElement(a12, m), FieldElement(a21, m), FieldElement(a22, m)};
}

Matrix2 Matrix2::identity(PrimeModulus m) { return from_ints(m, 1, 0, 0, 1); }

Matrix2 Matrix2::operator*(const Matrix2& r) const {
  return {a11 * r.a11 + a12 * r.a21, a11 * r.a12 + a12 * r.a22, a21 * r.a11 + a22 * r.a21,
          a21 * r.a12 + a22 * r.a22};
}

PglElement::PglElement(const Matrix2& m) : matrix_(m) {
  if (m.det().is_zero()) throw Error(ErrorCode::kDomain, "singular matrix is not in PGL(2,p)");
  const FieldElement lead = !m.a11.is_zero() ? m.a11 : m.a12;
  matrix_ = m.scaled(field_inverse(lead));
}

PglElement PglElement::inverse() const {
  const Matrix2& m = matrix_;
  return PglElement(Matrix2{m.a22, -m.a12, -m.a21, m.a11});
}

PointPermutation::PointPermutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t img : images_) {
    if (img >= images_.size() || seen[img]) throw Error(ErrorCode::kDomain, "not a permutation");
    seen[img] = true;
  }
}

PointPermutation PointPermutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return PointPermutation(std::move(images));
}

PointPermutation PointPermutation::then(const PointPermutation& next) const {
  if (next.size() != size()) throw Error(ErrorCode::kDomain, "permutation size mismatch");
  std::vector<std::size_t> images(size());
  for (std::size_t i = 0; i < size(); ++i) images[i] = next.images_[images_[i]];
  return PointPermutation(std::move(images));
}

std::vector<std::vector<std::size_t>> PointPermutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t i = start; !seen[i]; i = images_[i]) {
      seen[i] = true;
      cycle.push_back(i);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::size_t PointPermutation::fixed_point_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < size(); ++i) n += images_[i] == i;
  return n;
}

std::uint64_t PointPermutation::order() const {
  std::uint64_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  return result;
}

std::string format_cycles(const PointPermutation& perm, std::uint64_t p) {
  std::string out;
  for (const auto& cycle : perm.cycles()) {
    if (cycle.size() == 1) continue;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ',';
      out += point_label(cycle[i], p);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

ProjectivePoint apply_lft(const PglElement& m, const ProjectivePoint& pt) {
  const Matrix2& a = m.matrix();
  const PrimeModulus mod = m.modulus();
  if (!(pt.modulus() == mod)) throw Error(ErrorCode::kDomain, "point and matrix over different moduli");
  if (pt.is_infinity()) {
    if (a.a21.is_zero()) return ProjectivePoint::infinity(mod);
    return ProjectivePoint::finite(a.a11 / a.a21);
  }
  const FieldElement z = pt.coordinate();
  const FieldElement den = a.a21 * z + a.a22;
  if (den.is_zero()) return ProjectivePoint::infinity(mod);
  return ProjectivePoint::finite((a.a11 * z + a.a12) / den);
}

PointPermutation lft_permutation(const PglElement& m) {
  const PrimeModulus mod = m.modulus();
  const std::uint64_t p = mod.value();
  std::vector<std::size_t> images(p + 1);
  for (std::uint64_t i = 0; i <= p; ++i) {
    images[i] = apply_lft(m, ProjectivePoint::from_index(mod, i)).index();
  }
  return PointPermutation(std::move(images));
}

std::uint64_t pgl_order(const PglElement& m) {
  const std::uint64_t bound = m.modulus().value() + 1;
  Matrix2 power = m.matrix();
  for (std::uint64_t n = 1; n <= bound; ++n) {
    if (power.is_scalar()) return n;
    power = power * m.matrix();
  }
  throw Error(ErrorCode::kOrderOverflow, "no scalar power up to p+1");
}

FieldElement trace_ratio(const PglElement& m) {
  const FieldElement t = m.matrix().trace();
  return t * t / m.matrix().det();
}

FieldElement theta_invariant(const PglElement& x, const PglElement& y) { return trace_ratio(x * y); }

FieldElement find_order_trace(PrimeModulus p, std::uint64_t order) {
  if (order < 2) throw Error(ErrorCode::kDomain, "order must be >= 2");
  for (std::uint64_t b = 0; b < p.value(); ++b) {
    const PglElement companion(Matrix2::from_ints(p, 0, -1, 1, static_cast<std::int64_t>(b)));
    if (pgl_order(companion) == order) return FieldElement::from_residue(b, p);
  }
  throw Error(ErrorCode::kNoOrderLElement,
              "no determinant-1 element of order " + std::to_string(order) + " in PGL(2," +
                  std::to_string(p.value()) + ")");
}

}  // namespace januarial
