#pragma once

// The polynomials g_k(theta) whose vanishing at theta = (tr XY)^2 / det XY is
// equivalent to (XY)^k being scalar, and the theta values that give
// januarials on PL(F_p).
//
// (XY)^k = U_k(r, D) XY - D U_{k-1}(r, D) I with
//   U_k = sum_j (-1)^j C(k-1-j, j) r^(k-1-2j) D^j,  r = tr XY, D = det XY.
// Substituting r^2 = theta D (and dropping the factor r when k is even) leaves
//   g_k(theta) = sum_j (-1)^j C(k-1-j, j) theta^(deg-j),
// deg = (k-1)/2 for odd k and k/2 - 1 for even k.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "januarial/field.hpp"

namespace januarial {

/// Largest k whose signed coefficients are kept as exact 64-bit integers.
inline constexpr std::uint64_t kMaxExactGkDegreeIndex = 64;

std::uint64_t gk_degree(std::uint64_t k);

struct GkPolynomial {
  std::uint64_t k;
  /// Descending powers of theta; index 0 is the leading coefficient.
  std::vector<std::int64_t> coefficients;

  std::uint64_t degree() const { return coefficients.size() - 1; }
};

/// Exact integer coefficients, 1 <= k <= 64.
GkPolynomial gk_coefficients(std::uint64_t k);

/// Coefficients reduced mod p, computed from factorials mod p. Requires
/// k - 1 < p so that no factorial vanishes.
std::vector<FieldElement> gk_coefficients_mod(std::uint64_t k, PrimeModulus p);

/// "θ^7 - 14θ^6 + ... - 8".
std::string format_gk(const GkPolynomial& poly);

struct ThetaSet {
  PrimeModulus modulus;
  std::uint64_t k;
  std::vector<FieldElement> values;  // sorted, distinct

  bool contains(FieldElement theta) const;
  std::vector<std::uint64_t> residues() const;
};

FieldElement evaluate(std::span<const FieldElement> coefficients, FieldElement theta);

/// All roots in F_p by exhaustive Horner evaluation. Requires deg < p.
ThetaSet find_roots(std::uint64_t k, std::span<const FieldElement> coefficients, PrimeModulus p);
ThetaSet find_roots(const GkPolynomial& poly, PrimeModulus p);

/// Roots of g_k mod p (choosing the exact or modular coefficient route).
ThetaSet gk_roots(std::uint64_t k, PrimeModulus p);

/// True when g_k has deg(g_k) distinct roots in F_p.
bool gk_splits(std::uint64_t k, PrimeModulus p);

/// Roots of g_k, k = (p+1)/2, minus the roots of g_{k/q} for every prime
/// q | k. Throws Error(kSplitting) if g_k fails to split into distinct roots.
ThetaSet januarial_thetas(PrimeModulus p);

/// phi(k) / 2. Throws Error(kDomain) for k < 3.
std::uint64_t expected_count(std::uint64_t k);

}  // namespace januarial
