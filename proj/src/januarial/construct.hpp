#pragma once

// Backward substitution from a theta value to concrete generators
//
//   X = [[a, c i], [c, -a]],   Y = [[e, f i], [f, b - e]]
//
// with det X = -(a^2 + i c^2) = D != 0, det Y = 1 (1 + i f^2 + e^2 - e b = 0),
// tr XY = r = a(2e - b) + 2 i c f and r^2 = theta D.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "januarial/field.hpp"
#include "januarial/pgl2.hpp"

namespace januarial {

struct ConstructionParams {
  FieldElement i, e, f, b, a, c;
  FieldElement delta;
  FieldElement r;

  Matrix2 x_matrix() const;
  Matrix2 y_matrix() const;
};

struct GeneratorPair {
  PrimeModulus p;
  std::uint64_t ell;
  /// (p + 1) / 2, the product order a januarial needs.
  std::uint64_t k;
  /// Actual PGL order of XY; equals k exactly when theta survives exclusion.
  std::uint64_t xy_order;
  FieldElement theta;
  ConstructionParams params;
  PglElement x, y;
  PointPermutation xperm, yperm, xyperm;
};

/// (1, sqrt theta) when theta is a square, (theta, theta) otherwise.
/// Throws Error(kDomain) for theta = 0.
std::pair<FieldElement, FieldElement> choose_delta_r(FieldElement theta);

/// Deterministic search for a pair realizing theta with y of order ell.
/// Errors: kDomain, kNoOrderLElement, kSearchExhausted, kOrderMismatch.
GeneratorPair solve_generators(PrimeModulus p, std::uint64_t ell, FieldElement theta);

/// Builds a pair from explicit parameters without checking them; run
/// verify_pair on the result.
GeneratorPair assemble_pair(std::uint64_t ell, FieldElement theta, const ConstructionParams& params);

struct PairCheck {
  std::string name;
  bool passed;
};

struct PairReport {
  std::vector<PairCheck> checks;

  bool passed() const;
  /// Names of the failing checks.
  std::vector<std::string> failures() const;
};

PairReport verify_pair(const GeneratorPair& pair);

}  // namespace januarial
