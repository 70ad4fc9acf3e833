#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "januarial/field.hpp"
#include "januarial/pgl2.hpp"

namespace januarial::testing {

inline std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    if (prime) out.push_back(n);
  }
  return out;
}

inline PglElement random_pgl(PrimeModulus p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, p.value() - 1);
  for (;;) {
    Matrix2 m{FieldElement::from_residue(dist(rng), p), FieldElement::from_residue(dist(rng), p),
              FieldElement::from_residue(dist(rng), p), FieldElement::from_residue(dist(rng), p)};
    if (!m.det().is_zero()) return PglElement(m);
  }
}

/// Reference generators for the p = 31, l = 4, theta = 7 example.
inline PglElement example_x() { return PglElement(Matrix2::from_ints(PrimeModulus(31), 3, 30, 10, -3)); }
inline PglElement example_y() { return PglElement(Matrix2::from_ints(PrimeModulus(31), 0, 42, 14, 8)); }

}  // namespace januarial::testing
