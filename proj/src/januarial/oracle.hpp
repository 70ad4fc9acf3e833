#pragma once

// Brute-force cross-checks over all of PGL(2, q). Everything here works on
// raw residues with its own matrix arithmetic, so it shares no code path with
// the polynomial route it is meant to check.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "januarial/field.hpp"
#include "januarial/gk.hpp"

namespace januarial {

/// Largest q enumerated without an explicit override.
inline constexpr std::uint64_t kOracleBudget = 64;

namespace oracle {

/// Entries in reading order, canonical (first nonzero entry is 1).
using RawMatrix = std::array<std::uint64_t, 4>;

/// All q^3 - q elements of PGL(2, q). Throws Error(kSizeLimit) above the
/// budget unless `force`.
std::vector<RawMatrix> enumerate_pgl(PrimeModulus q, bool force = false);

std::uint64_t element_order(const RawMatrix& m, std::uint64_t q);

}  // namespace oracle

struct ClassCensus {
  PrimeModulus q;
  std::uint64_t order;
  std::size_t element_count;
  std::size_t class_count;
  std::vector<std::uint64_t> class_invariants;  // sorted tr^2/det values
};

/// Buckets the elements of the given order by tr^2/det.
ClassCensus count_classes_of_order(PrimeModulus q, std::uint64_t order, bool force = false);

/// Exact conjugacy-class count by orbit computation; O(|G|) per class.
std::size_t count_classes_by_conjugation(PrimeModulus q, std::uint64_t order, bool force = false);

struct CyclicOrbitReport {
  bool passed;
  oracle::RawMatrix generator;
  std::vector<std::size_t> orbit_sizes;
};

/// Orbits of <z> on PL(F_q) for the first element z of order (q+1)/2.
/// Throws Error(kNotFound) if no such element exists.
CyclicOrbitReport cyclic_orbit_check(PrimeModulus q);

/// theta(x, y) over all pairs with orders (2, l) whose product has order
/// exactly (p+1)/2 and two equal <xy>-orbits.
ThetaSet brute_force_thetas(PrimeModulus p, std::uint64_t ell, bool force = false);

struct OracleCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct OracleReport {
  std::vector<OracleCheck> checks;

  bool passed() const;
  std::string text() const;
};

/// Every oracle check for p plus analytic/oracle agreement for l. When `ell`
/// is empty the smallest l >= 3 with a determinant-1 element of order l is
/// used.
OracleReport run_verification(PrimeModulus p, std::optional<std::uint64_t> ell, bool force = false);

}  // namespace januarial
