#pragma once

// Januarial census over one prime or a range of primes, with the CSV layout
//   p,l,theta,eta_x,eta_y,genus
// one row per januarial, sorted by (p, l, theta).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "januarial/field.hpp"

namespace januarial {

struct CensusRow {
  std::uint64_t p;
  std::uint64_t ell;
  std::uint64_t theta;
  std::uint64_t eta_x;
  std::uint64_t eta_y;
  std::optional<std::int64_t> genus;  // empty for a disconnected diagram
};

struct PrimeSummary {
  std::uint64_t p;
  bool ell_valid;
  std::uint64_t found;
  std::uint64_t predicted;
  std::string note;
};

struct Census {
  std::vector<CensusRow> rows;
  std::vector<PrimeSummary> primes;

  std::uint64_t total_found() const;
  std::uint64_t total_predicted() const;
  /// Every prime with a valid l produced phi((p+1)/2)/2 januarials.
  bool matches_prediction() const;
};

Census enumerate_januarials(PrimeModulus p, std::uint64_t ell);

/// All primes 5 <= p in [pmin, pmax]; primes are processed concurrently and
/// merged in ascending order.
Census sweep_januarials(std::uint64_t pmin, std::uint64_t pmax, std::uint64_t ell);

std::string census_csv(const Census& census);

/// "# total=..., predicted=..." plus one note line per skipped prime.
std::string census_trailer(const Census& census);

}  // namespace januarial
