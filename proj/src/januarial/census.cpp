#include "januarial/census.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "januarial/construct.hpp"
#include "januarial/diagram.hpp"
#include "januarial/error.hpp"
#include "januarial/gk.hpp"

namespace januarial {

std::uint64_t Census::total_found() const {
  std::uint64_t n = 0;
  for (const auto& s : primes) n += s.found;
  return n;
}

std::uint64_t Census::total_predicted() const {
  std::uint64_t n = 0;
  for (const auto& s : primes) n += s.ell_valid ? s.predicted : 0;
  return n;
}

bool Census::matches_prediction() const {
  for (const auto& s : primes) {
    if (s.ell_valid && s.found != s.predicted) return false;
  }
  return true;
}

Census enumerate_januarials(PrimeModulus p, std::uint64_t ell) {
  const std::uint64_t k = (p.value() + 1) / 2;
  Census census;
  PrimeSummary summary{p.value(), true, 0, expected_count(k), {}};
  try {
    if (ell < 3) throw Error(ErrorCode::kNoOrderLElement, "l must be >= 3");
    find_order_trace(p, ell);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kNoOrderLElement) throw;
    summary.ell_valid = false;
    summary.note = "p=" + std::to_string(p.value()) + " skipped: no element of order " + std::to_string(ell);
    census.primes.push_back(summary);
    return census;
  }

  for (const FieldElement& theta : januarial_thetas(p).values) {
    const GeneratorPair pair = solve_generators(p, ell, theta);
    const CosetDiagram d = build_diagram(pair);
    if (!is_januarial(d)) continue;
    ++summary.found;
    CensusRow row{p.value(), ell, theta.value(), d.eta_x, d.eta_y, std::nullopt};
    if (d.connected) row.genus = genus_breakdown(d).higman;
    census.rows.push_back(row);
  }
  census.primes.push_back(summary);
  return census;
}

Census sweep_januarials(std::uint64_t pmin, std::uint64_t pmax, std::uint64_t ell) {
  std::vector<std::future<Census>> jobs;
  for (std::uint64_t q = std::max<std::uint64_t>(pmin, 5); q <= pmax; ++q) {
    if (!is_prime(q)) continue;
    jobs.push_back(std::async(std::launch::async, [q, ell] { return enumerate_januarials(PrimeModulus(q), ell); }));
  }
  Census merged;
  for (auto& job : jobs) {
    Census part = job.get();
    merged.rows.insert(merged.rows.end(), part.rows.begin(), part.rows.end());
    merged.primes.insert(merged.primes.end(), part.primes.begin(), part.primes.end());
  }
  return merged;
}

std::string census_csv(const Census& census) {
  std::ostringstream out;
  out << "p,l,theta,eta_x,eta_y,genus\n";
  for (const auto& r : census.rows) {
    out << r.p << ',' << r.ell << ',' << r.theta << ',' << r.eta_x << ',' << r.eta_y << ',';
    if (r.genus) out << *r.genus;
    out << '\n';
  }
  return out.str();
}

std::string census_trailer(const Census& census) {
  std::ostringstream out;
  for (const auto& s : census.primes) {
    if (!s.ell_valid) {
      out << "# " << s.note << '\n';
    } else if (s.found != s.predicted) {
      out << "# p=" << s.p << " MISMATCH: found " << s.found << ", predicted " << s.predicted << '\n';
    }
  }
  out << "# total=" << census.total_found() << ", predicted=" << census.total_predicted()
      << (census.matches_prediction() ? ", ok" : ", MISMATCH") << '\n';
  return out.str();
}

}  // namespace januarial
