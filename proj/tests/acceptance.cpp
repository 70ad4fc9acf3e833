// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Reference values are frozen below; goldens live in JANUARIAL_GOLDEN_DIR.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "januarial/diagram.hpp"
#include "januarial/error.hpp"
#include "januarial/gk.hpp"
#include "januarial/oracle.hpp"

using namespace januarial;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

bool valid_ell(PrimeModulus p, std::uint64_t ell) {
  try {
    find_order_trace(p, ell);
    return true;
  } catch (const Error&) {
    return false;
  }
}

GeneratorPair make(std::uint64_t p, std::uint64_t ell, std::uint64_t theta) {
  const PrimeModulus m(p);
  return solve_generators(m, ell, FieldElement::from_residue(theta, m));
}

// Rotates each cycle to start at its smallest point, then sorts the cycles.
std::vector<std::vector<std::size_t>> normalize(std::vector<std::vector<std::size_t>> cycles) {
  std::vector<std::vector<std::size_t>> out;
  for (auto& c : cycles) {
    if (c.size() < 2) continue;
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome polynomial_fixture() {
  Outcome o;
  o.expect(gk_coefficients(16).coefficients == std::vector<std::int64_t>{1, -14, 78, -220, 330, -252, 84, -8},
           "g_16 coefficients differ");
  return o;
}

Outcome theta_fixture() {
  Outcome o;
  const ThetaSet t = januarial_thetas(PrimeModulus(31));
  o.expect(t.residues() == std::vector<std::uint64_t>{7, 16, 19, 28}, "theta set differs");
  o.expect(t.values.size() == euler_phi(16) / 2, "count differs from phi(16)/2");
  return o;
}

Outcome end_to_end() {
  Outcome o;
  const CosetDiagram d = build_diagram(make(31, 4, 7));
  o.expect(d.xy_orbits.size() == 2 && d.xy_orbits[0].size() == 16 && d.xy_orbits[1].size() == 16,
           "xy orbits are not 2 x 16");
  o.expect(d.eta_x == 0 && d.eta_y == 0 && d.eta_xy == 0, "nonzero fixed points");
  const GenusBreakdown g = genus_breakdown(d);
  o.expect(g.higman == 4, "higman genus " + std::to_string(g.higman));
  o.expect(g.fixedpoint == 4, "fixed-point genus " + std::to_string(g.fixedpoint));
  o.expect(g.januarial == std::optional<std::int64_t>(4), "januarial genus missing or wrong");
  return o;
}

Outcome reference_matrices() {
  Outcome o;
  const PrimeModulus m(31);
  const PglElement x(Matrix2::from_ints(m, 3, 30, 10, -3));
  const PglElement y(Matrix2::from_ints(m, 0, 42, 14, 8));
  constexpr std::size_t inf = 31;
  const std::vector<std::vector<std::size_t>> x_listing{
      {0, 21}, {1, 18},  {2, 24},  {3, 29},  {4, 7},   {5, 28},  {6, 9},   {8, 16},
      {10, 15}, {11, 20}, {12, 26}, {13, 23}, {14, 27}, {17, 30}, {19, 25}, {22, inf}};
  const std::vector<std::vector<std::size_t>> y_listing{{0, 13, 26, inf}, {1, 16, 9, 29},   {2, 27, 3, 12},
                                                        {4, 21, 18, 19},  {5, 22, 7, 8},    {6, 20, 15, 11},
                                                        {10, 25, 28, 17}, {14, 23, 30, 24}};
  const std::vector<std::vector<std::size_t>> xy_listing{
      {0, 18, 16, 5, 17, 24, 27, 23, 26, 2, 14, 3, 1, 19, 28, 22},
      {inf, 7, 21, 13, 30, 10, 11, 15, 25, 4, 8, 9, 20, 6, 29, 12}};
  const PointPermutation xp = lft_permutation(x);
  const PointPermutation yp = lft_permutation(y);
  o.expect(normalize(xp.cycles()) == normalize(x_listing), "x cycles differ");
  o.expect(normalize(yp.cycles()) == normalize(y_listing), "y cycles differ");
  o.expect(normalize(xp.then(yp).cycles()) == normalize(xy_listing), "xy cycles differ");
  o.expect(theta_invariant(x, y).value() == 7, "theta is not 7");
  return o;
}

Outcome count_property() {
  Outcome o;
  std::size_t diagrams = 0;
  for (std::uint64_t p = 5; p <= 199; p += 2) {
    if (!is_prime(p)) continue;
    const PrimeModulus m(p);
    const std::uint64_t k = (p + 1) / 2;
    const ThetaSet thetas = januarial_thetas(m);
    o.expect(thetas.values.size() == euler_phi(k) / 2, "count mismatch at p=" + std::to_string(p));
    for (std::uint64_t ell = 3; ell <= 12; ++ell) {
      if (!valid_ell(m, ell)) continue;
      for (const auto& theta : thetas.values) {
        const CosetDiagram d = build_diagram(solve_generators(m, ell, theta));
        ++diagrams;
        o.expect(is_januarial(d), "not a januarial: p=" + std::to_string(p) + " l=" + std::to_string(ell) +
                                      " theta=" + std::to_string(theta.value()));
      }
    }
  }
  if (o.ok) o.detail = std::to_string(diagrams) + " diagrams, l in [3, 12]";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> cases{{5, 3}, {7, 3}, {7, 4}, {11, 3}, {13, 3}, {31, 4}};
  for (const auto& [p, ell] : cases) {
    const PrimeModulus m(p);
    o.expect(brute_force_thetas(m, ell).residues() == januarial_thetas(m).residues(),
             "theta sets differ at p=" + std::to_string(p) + " l=" + std::to_string(ell));
  }
  for (std::uint64_t q : {5ULL, 7ULL, 11ULL, 19ULL, 23ULL, 31ULL}) {
    const PrimeModulus m(q);
    const std::uint64_t k = (q + 1) / 2;
    o.expect(count_classes_of_order(m, k).class_count == euler_phi(k) / 2,
             "class count differs at q=" + std::to_string(q));
    o.expect(cyclic_orbit_check(m).passed, "cyclic orbits fail at q=" + std::to_string(q));
  }
  return o;
}

Outcome genus_agreement() {
  Outcome o;
  std::size_t connected = 0, skipped = 0;
  for (std::uint64_t p = 5; p <= 61; p += 2) {
    if (!is_prime(p)) continue;
    const PrimeModulus m(p);
    for (std::uint64_t ell = 3; ell <= 12; ++ell) {
      if (!valid_ell(m, ell)) continue;
      for (const auto& theta : gk_roots((p + 1) / 2, m).values) {
        const CosetDiagram d = build_diagram(solve_generators(m, ell, theta));
        if (!d.connected) {
          ++skipped;
          continue;
        }
        ++connected;
        const std::string at = " at p=" + std::to_string(p) + " l=" + std::to_string(ell) +
                               " theta=" + std::to_string(theta.value());
        try {
          const GenusBreakdown g = genus_breakdown(d);
          o.expect(g.higman >= 0, "negative genus" + at);
          o.expect(g.higman == g.fixedpoint, "higman != fixed-point" + at);
          if (is_januarial(d)) o.expect(g.januarial == std::optional<std::int64_t>(g.higman), "januarial differs" + at);
        } catch (const Error& err) {
          o.expect(false, std::string(err.what()) + at);
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(connected) + " connected, " + std::to_string(skipped) + " disconnected skipped";
  return o;
}

Outcome sub_root_law() {
  Outcome o;
  std::size_t primes = 0;
  for (std::uint64_t p = 5; p <= 399; p += 2) {
    if (!is_prime(p)) continue;
    ++primes;
    const PrimeModulus m(p);
    const std::uint64_t k = (p + 1) / 2;
    const ThetaSet top = gk_roots(k, m);
    o.expect(top.values.size() == gk_degree(k), "g_k does not split at p=" + std::to_string(p));
    for (std::uint64_t d : divisors(k)) {
      for (const auto& theta : gk_roots(k / d, m).values) {
        o.expect(top.contains(theta), "root of g_" + std::to_string(k / d) + " missing at p=" + std::to_string(p));
      }
    }
  }
  if (o.ok) o.detail = std::to_string(primes) + " primes, k <= 200";
  return o;
}

Outcome export_stability() {
  Outcome o;
  const GeneratorPair pair = make(31, 4, 7);
  const CosetDiagram d = build_diagram(pair);
  const std::string dir = JANUARIAL_GOLDEN_DIR;
  const std::string dot = read_file(dir + "/D_7_31_4.dot");
  const std::string json = read_file(dir + "/D_7_31_4.json");
  o.expect(!dot.empty() && !json.empty(), "golden files missing in " + dir);
  o.expect(export_dot(d) == dot, "DOT differs from golden");
  o.expect(export_json(d, pair) == json, "JSON differs from golden");
  o.expect(export_dot(build_diagram(make(31, 4, 7))) == export_dot(d), "DOT not reproducible");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"polynomial fixture g_16", polynomial_fixture},
      {"theta enumeration fixture p=31", theta_fixture},
      {"end-to-end D(7,31,4)", end_to_end},
      {"reference matrices and permutations", reference_matrices},
      {"count property 5 <= p <= 199", count_property},
      {"oracle equivalence", oracle_equivalence},
      {"genus formula agreement p <= 61", genus_agreement},
      {"sub-root and splitting law", sub_root_law},
      {"export stability (31,4,7)", export_stability},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    failures += !outcome.ok;
    std::printf("%s %d %s (%.1f ms)%s%s\n", outcome.ok ? "PASS" : "FAIL", index, name.c_str(), ms,
                outcome.detail.empty() ? "" : ": ", outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
