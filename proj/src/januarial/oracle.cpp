#include "januarial/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "januarial/construct.hpp"
#include "januarial/diagram.hpp"
#include "januarial/error.hpp"
#include "januarial/pgl2.hpp"

namespace januarial {

namespace oracle {

namespace {

std::uint64_t inv(std::uint64_t a, std::uint64_t q) {
  // q is small here; extended Euclid on signed values.
  std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(q), nr = static_cast<std::int64_t>(a % q);
  while (nr != 0) {
    const std::int64_t quot = r / nr;
    std::tie(t, nt) = std::pair{nt, t - quot * nt};
    std::tie(r, nr) = std::pair{nr, r - quot * nr};
  }
  if (r != 1) throw Error(ErrorCode::kZeroInverse, "no inverse");
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(q) : t);
}

RawMatrix multiply(const RawMatrix& a, const RawMatrix& b, std::uint64_t q) {
  return {(a[0] * b[0] + a[1] * b[2]) % q, (a[0] * b[1] + a[1] * b[3]) % q, (a[2] * b[0] + a[3] * b[2]) % q,
          (a[2] * b[1] + a[3] * b[3]) % q};
}

bool scalar(const RawMatrix& m) { return m[1] == 0 && m[2] == 0 && m[0] == m[3]; }

std::uint64_t det(const RawMatrix& m, std::uint64_t q) { return (m[0] * m[3] % q + q - m[1] * m[2] % q) % q; }

RawMatrix canonical(RawMatrix m, std::uint64_t q) {
  const std::uint64_t lead = m[0] != 0 ? m[0] : m[1];
  const std::uint64_t s = inv(lead, q);
  for (auto& x : m) x = x * s % q;
  return m;
}

std::uint64_t trace_ratio(const RawMatrix& m, std::uint64_t q) {
  const std::uint64_t t = (m[0] + m[3]) % q;
  return t * t % q * inv(det(m, q), q) % q;
}

// Index p stands for infinity.
std::uint64_t act(const RawMatrix& m, std::uint64_t z, std::uint64_t q) {
  if (z == q) return m[2] == 0 ? q : m[0] * inv(m[2], q) % q;
  const std::uint64_t den = (m[2] * z + m[3]) % q;
  if (den == 0) return q;
  return (m[0] * z + m[1]) % q * inv(den, q) % q;
}

std::vector<std::size_t> orbit_sizes(const RawMatrix& m, std::uint64_t q) {
  std::vector<bool> seen(q + 1, false);
  std::vector<std::size_t> sizes;
  for (std::uint64_t start = 0; start <= q; ++start) {
    if (seen[start]) continue;
    std::size_t n = 0;
    for (std::uint64_t z = start; !seen[z]; z = act(m, z, q)) {
      seen[z] = true;
      ++n;
    }
    sizes.push_back(n);
  }
  return sizes;
}

void check_budget(PrimeModulus q, bool force) {
  if (q.value() > kOracleBudget && !force) {
    throw Error(ErrorCode::kSizeLimit, "q = " + std::to_string(q.value()) + " exceeds the enumeration budget of " +
                                           std::to_string(kOracleBudget) + " (use force)");
  }
}

}  // namespace

std::vector<RawMatrix> enumerate_pgl(PrimeModulus modulus, bool force) {
  check_budget(modulus, force);
  const std::uint64_t q = modulus.value();
  std::vector<RawMatrix> out;
  out.reserve(q * q * q - q);
  for (std::uint64_t b = 0; b < q; ++b) {
    for (std::uint64_t c = 0; c < q; ++c) {
      for (std::uint64_t d = 0; d < q; ++d) {
        const RawMatrix m{1, b, c, d};
        if (det(m, q) != 0) out.push_back(m);
      }
    }
  }
  for (std::uint64_t c = 1; c < q; ++c) {
    for (std::uint64_t d = 0; d < q; ++d) out.push_back({0, 1, c, d});
  }
  return out;
}

std::uint64_t element_order(const RawMatrix& m, std::uint64_t q) {
  RawMatrix power = m;
  for (std::uint64_t n = 1; n <= q + 1; ++n) {
    if (scalar(power)) return n;
    power = multiply(power, m, q);
  }
  throw Error(ErrorCode::kOrderOverflow, "no scalar power up to q+1");
}

}  // namespace oracle

using oracle::RawMatrix;

ClassCensus count_classes_of_order(PrimeModulus q, std::uint64_t order, bool force) {
  const auto elements = oracle::enumerate_pgl(q, force);
  std::set<std::uint64_t> buckets;
  std::size_t count = 0;
  for (const auto& m : elements) {
    if (oracle::element_order(m, q.value()) != order) continue;
    ++count;
    buckets.insert(oracle::trace_ratio(m, q.value()));
  }
  return ClassCensus{q, order, count, buckets.size(), {buckets.begin(), buckets.end()}};
}

std::size_t count_classes_by_conjugation(PrimeModulus modulus, std::uint64_t order, bool force) {
  const std::uint64_t q = modulus.value();
  const auto elements = oracle::enumerate_pgl(modulus, force);
  std::vector<RawMatrix> inverses;
  inverses.reserve(elements.size());
  for (const auto& g : elements) {
    inverses.push_back(oracle::canonical({g[3], (q - g[1]) % q, (q - g[2]) % q, g[0]}, q));
  }
  std::set<RawMatrix> assigned;
  std::size_t classes = 0;
  for (const auto& m : elements) {
    if (assigned.contains(m) || oracle::element_order(m, q) != order) continue;
    ++classes;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      assigned.insert(oracle::canonical(oracle::multiply(oracle::multiply(elements[i], m, q), inverses[i], q), q));
    }
  }
  return classes;
}

CyclicOrbitReport cyclic_orbit_check(PrimeModulus modulus) {
  const std::uint64_t q = modulus.value();
  const std::uint64_t k = (q + 1) / 2;
  // Scan canonical elements lazily; an element of order k turns up early.
  for (std::uint64_t b = 0; b < q; ++b) {
    for (std::uint64_t c = 0; c < q; ++c) {
      for (std::uint64_t d = 0; d < q; ++d) {
        const RawMatrix m{1, b, c, d};
        if (oracle::det(m, q) == 0 || oracle::element_order(m, q) != k) continue;
        auto sizes = oracle::orbit_sizes(m, q);
        const bool ok = sizes.size() == 2 && sizes[0] == k && sizes[1] == k;
        return CyclicOrbitReport{ok, m, std::move(sizes)};
      }
    }
  }
  throw Error(ErrorCode::kNotFound, "no element of order (q+1)/2 in PGL(2," + std::to_string(q) + ")");
}

ThetaSet brute_force_thetas(PrimeModulus modulus, std::uint64_t ell, bool force) {
  const std::uint64_t q = modulus.value();
  const std::uint64_t k = (q + 1) / 2;
  const auto elements = oracle::enumerate_pgl(modulus, force);
  std::vector<RawMatrix> xs, ys;
  for (const auto& m : elements) {
    const std::uint64_t n = oracle::element_order(m, q);
    if (n == 2) xs.push_back(m);
    if (n == ell) ys.push_back(m);
  }
  std::set<std::uint64_t> thetas;
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      const RawMatrix xy = oracle::multiply(x, y, q);
      const std::uint64_t theta = oracle::trace_ratio(xy, q);
      if (thetas.contains(theta) || oracle::element_order(xy, q) != k) continue;
      const auto sizes = oracle::orbit_sizes(xy, q);
      if (sizes.size() == 2 && sizes[0] == sizes[1]) thetas.insert(theta);
    }
  }
  ThetaSet out{modulus, k, {}};
  for (std::uint64_t t : thetas) out.values.push_back(FieldElement::from_residue(t, modulus));
  return out;
}

bool OracleReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.passed; });
}

std::string OracleReport::text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  out << (passed() ? "all checks passed" : "verification FAILED") << '\n';
  return out.str();
}

namespace {

std::string join(const std::vector<std::uint64_t>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + std::to_string(values[i]);
  return out + "}";
}

}  // namespace

OracleReport run_verification(PrimeModulus p, std::optional<std::uint64_t> ell, bool force) {
  // Fail fast on the budget before anything else runs.
  if (p.value() > kOracleBudget && !force) oracle::enumerate_pgl(p, force);

  const std::uint64_t k = (p.value() + 1) / 2;
  const std::uint64_t predicted = expected_count(k);
  OracleReport report;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const ClassCensus classes = count_classes_of_order(p, k, force);
  add("conjugacy classes of order (p+1)/2", classes.class_count == predicted,
      std::to_string(classes.class_count) + " classes, expected phi(" + std::to_string(k) + ")/2 = " +
          std::to_string(predicted));

  if (p.value() <= 11) {
    const std::size_t exact = count_classes_by_conjugation(p, k, force);
    add("tr^2/det bucketing matches conjugacy", exact == classes.class_count,
        std::to_string(exact) + " classes by conjugation");
  }

  const CyclicOrbitReport orbits = cyclic_orbit_check(p);
  std::vector<std::uint64_t> sizes(orbits.orbit_sizes.begin(), orbits.orbit_sizes.end());
  add("two equal orbits of a cyclic subgroup of order (p+1)/2", orbits.passed, "orbit sizes " + join(sizes));

  const ThetaSet analytic = januarial_thetas(p);
  add("januarial theta count", analytic.values.size() == predicted,
      "theta " + join(analytic.residues()) + ", expected count " + std::to_string(predicted));

  if (!ell) {
    for (std::uint64_t candidate = 3; candidate <= p.value() && !ell; ++candidate) {
      try {
        find_order_trace(p, candidate);
        ell = candidate;
      } catch (const Error&) {
      }
    }
  }
  if (!ell) {
    add("choose l", false, "no valid l");
    return report;
  }
  const std::string l_text = "l = " + std::to_string(*ell);

  bool ell_valid = *ell >= 3;
  if (ell_valid) {
    try {
      find_order_trace(p, *ell);
    } catch (const Error&) {
      ell_valid = false;
    }
  }
  if (!ell_valid) {
    add("order-l element exists", false, "no determinant-1 element of order " + std::to_string(*ell));
    return report;
  }

  const ThetaSet brute = brute_force_thetas(p, *ell, force);
  add("brute-force theta set equals polynomial route (" + l_text + ")", brute.values == analytic.values,
      "oracle " + join(brute.residues()));

  bool constructed = true;
  bool genus_agree = true;
  std::string detail;
  for (const FieldElement& theta : analytic.values) {
    try {
      const GeneratorPair pair = solve_generators(p, *ell, theta);
      const CosetDiagram d = build_diagram(pair);
      if (!verify_pair(pair).passed() || !is_januarial(d)) {
        constructed = false;
        detail += " theta=" + std::to_string(theta.value()) + " not a januarial;";
      }
      if (d.connected) {
        const GenusBreakdown g = genus_breakdown(d);
        if (g.higman != g.fixedpoint || (g.januarial && *g.januarial != g.higman)) genus_agree = false;
      }
    } catch (const Error& err) {
      constructed = false;
      detail += " theta=" + std::to_string(theta.value()) + ": " + err.what() + ";";
    }
  }
  add("every surviving theta builds a januarial (" + l_text + ")", constructed, detail);
  add("genus formulas agree (" + l_text + ")", genus_agree, "");
  return report;
}

}  // namespace januarial
