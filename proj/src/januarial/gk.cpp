#include "januarial/gk.hpp"

#include <algorithm>
#include <cstdlib>

#include "januarial/error.hpp"

namespace januarial {

namespace {

std::int64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
  return static_cast<std::int64_t>(acc);
}

}  // namespace

std::uint64_t gk_degree(std::uint64_t k) {
  if (k == 0) throw Error(ErrorCode::kDomain, "k must be >= 1");
  return k % 2 == 1 ? (k - 1) / 2 : k / 2 - 1;
}

GkPolynomial gk_coefficients(std::uint64_t k) {
  if (k == 0 || k > kMaxExactGkDegreeIndex) {
    throw Error(ErrorCode::kDomain, "exact g_k coefficients need 1 <= k <= 64; use a modulus for larger k");
  }
  GkPolynomial poly{k, {}};
  const std::uint64_t deg = gk_degree(k);
  for (std::uint64_t j = 0; j <= deg; ++j) {
    const std::int64_t c = binomial(k - 1 - j, j);
    poly.coefficients.push_back(j % 2 == 0 ? c : -c);
  }
  return poly;
}

std::vector<FieldElement> gk_coefficients_mod(std::uint64_t k, PrimeModulus p) {
  if (k == 0) throw Error(ErrorCode::kDomain, "k must be >= 1");
  if (k - 1 >= p.value()) throw Error(ErrorCode::kDomain, "modular g_k coefficients need k - 1 < p");

  std::vector<FieldElement> factorial{FieldElement::one(p)};
  for (std::uint64_t n = 1; n < k; ++n) factorial.push_back(factorial.back() * FieldElement::from_residue(n, p));

  std::vector<FieldElement> out;
  const std::uint64_t deg = gk_degree(k);
  for (std::uint64_t j = 0; j <= deg; ++j) {
    const std::uint64_t n = k - 1 - j;
    const FieldElement c = factorial[n] / (factorial[j] * factorial[n - j]);
    out.push_back(j % 2 == 0 ? c : -c);
  }
  return out;
}

std::string format_gk(const GkPolynomial& poly) {
  const std::uint64_t deg = poly.degree();
  if (deg == 0) return std::to_string(poly.coefficients.front());
  std::string out;
  for (std::uint64_t j = 0; j <= deg; ++j) {
    const std::int64_t c = poly.coefficients[j];
    const std::uint64_t power = deg - j;
    const std::uint64_t magnitude = static_cast<std::uint64_t>(std::llabs(c));
    if (j == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (magnitude != 1 || power == 0) out += std::to_string(magnitude);
    if (power >= 1) out += "θ";
    if (power >= 2) out += "^" + std::to_string(power);
  }
  return out;
}

bool ThetaSet::contains(FieldElement theta) const {
  return std::binary_search(values.begin(), values.end(), theta);
}

std::vector<std::uint64_t> ThetaSet::residues() const {
  std::vector<std::uint64_t> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.value());
  return out;
}

FieldElement evaluate(std::span<const FieldElement> coefficients, FieldElement theta) {
  FieldElement acc = FieldElement::zero(theta.modulus());
  for (const FieldElement& c : coefficients) acc = acc * theta + c;
  return acc;
}

ThetaSet find_roots(std::uint64_t k, std::span<const FieldElement> coefficients, PrimeModulus p) {
  if (coefficients.empty()) throw Error(ErrorCode::kDomain, "empty polynomial");
  if (coefficients.size() - 1 >= p.value()) throw Error(ErrorCode::kDomain, "root scan needs deg < p");
  ThetaSet roots{p, k, {}};
  for (std::uint64_t t = 0; t < p.value(); ++t) {
    const FieldElement theta = FieldElement::from_residue(t, p);
    if (evaluate(coefficients, theta).is_zero()) roots.values.push_back(theta);
  }
  return roots;
}

ThetaSet find_roots(const GkPolynomial& poly, PrimeModulus p) {
  std::vector<FieldElement> reduced;
  reduced.reserve(poly.coefficients.size());
  for (std::int64_t c : poly.coefficients) reduced.emplace_back(c, p);
  return find_roots(poly.k, reduced, p);
}

ThetaSet gk_roots(std::uint64_t k, PrimeModulus p) {
  if (k - 1 < p.value()) return find_roots(k, gk_coefficients_mod(k, p), p);
  return find_roots(gk_coefficients(k), p);
}

bool gk_splits(std::uint64_t k, PrimeModulus p) { return gk_roots(k, p).values.size() == gk_degree(k); }

ThetaSet januarial_thetas(PrimeModulus p) {
  const std::uint64_t k = (p.value() + 1) / 2;
  ThetaSet result = gk_roots(k, p);
  if (result.values.size() != gk_degree(k)) {
    throw Error(ErrorCode::kSplitting, "g_" + std::to_string(k) + " does not split into distinct roots mod " +
                                           std::to_string(p.value()));
  }
  for (std::uint64_t sub : maximal_proper_divisors(k)) {
    const ThetaSet excluded = gk_roots(sub, p);
    std::erase_if(result.values, [&](FieldElement t) { return excluded.contains(t); });
  }
  return result;
}

std::uint64_t expected_count(std::uint64_t k) {
  if (k < 3) throw Error(ErrorCode::kDomain, "expected_count needs k >= 3 (phi(k)/2 is not integral below)");
  return euler_phi(k) / 2;
}

}  // namespace januarial
