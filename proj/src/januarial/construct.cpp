#include "januarial/construct.hpp"

#include <algorithm>
#include <optional>

#include "januarial/error.hpp"

namespace januarial {

namespace {

struct LinearQuadraticSolution {
  FieldElement a, c;
};

// Solves a*u + c*v = r together with a^2 + i*c^2 = -delta, returning the
// solution with the smallest c (then smallest a).
std::optional<LinearQuadraticSolution> solve_a_c(FieldElement u, FieldElement v, FieldElement r, FieldElement i,
                                                 FieldElement delta) {
  const PrimeModulus m = u.modulus();
  const FieldElement two = FieldElement::from_residue(2, m);

  if (u.is_zero()) {
    if (v.is_zero()) return std::nullopt;
    const FieldElement c = r / v;
    const auto a = sqrt_mod_p(-delta - i * c * c);
    if (!a) return std::nullopt;
    return LinearQuadraticSolution{a->first, c};
  }

  // Substituting a = (r - v c) / u:  (v^2 + i u^2) c^2 - 2 r v c + (r^2 + delta u^2) = 0.
  const FieldElement qa = v * v + i * u * u;
  const FieldElement qb = -(two * r * v);
  const FieldElement qc = r * r + delta * u * u;

  std::optional<FieldElement> c;
  if (qa.is_zero()) {
    if (!qb.is_zero()) {
      c = -qc / qb;
    } else if (qc.is_zero()) {
      c = FieldElement::zero(m);
    }
  } else {
    const auto root = sqrt_mod_p(qb * qb - FieldElement::from_residue(4, m) * qa * qc);
    if (root) {
      const FieldElement c1 = (-qb + root->first) / (two * qa);
      const FieldElement c2 = (-qb + root->second) / (two * qa);
      c = std::min(c1, c2);
    }
  }
  if (!c) return std::nullopt;
  return LinearQuadraticSolution{(r - v * *c) / u, *c};
}

}  // namespace

Matrix2 ConstructionParams::x_matrix() const { return {a, c * i, c, -a}; }

Matrix2 ConstructionParams::y_matrix() const { return {e, f * i, f, b - e}; }

std::pair<FieldElement, FieldElement> choose_delta_r(FieldElement theta) {
  if (theta.is_zero()) throw Error(ErrorCode::kDomain, "theta = 0 is the degenerate order-2 case");
  if (const auto root = sqrt_mod_p(theta)) return {FieldElement::one(theta.modulus()), root->first};
  return {theta, theta};
}

GeneratorPair assemble_pair(std::uint64_t ell, FieldElement theta, const ConstructionParams& params) {
  const PrimeModulus p = theta.modulus();
  const PglElement x(params.x_matrix());
  const PglElement y(params.y_matrix());
  PointPermutation xperm = lft_permutation(x);
  PointPermutation yperm = lft_permutation(y);
  PointPermutation xyperm = xperm.then(yperm);
  return GeneratorPair{p,
                       ell,
                       (p.value() + 1) / 2,
                       pgl_order(x * y),
                       theta,
                       params,
                       x,
                       y,
                       std::move(xperm),
                       std::move(yperm),
                       std::move(xyperm)};
}

GeneratorPair solve_generators(PrimeModulus p, std::uint64_t ell, FieldElement theta) {
  if (ell < 3) throw Error(ErrorCode::kDomain, "l must be >= 3");
  if (!(theta.modulus() == p)) throw Error(ErrorCode::kDomain, "theta is over a different modulus");
  const auto [delta, r] = choose_delta_r(theta);
  const FieldElement b = find_order_trace(p, ell);
  const FieldElement one = FieldElement::one(p);
  const FieldElement two = FieldElement::from_residue(2, p);

  for (std::uint64_t iv = 1; iv < p.value(); ++iv) {
    const FieldElement i = FieldElement::from_residue(iv, p);
    const FieldElement i_inv = field_inverse(i);
    for (std::uint64_t ev = 0; ev < p.value(); ++ev) {
      const FieldElement e = FieldElement::from_residue(ev, p);
      const auto f_roots = sqrt_mod_p((e * b - e * e - one) * i_inv);
      if (!f_roots) continue;
      const FieldElement f = f_roots->first;
      // Y = +-I when b = +-2; it has order 1 there, not ell.
      if (f.is_zero() && two * e == b) continue;

      const auto solution = solve_a_c(two * e - b, two * i * f, r, i, delta);
      if (!solution) continue;

      const ConstructionParams params{i, e, f, b, solution->a, solution->c, delta, r};
      GeneratorPair pair = assemble_pair(ell, theta, params);
      const PairReport report = verify_pair(pair);
      if (!report.passed()) {
        std::string failed;
        for (const auto& name : report.failures()) failed += " [" + name + "]";
        throw Error(ErrorCode::kOrderMismatch, "constructed pair failed verification:" + failed);
      }
      return pair;
    }
  }
  throw Error(ErrorCode::kSearchExhausted, "no (i, e, f, a, c) realizes theta = " + std::to_string(theta.value()) +
                                               " with l = " + std::to_string(ell) + " mod " +
                                               std::to_string(p.value()));
}

bool PairReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const PairCheck& c) { return c.passed; });
}

std::vector<std::string> PairReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

PairReport verify_pair(const GeneratorPair& pair) {
  const ConstructionParams& q = pair.params;
  const FieldElement one = FieldElement::one(pair.p);
  const FieldElement two = FieldElement::from_residue(2, pair.p);
  PairReport report;
  auto check = [&](std::string name, auto&& predicate) {
    bool ok = false;
    try {
      ok = predicate();
    } catch (const Error&) {
      ok = false;
    }
    report.checks.push_back({std::move(name), ok});
  };

  check("i != 0", [&] { return !q.i.is_zero(); });
  check("det X = delta != 0", [&] { return !q.delta.is_zero() && -(q.a * q.a + q.i * q.c * q.c) == q.delta; });
  check("det Y = 1", [&] { return (one + q.i * q.f * q.f + q.e * q.e - q.e * q.b).is_zero(); });
  check("trace XY = r", [&] { return q.a * (two * q.e - q.b) + two * q.i * q.c * q.f == q.r; });
  check("r^2 = theta * delta", [&] { return q.r * q.r == pair.theta * q.delta; });
  check("X matches params", [&] { return PglElement(q.x_matrix()) == pair.x; });
  check("Y matches params", [&] { return PglElement(q.y_matrix()) == pair.y; });
  check("order(X) = 2", [&] { return pgl_order(pair.x) == 2; });
  check("order(Y) = l", [&] { return pgl_order(pair.y) == pair.ell; });
  check("order(XY) = xy_order", [&] { return pgl_order(pair.x * pair.y) == pair.xy_order; });
  check("theta(X, Y) = theta", [&] { return theta_invariant(pair.x, pair.y) == pair.theta; });
  check("permutations match matrices", [&] {
    return pair.xperm == lft_permutation(pair.x) && pair.yperm == lft_permutation(pair.y) &&
           pair.xyperm == pair.xperm.then(pair.yperm);
  });
  return report;
}

}  // namespace januarial
