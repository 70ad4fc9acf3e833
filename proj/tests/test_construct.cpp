#include <algorithm>
#include <functional>

#include "doctest.h"
#include "januarial/construct.hpp"
#include "januarial/error.hpp"
#include "januarial/gk.hpp"
#include "test_support.hpp"

using namespace januarial;

namespace {

const PrimeModulus k31(31);

FieldElement f31(std::int64_t v) { return FieldElement(v, k31); }

ConstructionParams reference_params() {
  return ConstructionParams{f31(3), f31(0), f31(14), f31(8), f31(3), f31(10), f31(1), f31(10)};
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kDomain;
}

bool has_failure(const PairReport& report, const std::string& name) {
  const auto f = report.failures();
  return std::find(f.begin(), f.end(), name) != f.end();
}

}  // namespace

TEST_CASE("choose_delta_r") {
  const auto [d7, r7] = choose_delta_r(f31(7));
  CHECK(d7.value() == 1);
  CHECK(r7.value() == 10);  // 10^2 = 100 = 7 mod 31, smaller root

  const auto [d3, r3] = choose_delta_r(f31(3));  // 3 is a non-residue mod 31
  CHECK(d3.value() == 3);
  CHECK(r3.value() == 3);

  CHECK_THROWS_AS(choose_delta_r(f31(0)), Error);
}

TEST_CASE("reference parameters pass every check") {
  const GeneratorPair pair = assemble_pair(4, f31(7), reference_params());
  const PairReport report = verify_pair(pair);
  CHECK(report.passed());
  CHECK(report.failures().empty());
  CHECK(pair.x == testing::example_x());
  CHECK(pair.y == testing::example_y());
  CHECK(pair.xy_order == 16);
}

TEST_CASE("solve_generators reproduces the reference pair for (31, 4, 7)") {
  const GeneratorPair pair = solve_generators(k31, 4, f31(7));
  CHECK(pair.params.i.value() == 3);
  CHECK(pair.params.e.value() == 0);
  CHECK(pair.params.f.value() == 14);
  CHECK(pair.params.b.value() == 8);
  CHECK(pair.params.a.value() == 3);
  CHECK(pair.params.c.value() == 10);
  CHECK(pair.params.delta.value() == 1);
  CHECK(pair.params.r.value() == 10);
  CHECK(pair.x == testing::example_x());
  CHECK(pair.y == testing::example_y());
  CHECK(pair.k == 16);
  CHECK(pair.xy_order == 16);

  const GeneratorPair again = solve_generators(k31, 4, f31(7));
  CHECK(again.xperm == pair.xperm);
  CHECK(again.yperm == pair.yperm);
}

TEST_CASE("theta = 2 is a root of g_8 and gives xy of order 4") {
  const GeneratorPair pair = solve_generators(k31, 4, f31(2));
  CHECK(pair.xy_order == 4);
  CHECK(verify_pair(pair).passed());
}

TEST_CASE("verify_pair detects broken pairs") {
  GeneratorPair pair = assemble_pair(4, f31(7), reference_params());
  pair.x = PglElement::identity(k31);
  pair.xperm = lft_permutation(pair.x);
  const PairReport report = verify_pair(pair);
  CHECK_FALSE(report.passed());
  CHECK(has_failure(report, "order(X) = 2"));

  ConstructionParams params = reference_params();
  params.b = params.b + FieldElement::one(k31);
  GeneratorPair bent = assemble_pair(4, f31(7), params);
  const PairReport bent_report = verify_pair(bent);
  CHECK_FALSE(bent_report.passed());
  CHECK((has_failure(bent_report, "order(Y) = l") || has_failure(bent_report, "det Y = 1")));
}

TEST_CASE("solve_generators errors") {
  CHECK(code_of([] { solve_generators(k31, 2, f31(7)); }) == ErrorCode::kDomain);
  CHECK(code_of([] { solve_generators(k31, 7, f31(7)); }) == ErrorCode::kNoOrderLElement);
  CHECK(code_of([] { solve_generators(k31, 4, f31(0)); }) == ErrorCode::kDomain);
}

TEST_CASE("every root of g_k is realized for every valid l") {
  for (std::uint64_t p : testing::primes_between(5, 61)) {
    const PrimeModulus m(p);
    const std::uint64_t k = (p + 1) / 2;
    for (std::uint64_t ell = 3; ell <= 12; ++ell) {
      try {
        find_order_trace(m, ell);
      } catch (const Error&) {
        continue;
      }
      for (const auto& theta : gk_roots(k, m).values) {
        const GeneratorPair pair = solve_generators(m, ell, theta);
        REQUIRE(verify_pair(pair).passed());
        CHECK(k % pair.xy_order == 0);
        CHECK(theta_invariant(pair.x, pair.y) == theta);
      }
    }
  }
}
