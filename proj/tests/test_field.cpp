#include <numeric>

#include "doctest.h"
#include "januarial/error.hpp"
#include "januarial/field.hpp"
#include "test_support.hpp"

using namespace januarial;

namespace {

FieldElement fe(std::int64_t v, std::uint64_t p) { return FieldElement(v, PrimeModulus(p)); }

}  // namespace

TEST_CASE("prime modulus validation") {
  CHECK_NOTHROW(PrimeModulus(5));
  CHECK_NOTHROW(PrimeModulus(31));
  for (std::uint64_t bad : {0ULL, 1ULL, 2ULL, 3ULL, 4ULL, 9ULL, 15ULL, 961ULL}) {
    CHECK_THROWS_AS(PrimeModulus{bad}, Error);
  }
}

TEST_CASE("is_prime matches trial division and known large primes") {
  const auto primes = testing::primes_between(0, 10000);
  std::size_t idx = 0;
  for (std::uint64_t n = 0; n <= 10000; ++n) {
    const bool expected = idx < primes.size() && primes[idx] == n;
    if (expected) ++idx;
    CHECK(is_prime(n) == expected);
  }
  CHECK(is_prime((1ULL << 61) - 1));
  CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  CHECK_FALSE(is_prime(3215031751ULL));      // strong pseudoprime to 2, 3, 5, 7
  CHECK_FALSE(is_prime(1ULL << 62));
}

TEST_CASE("canonical residues") {
  CHECK(fe(-3, 31).value() == 28);
  CHECK(fe(42, 31).value() == 11);
  CHECK(fe(-62, 31).value() == 0);
  CHECK((fe(30, 31) + fe(5, 31)).value() == 4);
  CHECK((fe(3, 31) - fe(5, 31)).value() == 29);
  CHECK((-fe(0, 31)).value() == 0);
}

TEST_CASE("field_inverse") {
  CHECK(field_inverse(fe(8, 31)).value() == 4);
  CHECK(field_inverse(fe(1, 31)).value() == 1);
  CHECK(field_inverse(fe(30, 31)).value() == 30);

  try {
    field_inverse(fe(0, 31));
    FAIL("expected ZeroInverse");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::kZeroInverse);
  }

  for (std::uint64_t p : testing::primes_between(5, 199)) {
    const PrimeModulus m(p);
    for (std::uint64_t x = 1; x < p; ++x) {
      const auto a = FieldElement::from_residue(x, m);
      CHECK((a * field_inverse(a)).value() == 1);
      CHECK(field_inverse(field_inverse(a)) == a);
    }
  }
}

TEST_CASE("field elements over different moduli do not mix") {
  CHECK_THROWS_AS(fe(1, 5) + fe(1, 7), Error);
}

TEST_CASE("sqrt_mod_p examples") {
  const auto two = sqrt_mod_p(fe(2, 31));
  REQUIRE(two.has_value());
  CHECK(two->first.value() == 8);
  CHECK(two->second.value() == 23);

  const auto zero = sqrt_mod_p(fe(0, 31));
  REQUIRE(zero.has_value());
  CHECK(zero->first.value() == 0);
  CHECK(zero->second.value() == 0);

  CHECK_FALSE(sqrt_mod_p(fe(3, 31)).has_value());
}

TEST_CASE("sqrt_mod_p agrees with the table of squares") {
  // 1 mod 8 and 1 mod 16 primes exercise the Tonelli-Shanks loop.
  auto primes = testing::primes_between(5, 400);
  primes.push_back(7681);
  primes.push_back(65537);
  for (std::uint64_t p : primes) {
    const PrimeModulus m(p);
    std::vector<bool> square(p, false);
    for (std::uint64_t s = 0; s < p; ++s) square[s * s % p] = true;
    std::size_t residues = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
      const auto r = sqrt_mod_p(FieldElement::from_residue(x, m));
      REQUIRE(r.has_value() == square[x]);
      if (!r) continue;
      CHECK((r->first * r->first).value() == x);
      CHECK(r->second == -r->first);
      CHECK(r->first.value() <= r->second.value());
      if (x != 0) ++residues;
    }
    CHECK(residues == (p - 1) / 2);
  }
}

TEST_CASE("euler_phi examples") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(16) == 8);
  CHECK(euler_phi(15) == 8);
  CHECK_THROWS_AS(euler_phi(0), Error);
}

TEST_CASE("euler_phi equals the gcd count for n <= 10000") {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t j = 1; j <= n; ++j) count += std::gcd(j, n) == 1;
    REQUIRE(euler_phi(n) == count);
  }
}

TEST_CASE("factorize") {
  CHECK(factorize(16).factors == std::vector<PrimePower>{{2, 4}});
  CHECK(factorize(60).factors == std::vector<PrimePower>{{3, 1}, {2, 2}, {5, 1}});
  CHECK(maximal_proper_divisors(16) == std::vector<std::uint64_t>{8});
  CHECK(maximal_proper_divisors(60) == std::vector<std::uint64_t>{30, 20, 12});
  CHECK(maximal_proper_divisors(1).empty());
  CHECK_THROWS_AS(factorize(1), Error);
  CHECK_THROWS_AS(factorize(0), Error);

  // Prime powers are ordered by size, not by prime: 12 = 3 * 4.
  CHECK(factorize(12).factors == std::vector<PrimePower>{{3, 1}, {2, 2}});
  CHECK(factorize(12).distinct_primes() == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("factorize reconstructs n") {
  for (std::uint64_t n = 2; n <= 5000; ++n) {
    const Factorization f = factorize(n);
    std::uint64_t product = 1;
    std::uint64_t previous_power = 0;
    for (const auto& [prime, exponent] : f.factors) {
      CHECK(is_prime(prime));
      CHECK(exponent >= 1);
      std::uint64_t power = 1;
      for (unsigned i = 0; i < exponent; ++i) power *= prime;
      CHECK(power > previous_power);
      previous_power = power;
      product *= power;
    }
    REQUIRE(product == n);
  }
}

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<std::uint64_t>{1});
  CHECK(divisors(16) == std::vector<std::uint64_t>{1, 2, 4, 8, 16});
  CHECK(divisors(36) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 9, 12, 18, 36});
}
