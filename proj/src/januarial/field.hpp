#pragma once

// Exact arithmetic in a prime field F_p and the small amount of elementary
// number theory (primality, factorization, totient, square roots) the rest of
// the library is built on.

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace januarial {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// An odd prime p > 3. Construction validates primality.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t value() const noexcept { return p_; }

  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  std::uint64_t p_;
};

/// A canonical residue in [0, p).
class FieldElement {
 public:
  FieldElement(std::int64_t value, PrimeModulus modulus);

  static FieldElement from_residue(std::uint64_t residue, PrimeModulus modulus);
  static FieldElement zero(PrimeModulus m) { return from_residue(0, m); }
  static FieldElement one(PrimeModulus m) { return from_residue(1, m); }

  std::uint64_t value() const noexcept { return value_; }
  PrimeModulus modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator+(FieldElement rhs) const;
  FieldElement operator-(FieldElement rhs) const;
  FieldElement operator*(FieldElement rhs) const;
  FieldElement operator/(FieldElement rhs) const;
  FieldElement operator-() const;
  FieldElement& operator+=(FieldElement rhs) { return *this = *this + rhs; }
  FieldElement& operator-=(FieldElement rhs) { return *this = *this - rhs; }
  FieldElement& operator*=(FieldElement rhs) { return *this = *this * rhs; }

  FieldElement pow(std::uint64_t exponent) const;

  friend bool operator==(FieldElement a, FieldElement b) noexcept {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }
  // Ordering is only meaningful within one modulus.
  friend std::strong_ordering operator<=>(FieldElement a, FieldElement b) noexcept {
    return a.value_ <=> b.value_;
  }

 private:
  FieldElement(std::uint64_t residue, PrimeModulus modulus, int /*canonical tag*/)
      : value_(residue), modulus_(modulus) {}

  void check_same(FieldElement other) const;

  std::uint64_t value_;
  PrimeModulus modulus_;
};

/// Throws Error(kZeroInverse) for x = 0.
FieldElement field_inverse(FieldElement x);

/// {s, p - s} with s^2 = x and s <= p - s; {0, 0} for x = 0; nullopt for a
/// non-residue. Tonelli-Shanks.
std::optional<std::pair<FieldElement, FieldElement>> sqrt_mod_p(FieldElement x);

bool is_quadratic_residue(FieldElement x);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod prime^exponent, ordered so that the prime powers increase.
struct Factorization {
  std::uint64_t base;
  std::vector<PrimePower> factors;

  std::vector<std::uint64_t> distinct_primes() const;
};

/// Trial division. Throws Error(kDomain) for n < 2.
Factorization factorize(std::uint64_t n);

/// Totient by inclusion-exclusion over the distinct prime divisors:
/// phi(n) = n - sum n/p_i + sum n/(p_i p_j) - ...
std::uint64_t euler_phi(std::uint64_t n);

/// All positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// n / p for each distinct prime p | n, ordered by p. Empty for n = 1.
std::vector<std::uint64_t> maximal_proper_divisors(std::uint64_t n);

}  // namespace januarial
