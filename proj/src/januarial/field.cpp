#include "januarial/field.hpp"

#include <algorithm>
#include <string>

#include "januarial/error.hpp"

namespace januarial {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is exact below 3.3e24, which covers all of uint64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p <= 3 || !is_prime(p) || p > (1ULL << 62)) {
    throw Error(ErrorCode::kDomain, "p must be an odd prime > 3 (got " + std::to_string(p) + ")");
  }
}

FieldElement::FieldElement(std::int64_t value, PrimeModulus modulus) : value_(0), modulus_(modulus) {
  const auto p = static_cast<std::int64_t>(modulus.value());
  std::int64_t r = value % p;
  if (r < 0) r += p;
  value_ = static_cast<std::uint64_t>(r);
}

FieldElement FieldElement::from_residue(std::uint64_t residue, PrimeModulus modulus) {
  return FieldElement(residue % modulus.value(), modulus, 0);
}

void FieldElement::check_same(FieldElement other) const {
  if (!(modulus_ == other.modulus_)) {
    throw Error(ErrorCode::kDomain, "field elements over different moduli");
  }
}

FieldElement FieldElement::operator+(FieldElement rhs) const {
  check_same(rhs);
  const std::uint64_t p = modulus_.value();
  std::uint64_t s = value_ + rhs.value_;
  if (s >= p) s -= p;
  return FieldElement(s, modulus_, 0);
}

FieldElement FieldElement::operator-(FieldElement rhs) const {
  check_same(rhs);
  const std::uint64_t p = modulus_.value();
  return FieldElement(value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + p - rhs.value_, modulus_, 0);
}

FieldElement FieldElement::operator*(FieldElement rhs) const {
  check_same(rhs);
  return FieldElement(mul_mod(value_, rhs.value_, modulus_.value()), modulus_, 0);
}

FieldElement FieldElement::operator/(FieldElement rhs) const { return *this * field_inverse(rhs); }

FieldElement FieldElement::operator-() const {
  return FieldElement(value_ == 0 ? 0 : modulus_.value() - value_, modulus_, 0);
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  return FieldElement(pow_mod(value_, exponent, modulus_.value()), modulus_, 0);
}

FieldElement field_inverse(FieldElement x) {
  if (x.is_zero()) throw Error(ErrorCode::kZeroInverse, "inverse of zero");
  return x.pow(x.modulus().value() - 2);
}

bool is_quadratic_residue(FieldElement x) {
  if (x.is_zero()) return true;
  return x.pow((x.modulus().value() - 1) / 2).value() == 1;
}

std::optional<std::pair<FieldElement, FieldElement>> sqrt_mod_p(FieldElement x) {
  const PrimeModulus m = x.modulus();
  const std::uint64_t p = m.value();
  if (x.is_zero()) return std::pair{x, x};
  if (!is_quadratic_residue(x)) return std::nullopt;

  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  FieldElement z = FieldElement::from_residue(2, m);
  while (is_quadratic_residue(z)) z += FieldElement::one(m);

  FieldElement c = z.pow(q);
  FieldElement t = x.pow(q);
  FieldElement root = x.pow((q + 1) / 2);
  unsigned reach = s;
  while (t.value() != 1) {
    unsigned i = 0;
    FieldElement t2 = t;
    while (t2.value() != 1) {
      t2 = t2 * t2;
      ++i;
    }
    FieldElement b = c;
    for (unsigned j = 0; j + 1 + i < reach; ++j) b = b * b;
    reach = i;
    c = b * b;
    t = t * c;
    root = root * b;
  }
  FieldElement other = -root;
  if (other < root) std::swap(root, other);
  return std::pair{root, other};
}

std::vector<std::uint64_t> Factorization::distinct_primes() const {
  std::vector<std::uint64_t> primes;
  primes.reserve(factors.size());
  for (const auto& f : factors) primes.push_back(f.prime);
  std::sort(primes.begin(), primes.end());
  return primes;
}

Factorization factorize(std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::kDomain, "factorize requires n >= 2");
  Factorization result{n, {}};
  std::uint64_t rest = n;
  for (std::uint64_t d = 2; d <= rest / d; ++d) {
    if (rest % d != 0) continue;
    unsigned e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    result.factors.push_back({d, e});
  }
  if (rest > 1) result.factors.push_back({rest, 1});

  auto prime_power = [](const PrimePower& f) {
    u128 v = 1;
    for (unsigned i = 0; i < f.exponent; ++i) v *= f.prime;
    return v;
  };
  std::sort(result.factors.begin(), result.factors.end(),
            [&](const PrimePower& a, const PrimePower& b) { return prime_power(a) < prime_power(b); });
  return result;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kDomain, "euler_phi requires n >= 1");
  if (n == 1) return 1;
  const auto primes = factorize(n).distinct_primes();
  const std::size_t s = primes.size();
  // Alternating sum over all subsets of the distinct primes.
  std::int64_t total = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << s); ++mask) {
    std::uint64_t product = 1;
    int parity = 0;
    for (std::size_t i = 0; i < s; ++i) {
      if (mask & (1ULL << i)) {
        product *= primes[i];
        parity ^= 1;
      }
    }
    const auto term = static_cast<std::int64_t>(n / product);
    total += parity ? -term : term;
  }
  return static_cast<std::uint64_t>(total);
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kDomain, "divisors requires n >= 1");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::uint64_t> maximal_proper_divisors(std::uint64_t n) {
  if (n < 2) return {};
  std::vector<std::uint64_t> out;
  for (std::uint64_t prime : factorize(n).distinct_primes()) out.push_back(n / prime);
  return out;
}

}  // namespace januarial
