#ifndef CAYLEY_NUMTH_HPP
#define CAYLEY_NUMTH_HPP

#include <cstdint>
#include <vector>

// Integer arithmetic behind the counting formulas: gcd/lcm, trial-division
// factorization, Euler's totient and totatives. Every product that can grow
// past 64 bits is checked and throws std::overflow_error instead of wrapping.

namespace cayley::numth {

using u64 = std::uint64_t;

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;

  friend bool operator==(PrimePower const&, PrimePower const&) = default;
};

// n together with its prime factorization, primes strictly ascending.
// factors is empty exactly when n == 1.
struct FactoredInteger {
  u64 n = 1;
  std::vector<PrimePower> factors;

  // Product of p^k over the factors, recomputed with overflow checks.
  u64 value() const;
};

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

u64 checked_mul(u64 a, u64 b);
u64 checked_pow(u64 base, unsigned exponent);

bool is_prime(u64 n);

FactoredInteger factorize(u64 n);

// Computed from the factorization as the product of p^k - p^(k-1).
u64 euler_phi(u64 n);

// Ascending list of x in [1, n] with gcd(x, n) == 1.
std::vector<u64> totatives(u64 n);

// Smallest s >= 1 with a^s == 1 (mod n). Requires gcd(a, n) == 1.
u64 multiplicative_order(u64 a, u64 n);

// Order of the automorphism group of the elementary abelian group of rank m
// over Z_p, i.e. the product over x in [0, m) of (p^m - p^x).
u64 elementary_abelian_aut_order(u64 p, unsigned m);

}  // namespace cayley::numth

#endif  // CAYLEY_NUMTH_HPP
