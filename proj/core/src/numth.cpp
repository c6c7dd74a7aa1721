#include "cayley/numth.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cayley::numth {

namespace {

void require_positive(u64 n, char const* what) {
  if (n == 0) {
    throw std::invalid_argument(std::string(what) + ": argument must be >= 1");
  }
}

}  // namespace

u64 FactoredInteger::value() const {
  u64 result = 1;
  for (auto const& f : factors) {
    result = checked_mul(result, checked_pow(f.prime, f.exponent));
  }
  return result;
}

u64 gcd(u64 a, u64 b) {
  require_positive(a, "gcd");
  require_positive(b, "gcd");
  return std::gcd(a, b);
}

u64 lcm(u64 a, u64 b) {
  require_positive(a, "lcm");
  require_positive(b, "lcm");
  return checked_mul(a / std::gcd(a, b), b);
}

u64 checked_mul(u64 a, u64 b) {
  u64 out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow: " + std::to_string(a) + " * " +
                              std::to_string(b) + " exceeds 64 bits");
  }
  return out;
}

u64 checked_pow(u64 base, unsigned exponent) {
  u64 out = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    out = checked_mul(out, base);
  }
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) {
    return false;
  }
  for (u64 d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

FactoredInteger factorize(u64 n) {
  require_positive(n, "factorize");
  FactoredInteger out;
  out.n = n;
  u64 rest = n;
  for (u64 p = 2; p <= rest / p; ++p) {
    unsigned k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (k > 0) {
      out.factors.push_back({p, k});
    }
  }
  if (rest > 1) {
    out.factors.push_back({rest, 1});
  }
  return out;
}

u64 euler_phi(u64 n) {
  require_positive(n, "euler_phi");
  u64 phi = 1;
  for (auto const& [p, k] : factorize(n).factors) {
    u64 const lower = checked_pow(p, k - 1);
    phi = checked_mul(phi, lower * (p - 1));
  }
  return phi;
}

std::vector<u64> totatives(u64 n) {
  require_positive(n, "totatives");
  std::vector<u64> out;
  for (u64 x = 1; x <= n; ++x) {
    if (std::gcd(x, n) == 1) {
      out.push_back(x);
    }
  }
  return out;
}

u64 multiplicative_order(u64 a, u64 n) {
  require_positive(n, "multiplicative_order");
  if (n == 1) {
    return 1;
  }
  a %= n;
  if (std::gcd(a, n) != 1) {
    throw std::invalid_argument("multiplicative_order: " + std::to_string(a) +
                                " is not a unit modulo " + std::to_string(n));
  }
  u64 x = a;
  u64 s = 1;
  while (x != 1) {
    __extension__ using u128 = unsigned __int128;
    x = static_cast<u64>((static_cast<u128>(x) * a) % n);
    ++s;
  }
  return s;
}

u64 elementary_abelian_aut_order(u64 p, unsigned m) {
  if (!is_prime(p)) {
    throw std::invalid_argument("elementary_abelian_aut_order: " +
                                std::to_string(p) + " is not prime");
  }
  u64 const pm = checked_pow(p, m);
  u64 out = 1;
  u64 px = 1;
  for (unsigned x = 0; x < m; ++x) {
    out = checked_mul(out, pm - px);
    px *= p;
  }
  return out;
}

}  // namespace cayley::numth
