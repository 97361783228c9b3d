#include "cw/exact/number_theory.hpp"

#include <numeric>

#include "cw/error.hpp"

namespace cw::exact {

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t g = std::gcd(a, b);
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a / g, b, &out)) {
    throw Error(ErrorKind::OrderBound, "lcm overflows 64 bits");
  }
  return out;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) noexcept {
  unsigned __int128 result = 1 % modulus;
  unsigned __int128 b = base % modulus;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b % modulus;
    b = b * b % modulus;
    exponent >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t prime) noexcept {
  return pow_mod(a, prime - 2, prime);
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t least_primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  if (p == 2) return 1;
  const auto factors = prime_divisors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool generator = true;
    for (auto q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw Error(ErrorKind::Precondition, "no primitive root found");
}

}  // namespace cw::exact
