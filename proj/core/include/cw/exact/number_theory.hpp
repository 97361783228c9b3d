#pragma once

#include <cstdint>
#include <vector>

namespace cw::exact {

/// Non-negative residue of a modulo m (m > 0).
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) noexcept {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b);

bool is_prime(std::uint64_t n) noexcept;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) noexcept;

/// Inverse of a modulo a prime.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t prime) noexcept;

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// All positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Least generator of (Z/pZ)^*, p an odd prime.
std::uint64_t least_primitive_root(std::uint64_t p);

}  // namespace cw::exact
