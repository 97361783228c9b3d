#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cw::exact {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using BigRational = mpq_class;
using BigInteger = mpz_class;

/// Parses "a", "-a" or "a/b". Throws `cw::Error(Parse)` on malformed input or
/// a zero denominator.
BigRational parse_rational(std::string_view text);

std::string to_string(const BigRational& value);

inline bool is_integer(const BigRational& value) { return value.get_den() == 1; }

/// Exact conversion when `value` is an integer that fits in 64 bits.
std::optional<std::int64_t> to_int64(const BigRational& value);

inline BigRational make_rational(std::int64_t num, std::int64_t den = 1) {
  BigRational q{BigInteger{static_cast<long>(num)}, BigInteger{static_cast<long>(den)}};
  q.canonicalize();
  return q;
}

}  // namespace cw::exact
