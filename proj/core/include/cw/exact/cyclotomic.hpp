#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cw/exact/bigrational.hpp"

namespace cw::exact {

/// Integer polynomial, coefficient of x^i at index i.
using IntPolynomial = std::vector<std::int64_t>;

/// Upper bound on cyclotomic orders. Computing in Q(zeta_n) for n above the
/// bound raises `ErrorKind::OrderBound`. Default 10000.
std::uint32_t max_cyclotomic_order() noexcept;
void set_max_cyclotomic_order(std::uint32_t bound) noexcept;

/// The n-th cyclotomic polynomial, memoized process-wide. Thread safe.
/// When the environment variable CW_CACHE_DIR names a directory the table is
/// also persisted there between runs.
const IntPolynomial& cyclotomic_polynomial(std::uint32_t n);

std::uint32_t euler_phi(std::uint32_t n) noexcept;

/// An element of Q(zeta_n), zeta_n = exp(2 pi i / n).
///
/// Stored in the power basis 1, zeta, ..., zeta^(phi(n)-1) after reduction
/// modulo Phi_n, so two values of the same order are equal iff their
/// coefficient vectors are. Values of different orders are compared after
/// embedding both into Q(zeta_lcm). Immutable apart from assignment.
class Cyclotomic {
 public:
  /// Zero of Q.
  Cyclotomic();
  Cyclotomic(const BigRational& value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(std::int64_t value);        // NOLINT(google-explicit-constructor)

  /// zeta_n^k; the exponent is taken modulo n.
  static Cyclotomic root_of_unity(std::uint32_t n, std::int64_t k);

  /// Builds sum_i dense[i] * zeta_n^i for an arbitrary-length coefficient list
  /// and reduces it to canonical form.
  static Cyclotomic from_dense(std::uint32_t n, std::span<const BigRational> dense);

  /// Takes an already-canonical coefficient vector (length phi(n)).
  static Cyclotomic from_canonical(std::uint32_t n, std::vector<BigRational> coeffs);

  std::uint32_t order() const noexcept { return order_; }
  std::span<const BigRational> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_rational() const noexcept;
  /// Throws `ErrorKind::NotRational` unless the value lies in Q.
  BigRational to_rational() const;

  /// Re-expresses the value in Q(zeta_target); target must be a multiple of order().
  Cyclotomic embed(std::uint32_t target) const;
  /// Rational values are moved down to order 1, others are returned unchanged.
  Cyclotomic simplified() const;

  /// zeta -> zeta^k, gcd(k, n) = 1.
  Cyclotomic galois(std::int64_t k) const;
  Cyclotomic conj() const { return galois(-1); }
  /// Throws `ErrorKind::DivisionByZero` on zero.
  Cyclotomic inverse() const;
  Cyclotomic pow(std::int64_t exponent) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Total order used for deterministic sorting (lexicographic on the
  /// canonical coefficients in the common field). Not an ordering of C.
  friend int compare(const Cyclotomic& a, const Cyclotomic& b);

  /// Human-readable form such as "1/2 + z7^2 - 3*z7^4".
  std::string to_string() const;
  /// Floating-point value; display only, never used in formula evaluation.
  std::complex<double> approx() const;

 private:
  std::uint32_t order_ = 1;
  std::vector<BigRational> coeffs_;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Binary field operation over Q(zeta_lcm(order(a), order(b))).
Cyclotomic cyclo_arith(const Cyclotomic& a, const Cyclotomic& b, ArithOp op);

}  // namespace cw::exact
