#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cw/exact/cyclotomic.hpp"

namespace cw::group {

/// Eigenvalue multiplicities of rho(g) for an element g of order N:
/// counts[k] = dim ker(rho(g) - zeta_N^k).
class EigenvalueProfile {
 public:
  EigenvalueProfile() = default;
  /// Throws `ErrorKind::Negative` on a negative count and
  /// `ErrorKind::Precondition` unless counts.size() == order >= 1.
  EigenvalueProfile(std::uint32_t order, std::vector<std::int64_t> counts);

  /// Profile of a diagonalizable matrix with eigenvalues zeta_order^e.
  static EigenvalueProfile from_exponents(std::uint32_t order, std::span<const std::int64_t> exponents);

  std::uint32_t order() const noexcept { return order_; }
  std::span<const std::int64_t> counts() const noexcept { return counts_; }
  std::int64_t count(std::int64_t k) const;
  std::int64_t dim() const noexcept;
  /// sum_k N_k zeta_N^k.
  exact::Cyclotomic trace() const;
  std::string to_string() const;

  friend bool operator==(const EigenvalueProfile&, const EigenvalueProfile&) = default;

 private:
  std::uint32_t order_ = 1;
  std::vector<std::int64_t> counts_{0};
};

/// Discrete Fourier inversion N_k = (1/N) sum_j chi(g^j) zeta_N^(-kj) applied
/// to the character on g^0, ..., g^(N-1). Throws `ErrorKind::NonIntegral`
/// when some N_k is not a nonnegative integer, and `ErrorKind::Precondition`
/// if chi(1) != dim.
EigenvalueProfile nk_profile(std::span<const exact::Cyclotomic> char_on_powers, std::int64_t dim);

/// Profile of zeta_N^shift * rho: new[k] = old[k - shift mod N].
EigenvalueProfile twist_profile(const EigenvalueProfile& profile, std::int64_t shift);

}  // namespace cw::group
