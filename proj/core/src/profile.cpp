#include "cw/group/profile.hpp"

#include <numeric>
#include <sstream>

#include "cw/error.hpp"
#include "cw/exact/number_theory.hpp"

namespace cw::group {

using exact::Cyclotomic;
using exact::mod;

EigenvalueProfile::EigenvalueProfile(std::uint32_t order, std::vector<std::int64_t> counts)
    : order_(order), counts_(std::move(counts)) {
  if (order == 0 || counts_.size() != order) {
    throw Error(ErrorKind::Precondition, "profile needs exactly one count per residue class");
  }
  for (auto c : counts_) {
    if (c < 0) throw Error(ErrorKind::Negative, "eigenvalue multiplicity " + std::to_string(c));
  }
}

EigenvalueProfile EigenvalueProfile::from_exponents(std::uint32_t order, std::span<const std::int64_t> exponents) {
  std::vector<std::int64_t> counts(order, 0);
  for (auto e : exponents) ++counts[static_cast<std::size_t>(mod(e, order))];
  return {order, std::move(counts)};
}

std::int64_t EigenvalueProfile::count(std::int64_t k) const {
  return counts_[static_cast<std::size_t>(mod(k, order_))];
}

std::int64_t EigenvalueProfile::dim() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

Cyclotomic EigenvalueProfile::trace() const {
  std::vector<exact::BigRational> dense(order_);
  for (std::size_t k = 0; k < order_; ++k) dense[k] = static_cast<long>(counts_[k]);
  return Cyclotomic::from_dense(order_, dense).simplified();
}

std::string EigenvalueProfile::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < counts_.size(); ++k) out << (k ? "," : "") << counts_[k];
  out << ')';
  return out.str();
}

EigenvalueProfile nk_profile(std::span<const Cyclotomic> char_on_powers, std::int64_t dim) {
  const auto n = static_cast<std::uint32_t>(char_on_powers.size());
  if (n == 0) throw Error(ErrorKind::Precondition, "empty character sequence");
  if (char_on_powers[0] != Cyclotomic(dim)) {
    throw Error(ErrorKind::Precondition, "character at the identity must equal the dimension");
  }
  std::vector<std::int64_t> counts(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    Cyclotomic sum;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (char_on_powers[j].is_zero()) continue;
      sum += char_on_powers[j] * Cyclotomic::root_of_unity(n, -static_cast<std::int64_t>(k) * j);
    }
    sum /= Cyclotomic(static_cast<std::int64_t>(n));
    if (!sum.is_rational()) throw Error(ErrorKind::NonIntegral, "N_" + std::to_string(k) + " is not rational");
    const auto value = exact::to_int64(sum.to_rational());
    if (!value || *value < 0) {
      throw Error(ErrorKind::NonIntegral, "N_" + std::to_string(k) + " = " + sum.to_string());
    }
    counts[k] = *value;
  }
  if (std::accumulate(counts.begin(), counts.end(), std::int64_t{0}) != dim) {
    throw Error(ErrorKind::NonIntegral, "multiplicities do not sum to the dimension");
  }
  return {n, std::move(counts)};
}

EigenvalueProfile twist_profile(const EigenvalueProfile& profile, std::int64_t shift) {
  const std::uint32_t n = profile.order();
  std::vector<std::int64_t> counts(n);
  for (std::uint32_t k = 0; k < n; ++k) counts[k] = profile.count(static_cast<std::int64_t>(k) - shift);
  return {n, std::move(counts)};
}

}  // namespace cw::group
