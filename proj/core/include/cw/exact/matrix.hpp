#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cw/exact/cyclotomic.hpp"

namespace cw::exact {

/// Dense square matrix over the cyclotomic numbers.
class CycloMatrix {
 public:
  CycloMatrix() = default;
  explicit CycloMatrix(std::size_t n) : n_(n), a_(n * n) {}
  /// Throws `ErrorKind::Precondition` unless `rows` is square.
  static CycloMatrix from_rows(const std::vector<std::vector<Cyclotomic>>& rows);
  static CycloMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  Cyclotomic& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  Cyclotomic trace() const;
  CycloMatrix pow(std::uint64_t exponent) const;
  /// Throws `ErrorKind::DivisionByZero` for a singular matrix.
  CycloMatrix inverse() const;
  /// det(x I - A), coefficient of x^i at index i (Faddeev-LeVerrier).
  std::vector<Cyclotomic> characteristic_polynomial() const;
  bool is_identity() const;

  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator*(const Cyclotomic& s, const CycloMatrix& a);
  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);

 private:
  std::size_t n_ = 0;
  std::vector<Cyclotomic> a_;
};

/// Multiplicity of `root` as a zero of the polynomial (coefficient of x^i at index i).
std::size_t root_multiplicity(std::vector<Cyclotomic> poly, const Cyclotomic& root);

}  // namespace cw::exact
