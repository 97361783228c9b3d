#include "cw/exact/matrix.hpp"

#include "cw/error.hpp"

namespace cw::exact {

CycloMatrix CycloMatrix::from_rows(const std::vector<std::vector<Cyclotomic>>& rows) {
  CycloMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw Error(ErrorKind::Precondition, "matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

CycloMatrix CycloMatrix::identity(std::size_t n) {
  CycloMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclotomic(1);
  return m;
}

Cyclotomic CycloMatrix::trace() const {
  Cyclotomic t;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t.simplified();
}

CycloMatrix CycloMatrix::pow(std::uint64_t exponent) const {
  CycloMatrix result = identity(n_);
  CycloMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

CycloMatrix CycloMatrix::inverse() const {
  CycloMatrix a = *this;
  CycloMatrix inv = identity(n_);
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t p = c;
    while (p < n_ && a(p, c).is_zero()) ++p;
    if (p == n_) throw Error(ErrorKind::DivisionByZero, "singular matrix");
    for (std::size_t j = 0; j < n_; ++j) {
      std::swap(a(p, j), a(c, j));
      std::swap(inv(p, j), inv(c, j));
    }
    const Cyclotomic pivot_inv = a(c, c).inverse();
    for (std::size_t j = 0; j < n_; ++j) {
      a(c, j) *= pivot_inv;
      inv(c, j) *= pivot_inv;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const Cyclotomic f = a(i, c);
      for (std::size_t j = 0; j < n_; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  for (auto& x : inv.a_) x = x.simplified();
  return inv;
}

std::vector<Cyclotomic> CycloMatrix::characteristic_polynomial() const {
  std::vector<Cyclotomic> c(n_ + 1);
  c[n_] = Cyclotomic(1);
  CycloMatrix m(n_);
  for (std::size_t k = 1; k <= n_; ++k) {
    m = *this * m;
    for (std::size_t i = 0; i < n_; ++i) m(i, i) += c[n_ - k + 1];
    const Cyclotomic t = (*this * m).trace();
    c[n_ - k] = (-t / Cyclotomic(static_cast<std::int64_t>(k))).simplified();
  }
  return c;
}

bool CycloMatrix::is_identity() const { return *this == identity(n_); }

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::Precondition, "matrix size mismatch");
  CycloMatrix out(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  for (auto& x : out.a_) x = x.simplified();
  return out;
}

CycloMatrix operator*(const Cyclotomic& s, const CycloMatrix& a) {
  CycloMatrix out = a;
  for (auto& x : out.a_) x = (s * x).simplified();
  return out;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.n_ != b.n_) return false;
  for (std::size_t i = 0; i < a.a_.size(); ++i) {
    if (a.a_[i] != b.a_[i]) return false;
  }
  return true;
}

std::size_t root_multiplicity(std::vector<Cyclotomic> poly, const Cyclotomic& root) {
  std::size_t mult = 0;
  while (poly.size() > 1) {
    // Synthetic division by (x - root).
    std::vector<Cyclotomic> quotient(poly.size() - 1);
    Cyclotomic carry;
    for (std::size_t i = poly.size(); i-- > 1;) {
      carry = poly[i] + carry * root;
      quotient[i - 1] = carry;
    }
    if (!(poly[0] + carry * root).is_zero()) break;
    poly = std::move(quotient);
    ++mult;
  }
  return mult;
}

}  // namespace cw::exact
