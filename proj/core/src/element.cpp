#include "cw/group/element.hpp"

#include <algorithm>
#include <sstream>

#include "cw/error.hpp"
#include "cw/exact/number_theory.hpp"

namespace cw::group {

using exact::mod;

ModMatrix ModMatrix::make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::uint32_t modulus,
                          bool projective) {
  if (modulus < 2) throw Error(ErrorKind::Precondition, "matrix modulus must be at least 2");
  const std::int64_t m = modulus;
  std::array<std::uint32_t, 4> e{static_cast<std::uint32_t>(mod(a, m)), static_cast<std::uint32_t>(mod(b, m)),
                                 static_cast<std::uint32_t>(mod(c, m)), static_cast<std::uint32_t>(mod(d, m))};
  const std::int64_t det = mod(static_cast<std::int64_t>(e[0]) * e[3] - static_cast<std::int64_t>(e[1]) * e[2], m);
  if (det != 1 % m) throw Error(ErrorKind::Precondition, "matrix must have determinant 1");
  if (projective) {
    std::array<std::uint32_t, 4> neg{};
    for (std::size_t i = 0; i < 4; ++i) neg[i] = static_cast<std::uint32_t>(mod(-static_cast<std::int64_t>(e[i]), m));
    e = std::min(e, neg);
  }
  return ModMatrix{modulus, projective, e};
}

namespace s3 {

namespace {

constexpr std::array<Mat2, 6> kMatrices{{
    {1, 0, 0, 1},
    {0, 1, 1, 0},
    {0, -1, 1, -1},
    {-1, 1, -1, 0},
    {1, -1, 0, -1},
    {-1, 0, -1, 1},
}};

constexpr Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

struct Tables {
  std::array<std::array<int, 6>, 6> product{};
  std::array<int, 6> inverse{};
};

const Tables& tables() {
  static const Tables t = [] {
    Tables out;
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        const Mat2 p = mat_mul(kMatrices[i], kMatrices[j]);
        const auto it = std::find(kMatrices.begin(), kMatrices.end(), p);
        out.product[i][j] = static_cast<int>(it - kMatrices.begin());
        if (out.product[i][j] == kIdentity) out.inverse[i] = j;
      }
    }
    return out;
  }();
  return t;
}

}  // namespace

const Mat2& matrix(int index) { return kMatrices.at(static_cast<std::size_t>(index)); }

int multiply(int lhs, int rhs) { return tables().product.at(lhs).at(rhs); }

int inverse(int index) { return tables().inverse.at(index); }

int sign(int index) {
  const auto& m = matrix(index);
  return static_cast<int>(m[0] * m[3] - m[1] * m[2]);
}

int standard_character(int index) {
  if (index == kIdentity) return 2;
  return sign(index) == 1 ? -1 : 0;
}

}  // namespace s3

SemidirectElement SemidirectElement::make(std::int64_t a, std::int64_t b, int sigma, std::uint32_t modulus) {
  if (modulus < 1) throw Error(ErrorKind::Precondition, "semidirect modulus must be positive");
  if (sigma < 0 || sigma >= 6) throw Error(ErrorKind::Precondition, "S3 index out of range");
  return SemidirectElement{modulus, static_cast<std::uint32_t>(mod(a, modulus)),
                           static_cast<std::uint32_t>(mod(b, modulus)), sigma};
}

namespace {

ModMatrix mul(const ModMatrix& x, const ModMatrix& y) {
  const std::uint64_t m = x.modulus;
  const auto& p = x.entries;
  const auto& q = y.entries;
  return ModMatrix::make(static_cast<std::int64_t>((std::uint64_t{p[0]} * q[0] + std::uint64_t{p[1]} * q[2]) % m),
                         static_cast<std::int64_t>((std::uint64_t{p[0]} * q[1] + std::uint64_t{p[1]} * q[3]) % m),
                         static_cast<std::int64_t>((std::uint64_t{p[2]} * q[0] + std::uint64_t{p[3]} * q[2]) % m),
                         static_cast<std::int64_t>((std::uint64_t{p[2]} * q[1] + std::uint64_t{p[3]} * q[3]) % m),
                         x.modulus, x.projective);
}

SemidirectElement mul(const SemidirectElement& x, const SemidirectElement& y) {
  const auto& m = s3::matrix(x.sigma);
  const std::int64_t a = x.a + m[0] * y.a + m[1] * y.b;
  const std::int64_t b = x.b + m[2] * y.a + m[3] * y.b;
  return SemidirectElement::make(a, b, s3::multiply(x.sigma, y.sigma), x.modulus);
}

Permutation mul(const Permutation& x, const Permutation& y) {
  Permutation out;
  out.images.resize(x.images.size());
  for (std::size_t i = 0; i < x.images.size(); ++i) out.images[i] = y.images[x.images[i]];
  return out;
}

bool ambient_equal(const ModMatrix& x, const ModMatrix& y) {
  return x.modulus == y.modulus && x.projective == y.projective;
}
bool ambient_equal(const SemidirectElement& x, const SemidirectElement& y) { return x.modulus == y.modulus; }
bool ambient_equal(const Permutation& x, const Permutation& y) { return x.images.size() == y.images.size(); }

}  // namespace

bool same_ambient(const GroupElement& lhs, const GroupElement& rhs) {
  if (lhs.index() != rhs.index()) return false;
  return std::visit(
      [&rhs](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return ambient_equal(x, std::get<T>(rhs));
      },
      lhs);
}

GroupElement multiply(const GroupElement& lhs, const GroupElement& rhs) {
  if (!same_ambient(lhs, rhs)) throw Error(ErrorKind::Precondition, "group elements of different kinds");
  return std::visit(
      [&rhs](const auto& x) -> GroupElement {
        using T = std::decay_t<decltype(x)>;
        return mul(x, std::get<T>(rhs));
      },
      lhs);
}

GroupElement inverse(const GroupElement& element) {
  return std::visit(
      [](const auto& x) -> GroupElement {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ModMatrix>) {
          const auto& e = x.entries;
          return ModMatrix::make(e[3], -static_cast<std::int64_t>(e[1]), -static_cast<std::int64_t>(e[2]), e[0],
                                 x.modulus, x.projective);
        } else if constexpr (std::is_same_v<T, SemidirectElement>) {
          const int inv = s3::inverse(x.sigma);
          const auto& m = s3::matrix(inv);
          const std::int64_t a = -(m[0] * x.a + m[1] * x.b);
          const std::int64_t b = -(m[2] * x.a + m[3] * x.b);
          return SemidirectElement::make(a, b, inv, x.modulus);
        } else {
          Permutation out;
          out.images.resize(x.images.size());
          for (std::size_t i = 0; i < x.images.size(); ++i) out.images[x.images[i]] = static_cast<std::uint32_t>(i);
          return out;
        }
      },
      element);
}

GroupElement identity_like(const GroupElement& element) {
  return std::visit(
      [](const auto& x) -> GroupElement {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ModMatrix>) {
          return ModMatrix::make(1, 0, 0, 1, x.modulus, x.projective);
        } else if constexpr (std::is_same_v<T, SemidirectElement>) {
          return SemidirectElement::make(0, 0, s3::kIdentity, x.modulus);
        } else {
          Permutation out;
          out.images.resize(x.images.size());
          for (std::size_t i = 0; i < x.images.size(); ++i) out.images[i] = static_cast<std::uint32_t>(i);
          return out;
        }
      },
      element);
}

std::string to_string(const GroupElement& element) {
  std::ostringstream out;
  std::visit(
      [&out](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ModMatrix>) {
          out << "[[" << x.entries[0] << ',' << x.entries[1] << "],[" << x.entries[2] << ',' << x.entries[3]
              << "]] mod " << x.modulus << (x.projective ? " (proj)" : "");
        } else if constexpr (std::is_same_v<T, SemidirectElement>) {
          out << "((" << x.a << ',' << x.b << "), s" << x.sigma << ") mod " << x.modulus;
        } else {
          out << '(';
          for (std::size_t i = 0; i < x.images.size(); ++i) out << (i ? " " : "") << x.images[i];
          out << ')';
        }
      },
      element);
  return out.str();
}

std::size_t ElementHash::operator()(const GroupElement& element) const noexcept {
  std::size_t h = element.index() * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::uint64_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U); };
  std::visit(
      [&mix](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ModMatrix>) {
          mix(x.modulus);
          for (auto e : x.entries) mix(e);
        } else if constexpr (std::is_same_v<T, SemidirectElement>) {
          mix(x.modulus);
          mix(x.a);
          mix(x.b);
          mix(static_cast<std::uint64_t>(x.sigma));
        } else {
          for (auto e : x.images) mix(e);
        }
      },
      element);
  return h;
}

}  // namespace cw::group
