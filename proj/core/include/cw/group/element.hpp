#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace cw::group {

/// 2x2 matrix over Z/mZ with determinant 1. With `projective` set, M and -M
/// are identified and the lexicographically smaller of (a,b,c,d) and its
/// negation is stored. For odd m this places the first nonzero entry in
/// {1, ..., (m-1)/2}.
struct ModMatrix {
  std::uint32_t modulus = 1;
  bool projective = false;
  std::array<std::uint32_t, 4> entries{};  // row-major a, b, c, d

  static ModMatrix make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::uint32_t modulus,
                        bool projective);

  std::uint32_t trace() const noexcept { return (entries[0] + entries[3]) % modulus; }

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;
};

/// The symmetric group S3 realized as the six integer matrices generated by
/// the swap s = [[0,1],[1,0]] and the rotation u = [[0,-1],[1,-1]] acting on
/// column vectors (a, b). Index order: 1, s, u, u^2, s*u, u*s.
namespace s3 {
inline constexpr int kIdentity = 0;
inline constexpr int kSwap = 1;
inline constexpr int kRotation = 2;
inline constexpr int kRotationSquared = 3;
inline constexpr int kSwapRotation = 4;
inline constexpr int kRotationSwap = 5;

using Mat2 = std::array<std::int64_t, 4>;
const Mat2& matrix(int index);
int multiply(int lhs, int rhs);
int inverse(int index);
/// +1 on even permutations, -1 on transpositions.
int sign(int index);
/// Character of the two-dimensional irreducible representation.
int standard_character(int index);
}  // namespace s3

/// Element (v, sigma) of (Z/NZ)^2 x| S3 standing for A^a B^b sigma, with
/// (v, sigma)(w, tau) = (v + sigma.w, sigma tau).
struct SemidirectElement {
  std::uint32_t modulus = 1;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  int sigma = s3::kIdentity;

  static SemidirectElement make(std::int64_t a, std::int64_t b, int sigma, std::uint32_t modulus);

  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

/// Permutation of {0, ..., d-1}; the product p * q applies p first, then q.
struct Permutation {
  std::vector<std::uint32_t> images;

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

using GroupElement = std::variant<ModMatrix, SemidirectElement, Permutation>;

/// Throws `ErrorKind::Precondition` when the operands are of different kinds
/// or live over different ambient parameters.
GroupElement multiply(const GroupElement& lhs, const GroupElement& rhs);
GroupElement inverse(const GroupElement& element);
GroupElement identity_like(const GroupElement& element);
bool same_ambient(const GroupElement& lhs, const GroupElement& rhs);
std::string to_string(const GroupElement& element);

struct ElementHash {
  std::size_t operator()(const GroupElement& element) const noexcept;
};

}  // namespace cw::group
