#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cw/exact/cyclotomic.hpp"
#include "cw/group/finite_group.hpp"

namespace cw::group {

using exact::Cyclotomic;

struct CharacterTable {
  std::uint64_t group_order = 0;
  std::uint64_t exponent = 1;
  ClassPartition partition;
  /// characters[i][c] is the value of the i-th irreducible character on class c.
  std::vector<std::vector<Cyclotomic>> characters;
  std::vector<std::int64_t> dimensions;

  const std::vector<ConjugacyClass>& classes() const noexcept { return partition.classes; }
  /// Character values on g^0, g^1, ..., g^(ord g - 1).
  std::vector<Cyclotomic> values_on_powers(const FiniteGroup& group, std::size_t row, std::size_t element) const;
};

/// Irreducible characters via Dixon's method: the class-algebra structure
/// constants are diagonalized over a prime field F_q with q = 1 mod exp(G),
/// and each value is recovered exactly from its eigenvalue multiplicities.
/// Values on a class of element order o lie in Q(zeta_o). Rows are sorted by
/// dimension, then by their value tuples.
///
/// Throws `ErrorKind::LiftFailure` if a modular value does not lift.
CharacterTable character_table_dixon(const FiniteGroup& group);

struct PairCheck {
  std::size_t first = 0;
  std::size_t second = 0;
  Cyclotomic value;
  bool passed = false;
};

struct OrthogonalityReport {
  std::vector<PairCheck> rows;
  std::vector<PairCheck> columns;
  bool dimension_sum_ok = false;

  bool passed() const noexcept;
  std::size_t failures() const noexcept;
};

/// Exact check of row orthogonality <chi_i, chi_j> = delta_ij, column
/// orthogonality sum_i chi_i(a) conj(chi_i(b)) = delta_ab |C_G(a)|, and
/// sum of squared dimensions = |G|.
OrthogonalityReport verify_orthogonality(const CharacterTable& table);

}  // namespace cw::group
