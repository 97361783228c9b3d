#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cw/group/element.hpp"

namespace cw::group {

/// A finite group given by generators, enumerated in breadth-first order from
/// the identity. Elements are addressed by their index in that order; index 0
/// is the identity.
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultSizeCap = 100000;

  /// Throws `ErrorKind::SizeBound` once more than `size_cap` elements appear
  /// and `ErrorKind::Precondition` for an empty or mixed generator list.
  static FiniteGroup generate(std::span<const GroupElement> generators, std::size_t size_cap = kDefaultSizeCap);

  std::size_t order() const noexcept { return elements_.size(); }
  const GroupElement& element(std::size_t index) const { return elements_.at(index); }
  std::span<const GroupElement> elements() const noexcept { return elements_; }
  std::span<const std::size_t> generator_indices() const noexcept { return generators_; }

  std::optional<std::size_t> find(const GroupElement& g) const;
  /// Throws `ErrorKind::Precondition` when g is not in the group.
  std::size_t index_of(const GroupElement& g) const;

  std::size_t multiply(std::size_t lhs, std::size_t rhs) const;
  std::size_t inverse(std::size_t index) const { return inverses_[index]; }
  std::size_t power(std::size_t index, std::int64_t exponent) const;
  std::size_t element_order(std::size_t index) const { return orders_[index]; }
  /// Least common multiple of the element orders.
  std::uint64_t exponent() const noexcept { return exponent_; }

 private:
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, std::size_t, ElementHash> lookup_;
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> inverses_;
  std::vector<std::size_t> orders_;
  std::uint64_t exponent_ = 1;
};

struct ConjugacyClass {
  std::size_t representative = 0;  // least element index in the class
  std::size_t size = 0;
  std::size_t element_order = 0;
};

struct ClassPartition {
  std::vector<ConjugacyClass> classes;    // ordered by representative
  std::vector<std::size_t> class_of;       // element index -> class index
  std::vector<std::size_t> inverse_class;  // class of g -> class of g^-1
};

ClassPartition conjugacy_classes(const FiniteGroup& group);

}  // namespace cw::group
