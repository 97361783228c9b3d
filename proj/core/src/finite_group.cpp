#include "cw/group/finite_group.hpp"

#include <string>

#include "cw/error.hpp"
#include "cw/exact/number_theory.hpp"

namespace cw::group {

FiniteGroup FiniteGroup::generate(std::span<const GroupElement> generators, std::size_t size_cap) {
  if (generators.empty()) throw Error(ErrorKind::Precondition, "at least one generator is required");
  for (const auto& g : generators) {
    if (!same_ambient(g, generators.front())) throw Error(ErrorKind::Precondition, "generators of different kinds");
  }

  FiniteGroup group;
  auto add = [&group, size_cap](GroupElement g) {
    const auto [it, inserted] = group.lookup_.emplace(std::move(g), group.elements_.size());
    if (inserted) {
      if (group.elements_.size() >= size_cap) {
        throw Error(ErrorKind::SizeBound, "group has more than " + std::to_string(size_cap) + " elements");
      }
      group.elements_.push_back(it->first);
    }
    return it->second;
  };

  add(identity_like(generators.front()));
  for (std::size_t i = 0; i < group.elements_.size(); ++i) {
    for (const auto& g : generators) add(group::multiply(group.elements_[i], g));
  }
  for (const auto& g : generators) group.generators_.push_back(group.lookup_.at(g));

  const std::size_t n = group.elements_.size();
  group.inverses_.resize(n);
  group.orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    group.inverses_[i] = group.lookup_.at(group::inverse(group.elements_[i]));
    std::size_t order = 1;
    GroupElement x = group.elements_[i];
    while (group.lookup_.at(x) != 0) {
      x = group::multiply(x, group.elements_[i]);
      ++order;
    }
    group.orders_[i] = order;
    group.exponent_ = exact::lcm_checked(group.exponent_, order);
  }
  return group;
}

std::optional<std::size_t> FiniteGroup::find(const GroupElement& g) const {
  const auto it = lookup_.find(g);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::index_of(const GroupElement& g) const {
  if (auto i = find(g)) return *i;
  throw Error(ErrorKind::Precondition, "element " + to_string(g) + " is not in the group");
}

std::size_t FiniteGroup::multiply(std::size_t lhs, std::size_t rhs) const {
  return lookup_.at(group::multiply(elements_.at(lhs), elements_.at(rhs)));
}

std::size_t FiniteGroup::power(std::size_t index, std::int64_t exponent) const {
  const auto k = exact::mod(exponent, static_cast<std::int64_t>(orders_.at(index)));
  std::size_t out = 0;
  std::size_t base = index;
  for (auto e = static_cast<std::uint64_t>(k); e > 0; e >>= 1U) {
    if (e & 1U) out = multiply(out, base);
    if (e > 1) base = multiply(base, base);
  }
  return out;
}

ClassPartition conjugacy_classes(const FiniteGroup& group) {
  constexpr auto kUnassigned = static_cast<std::size_t>(-1);
  const std::size_t n = group.order();
  ClassPartition out;
  out.class_of.assign(n, kUnassigned);

  std::vector<std::size_t> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    if (out.class_of[i] != kUnassigned) continue;
    const std::size_t c = out.classes.size();
    out.classes.push_back({i, 0, group.element_order(i)});
    out.class_of[i] = c;
    frontier.assign(1, i);
    while (!frontier.empty()) {
      const std::size_t x = frontier.back();
      frontier.pop_back();
      ++out.classes[c].size;
      for (auto g : group.generator_indices()) {
        const std::size_t y = group.multiply(group.multiply(group.inverse(g), x), g);
        if (out.class_of[y] == kUnassigned) {
          out.class_of[y] = c;
          frontier.push_back(y);
        }
      }
    }
  }
  out.inverse_class.resize(out.classes.size());
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    out.inverse_class[c] = out.class_of[group.inverse(out.classes[c].representative)];
  }
  return out;
}

}  // namespace cw::group
