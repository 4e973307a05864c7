#pragma once

#include <cstddef>
#include <vector>

#include "hss/error.hpp"

namespace hss {

/// Element of a finite abelian group, stored as one residue per cyclic
/// factor, each reduced into [0, n_i).
struct GroupElement {
  std::vector<long> residues;

  bool operator==(const GroupElement&) const = default;
};

/// Finite abelian group presented as a product of cyclic factors
/// Z/n_1 x ... x Z/n_k. The trivial group is the empty product.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<long> orders);

  const std::vector<long>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }

  /// Total number of elements (product of the factor orders).
  long order() const;

  GroupElement identity() const;
  GroupElement op(const GroupElement& g, const GroupElement& h) const;
  GroupElement inv(const GroupElement& g) const;

  /// Reduce arbitrary integer residues into canonical range.
  GroupElement reduce(std::vector<long> residues) const;

  /// All elements in lexicographic order of their residue vectors.
  std::vector<GroupElement> enumerate() const;

  bool contains(const GroupElement& g) const;

  bool operator==(const FiniteAbelianGroup&) const = default;

 private:
  void check_member(const GroupElement& g, const char* who) const;

  std::vector<long> orders_;
};

inline FiniteAbelianGroup make_group(std::vector<long> orders) {
  return FiniteAbelianGroup(std::move(orders));
}

FiniteAbelianGroup trivial_group();

}  // namespace hss
