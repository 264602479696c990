#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "edim2/element.hpp"

namespace edim2 {

struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultClosureCap = 10000;

// A finite group given by its full (closed) element set.  Elements are kept
// in canonical sorted order; all queries are pure.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  // Closure of `generators` under composition and inverse.
  static FiniteGroup closure(std::vector<GroupElement> generators,
                             int cap = kDefaultClosureCap);
  // Wrap an already-closed element set (checked).
  static FiniteGroup from_elements(std::vector<GroupElement> elements,
                                   std::vector<GroupElement> generators);

  int order() const { return (int)elems_.size(); }
  ElementKind kind() const { return kind_; }
  const std::vector<GroupElement>& elements() const { return elems_; }
  const std::vector<GroupElement>& generators() const { return gens_; }

  const GroupElement& element(int i) const { return elems_[i]; }
  int identity_index() const { return id_index_; }
  int index_of(const GroupElement& e) const;
  bool contains(const GroupElement& e) const { return lookup_.count(e) > 0; }
  bool contains_group(const FiniteGroup& h) const;
  bool same_elements(const FiniteGroup& h) const;

  int mul(int i, int j) const { return index_of(compose(elems_[i], elems_[j])); }
  int inv(int i) const { return index_of(inverse(elems_[i])); }
  int element_order(int i) const;

  bool is_abelian() const;
  bool is_trivial() const { return order() == 1; }
  std::vector<int> element_orders() const;
  int exponent() const;

  // Conjugacy classes, each sorted; classes ordered by (size, least member).
  std::vector<std::vector<int>> conjugacy_classes() const;
  int centralizer_size(int i) const;

  // Subgroup generated inside this group by the given element indices.
  FiniteGroup subgroup(const std::vector<int>& generator_indices) const;

 private:
  void finalize();

  std::vector<GroupElement> elems_;
  std::vector<GroupElement> gens_;
  std::unordered_map<GroupElement, int, ElementHash> lookup_;
  ElementKind kind_ = ElementKind::Permutation;
  int id_index_ = 0;
};

// rank of a finite abelian group (minimal generator count); nullopt when
// the group is non-abelian.
std::optional<int> abelian_rank(const FiniteGroup& g);

// Deterministic Sylow p-subgroup via normalizer growth from the least
// p-element.  Trivial subgroup when p does not divide |G|.
FiniteGroup sylow(const FiniteGroup& g, int p);

// All normal subgroups (via joins of conjugacy-class closures).
std::vector<FiniteGroup> normal_subgroups(const FiniteGroup& g);

// The center as a subgroup.
FiniteGroup center(const FiniteGroup& g);

// G/N realized as a permutation group on the cosets of N (N must be normal).
FiniteGroup quotient_perm_group(const FiniteGroup& g, const FiniteGroup& n);

// Greedy small generating sequence (deterministic).
std::vector<int> small_generating_set(const FiniteGroup& g);

}  // namespace edim2
