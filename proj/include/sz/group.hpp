#pragma once

// Fully enumerated permutation groups and subgroup algebra over them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "sz/bitset.hpp"
#include "sz/perm.hpp"

namespace sz {

using ElementId = std::uint32_t;

/// A finite permutation group with every element listed.
///
/// Element ids follow breadth-first closure from the sorted, deduplicated
/// generators, with the identity at id 0. Products are looked up through
/// the images of a base (a point sequence whose pointwise stabilizer is
/// trivial), so mul/inv/conj are O(base length).
class GroupTable {
 public:
  static GroupTable enumerate(std::span<const Perm> generators, std::size_t cap, std::size_t degree = 0);
  /// Rebuilds a table from a stored element list (ids preserved). The list
  /// must start with the identity and be closed under the generators.
  static GroupTable from_elements(std::vector<Perm> elements, std::span<const ElementId> generator_ids);

  std::size_t order() const { return order_; }
  std::size_t degree() const { return degree_; }
  static constexpr ElementId identity() { return 0; }

  std::span<const std::uint16_t> images(ElementId g) const {
    return {elements_.data() + static_cast<std::size_t>(g) * degree_, degree_};
  }
  Perm element(ElementId g) const;
  std::optional<ElementId> find(std::span<const std::uint16_t> images) const;
  ElementId id_of(const Perm& p) const;

  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId a) const { return inverse_[a]; }
  /// x^-1 g x.
  ElementId conj(ElementId g, ElementId x) const;
  ElementId pow(ElementId g, std::int64_t k) const;
  std::uint32_t element_order(ElementId g) const { return orders_[g]; }
  std::uint32_t exponent() const;

  std::span<const ElementId> generators() const { return generators_; }
  std::span<const std::uint16_t> base() const { return base_; }

  /// FNV-1a digest of all image arrays in id order.
  std::uint64_t digest() const;

 private:
  GroupTable() = default;
  void finalize();
  std::uint64_t key_of(std::span<const std::uint16_t> base_images) const;

  std::size_t order_ = 0;
  std::size_t degree_ = 0;
  std::vector<std::uint16_t> elements_;
  std::vector<ElementId> generators_;
  std::vector<ElementId> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<std::uint16_t> base_;
  std::vector<ElementId> dense_lookup_;  // used when degree^|base| is small
  std::unordered_map<std::uint64_t, ElementId> sparse_lookup_;
};

/// A subgroup of an enumerated group: membership bitset, sorted element
/// list and a generating set (all as element ids of the ambient table).
class Subgroup {
 public:
  Subgroup() = default;
  /// Wraps a member set that is already known to be a subgroup. If no
  /// generators are given a greedy generating set of smallest ids is chosen.
  static Subgroup from_members(const GroupTable& g, Bitset members, std::vector<ElementId> gens = {});

  std::size_t order() const { return elements_.size(); }
  bool contains(ElementId g) const { return members_.test(g); }
  bool is_trivial() const { return order() == 1; }
  const Bitset& members() const { return members_; }
  std::span<const ElementId> elements() const { return elements_; }
  std::span<const ElementId> generators() const { return gens_; }
  bool is_subgroup_of(const Subgroup& other) const { return members_.is_subset_of(other.members_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  Bitset members_;
  std::vector<ElementId> elements_;
  std::vector<ElementId> gens_;
};

Subgroup closure(const GroupTable& g, std::span<const ElementId> seeds);
Subgroup whole_group(const GroupTable& g);
Subgroup trivial_subgroup(const GroupTable& g);
Subgroup intersect(const GroupTable& g, const Subgroup& a, const Subgroup& b);
/// K^x = x^-1 K x.
Subgroup conjugate(const GroupTable& g, const Subgroup& k, ElementId x);
Subgroup normalizer(const GroupTable& g, const Subgroup& k);
Subgroup centralizer(const GroupTable& g, const Subgroup& k);
Subgroup center(const GroupTable& g, const Subgroup& k);
/// Intersection of all conjugates of k.
Subgroup core(const GroupTable& g, const Subgroup& k);
Subgroup normal_closure(const GroupTable& g, std::span<const ElementId> seeds);
Subgroup derived_subgroup(const GroupTable& g, const Subgroup& k);
bool is_normal(const GroupTable& g, const Subgroup& k);
/// Elements fixing every point of `points`.
Subgroup pointwise_stabilizer(const GroupTable& g, std::span<const std::uint16_t> points);

/// The distinct conjugates K^x of a subgroup, one per right coset N_G(K)x.
struct ConjugateOrbit {
  Subgroup normalizer;
  std::vector<ElementId> representatives;  // smallest id of each coset
  std::vector<std::uint32_t> index_of;     // element id -> conjugate index of K^g

  std::size_t size() const { return representatives.size(); }
};

ConjugateOrbit conjugate_orbit(const GroupTable& g, const Subgroup& k);

/// True iff K meets each of its conjugates in 1 or K.
bool is_trivial_intersection(const GroupTable& g, const Subgroup& k);

struct ConjugacyClass {
  ElementId representative = 0;  // smallest id in the class
  std::uint32_t element_order = 1;
  std::vector<ElementId> members;  // sorted
  std::size_t size() const { return members.size(); }
};

/// Classes ordered by (element order, size, representative id).
std::vector<ConjugacyClass> conjugacy_classes(const GroupTable& g);
/// Element id -> index into the class list.
std::vector<std::uint32_t> class_lookup(const GroupTable& g, const std::vector<ConjugacyClass>& classes);

}  // namespace sz
