#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "isoposet/limits.hpp"
#include "isoposet/permutation.hpp"

namespace isoposet {

using ElementIndex = std::uint32_t;

/// A permutation group with every element enumerated.
///
/// Elements are stored in breadth-first discovery order from the identity,
/// applying generators in input order; index 0 is always the identity. All
/// sorted index sets elsewhere in the library refer to this order. The group
/// is immutable, and copies share storage.
class FiniteGroup {
 public:
  static FiniteGroup closure(std::size_t degree, std::vector<Permutation> generators,
                             const Limits& limits = {});

  std::size_t order() const { return data_->elements.size(); }
  std::size_t degree() const { return data_->degree; }
  const std::vector<Permutation>& generators() const { return data_->generators; }
  std::span<const ElementIndex> generator_indices() const { return data_->generator_indices; }
  const std::vector<Permutation>& elements() const { return data_->elements; }
  const Permutation& element(ElementIndex i) const { return data_->elements[i]; }
  static constexpr ElementIndex identity_index() { return 0; }

  /// Index of element(a) followed by element(b).
  ElementIndex multiply(ElementIndex a, ElementIndex b) const;
  ElementIndex inverse(ElementIndex a) const { return data_->inverses[a]; }
  std::optional<ElementIndex> index_of(const Permutation& p) const;
  bool has_cayley_table() const { return !data_->table.empty(); }

  /// Stable identity derived from degree and generator images.
  std::uint64_t id() const { return data_->id; }

 private:
  struct Data {
    std::size_t degree = 0;
    std::vector<Permutation> generators;
    std::vector<ElementIndex> generator_indices;
    std::vector<Permutation> elements;
    std::unordered_map<Permutation, ElementIndex, PermutationHash> index;
    std::vector<ElementIndex> inverses;
    std::vector<ElementIndex> table;  // row-major, order x order
    std::uint64_t id = 0;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Dense bitset over element indices of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }
  bool contains(ElementIndex i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  /// Returns true if i was newly inserted.
  bool insert(ElementIndex i) {
    std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (words_[i >> 6] & bit) return false;
    words_[i >> 6] |= bit;
    return true;
  }
  bool is_subset_of(const ElementSet& other) const;
  std::size_t count() const;
  std::size_t hash() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A subgroup of a parent FiniteGroup, as a sorted set of parent element
/// indices together with a generating set drawn from those indices.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(const FiniteGroup& parent, std::vector<ElementIndex> sorted_members,
           std::vector<ElementIndex> generators);

  std::uint64_t parent_id() const { return parent_id_; }
  std::size_t order() const { return members_.size(); }
  const std::vector<ElementIndex>& members() const { return members_; }
  const std::vector<ElementIndex>& generators() const { return generators_; }
  const ElementSet& bits() const { return bits_; }
  bool contains(ElementIndex i) const { return bits_.contains(i); }
  bool is_subset_of(const Subgroup& other) const { return bits_.is_subset_of(other.bits_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_id_ == b.parent_id_ && a.members_ == b.members_;
  }
  /// Orders by size, then lexicographically by member indices.
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.members_.size() != b.members_.size()) return a.members_.size() < b.members_.size();
    return a.members_ < b.members_;
  }

 private:
  std::uint64_t parent_id_ = 0;
  std::vector<ElementIndex> members_;
  std::vector<ElementIndex> generators_;
  ElementSet bits_;
};

/// Smallest k >= 1 with element(i)^k = identity.
std::size_t element_order(const FiniteGroup& g, ElementIndex i);

/// Subgroup of `g` generated by the given element indices.
Subgroup generate(const FiniteGroup& g, std::span<const ElementIndex> generators);
Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);

/// {x^-1 h x : h in H}.
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, ElementIndex x);
bool is_normal(const FiniteGroup& g, const Subgroup& h);

/// Realizes `h` as a standalone permutation group on the parent's points.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h, const Limits& limits = {});

/// Action of `g` on the right cosets of the normal subgroup `n`; the result is
/// isomorphic to g/n. Throws std::invalid_argument if `n` is not normal.
FiniteGroup coset_action(const FiniteGroup& g, const Subgroup& n, const Limits& limits = {});

/// Greedy generating sequence: repeatedly the lowest-index element of `within`
/// not yet generated.
std::vector<ElementIndex> greedy_generators(const FiniteGroup& g, const Subgroup& within);

}  // namespace isoposet
