#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "isoposet/finite_group.hpp"

namespace isoposet {

struct SubgroupLattice;

/// Isomorphism-invariant summary of a group. Equal fingerprints are necessary,
/// not sufficient, for isomorphism.
struct Fingerprint {
  std::size_t order = 0;
  bool abelian = false;
  std::size_t exponent = 0;
  std::vector<std::pair<std::size_t, std::size_t>> order_histogram;  // (element order, count), ascending
  std::size_t center_size = 0;
  std::size_t derived_size = 0;
  std::vector<std::size_t> class_sizes;  // conjugacy class sizes, ascending

  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteGroup& g);

bool is_abelian(const FiniteGroup& g);
/// Conjugacy class id per element; ids are numbered by first appearance.
std::vector<std::size_t> conjugacy_classes(const FiniteGroup& g);

/// Generator images of an isomorphism, plus the full element map.
struct GroupIsomorphism {
  std::vector<ElementIndex> source_generators;
  std::vector<ElementIndex> images;
  std::vector<ElementIndex> mapping;  // mapping[x] = image of element x
};

/// Backtracking over images of a greedy generating sequence, pruned by element
/// order and conjugacy class size after fingerprint screening. The witness is
/// re-checked by verify_isomorphism before it is returned. Throws ResourceError
/// when either group exceeds limits.iso_cap.
std::optional<GroupIsomorphism> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                                 const Limits& limits = {});
bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits = {});

/// Rebuilds the element map from the generator images and checks that it is a
/// bijective homomorphism on every pair of elements.
bool verify_isomorphism(const FiniteGroup& g, const FiniteGroup& h, const GroupIsomorphism& iso);

/// Partition of lattice indices into isomorphism classes, ordered by the first
/// member's lattice index.
using Partition = std::vector<std::vector<std::size_t>>;
Partition classify(const FiniteGroup& g, const SubgroupLattice& lattice, const Limits& limits = {});

}  // namespace isoposet
