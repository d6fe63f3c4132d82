#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "isoposet/group_iso.hpp"
#include "isoposet/poset.hpp"
#include "isoposet/subgroups.hpp"

namespace isoposet {

/// One class [H] of isomorphic subgroups.
struct IsoClassNode {
  std::size_t id = 0;
  std::vector<Subgroup> members;  // members.front() is the representative
  std::size_t order = 0;
  std::vector<unsigned> shape;
  Fingerprint fingerprint;
  bool all_members_maximal = false;
  std::string label;

  const Subgroup& representative() const { return members.front(); }
  std::size_t class_size() const { return members.size(); }
};

/// Classes of isomorphic subgroups ordered by [A] <= [B] iff some member of
/// [A] is contained in some member of [B]. Nodes are sorted by order, so the
/// bottom [1] is node 0 and the top [G] is the last node.
struct IsoPoset {
  std::vector<IsoClassNode> nodes;
  std::vector<std::vector<bool>> leq;
  std::vector<Edge> hasse_edges;
  std::size_t bottom = 0;
  std::size_t top = 0;

  std::size_t size() const { return nodes.size(); }
  Poset to_poset() const { return Poset(nodes.size(), hasse_edges); }
};

IsoPoset build_iso_poset(const FiniteGroup& g, const Limits& limits = {}, const LatticeCache* cache = nullptr);
/// Same, from an already enumerated lattice.
IsoPoset build_iso_poset(const FiniteGroup& g, const SubgroupLattice& lattice, const Limits& limits = {});

/// Induced sub-poset on {x : x <= node}; `node` becomes its top.
IsoPoset downset(const IsoPoset& p, std::size_t node);

/// Nodes covered only by the top.
std::vector<IsoClassNode> maximal_nontop_classes(const IsoPoset& p);

/// Label-free order isomorphism by default; strict mode additionally requires
/// each node to map to a node with the same order shape.
bool iso_posets_isomorphic(const IsoPoset& a, const IsoPoset& b, bool strict = false, const Limits& limits = {});
std::optional<std::vector<std::size_t>> iso_poset_isomorphism(const IsoPoset& a, const IsoPoset& b,
                                                              bool strict = false, const Limits& limits = {});

}  // namespace isoposet
