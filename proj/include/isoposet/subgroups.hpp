#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "isoposet/finite_group.hpp"
#include "isoposet/group_iso.hpp"

namespace isoposet {

class LatticeCache;

/// Every subgroup of a group, sorted by order and then by member indices, so
/// index 0 is the trivial subgroup and the last index is the whole group.
struct SubgroupLattice {
  std::uint64_t parent_id = 0;
  std::vector<Subgroup> subgroups;
  std::vector<std::vector<bool>> contained;  // contained[i][j]: subgroup i is a subset of j
  std::vector<bool> maximal;

  std::size_t size() const { return subgroups.size(); }
  bool contains(std::size_t inner, std::size_t outer) const { return contained[inner][outer]; }
  std::size_t trivial_index() const { return 0; }
  std::size_t full_index() const { return subgroups.size() - 1; }
  std::optional<std::size_t> find(const Subgroup& h) const;
};

/// Builds containment and maximality data for a complete subgroup list.
SubgroupLattice make_lattice(const FiniteGroup& g, std::vector<Subgroup> subgroups);

/// Complete subgroup enumeration: cyclic subgroups closed under joins with
/// cyclic subgroups until nothing new appears. Throws ResourceError above
/// limits.enumeration_cap.
SubgroupLattice all_subgroups(const FiniteGroup& g, const Limits& limits = {},
                              const LatticeCache* cache = nullptr);

/// A subgroup strictly between h and g, if one exists. Works by one-element
/// extension, one element per double coset, so it needs no enumeration.
std::optional<Subgroup> intermediate_subgroup(const FiniteGroup& g, const Subgroup& h);
/// Throws std::invalid_argument when h is the whole group.
bool is_maximal(const FiniteGroup& g, const Subgroup& h);

/// True when every group of order m is cyclic (hardcoded for m <= 100).
bool is_cyclic_only_order(std::size_t m);
bool has_element_of_order(const FiniteGroup& g, std::size_t m);
bool has_subgroup_of_order(const FiniteGroup& g, std::size_t m, const Limits& limits = {},
                           const LatticeCache* cache = nullptr);

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const SubgroupLattice& lattice);
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const Limits& limits = {});
/// Exactly two normal subgroups. Abelian simple groups (Z_p) count as simple.
bool is_simple(const FiniteGroup& g, const Limits& limits = {});

Subgroup center(const FiniteGroup& g);
/// Commutator subgroup [h, h], as a subgroup of g.
Subgroup derived_subgroup(const FiniteGroup& g, const Subgroup& h);
/// g = D0 > D1 > ... > Dk with Dk perfect.
std::vector<Subgroup> derived_series(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);

/// Tie-break among maximal proper normal subgroups.
enum class NormalChoice { SmallestIndex, LargestIndex };

/// Fingerprints of the composition factors, sorted.
std::vector<Fingerprint> composition_factors(const FiniteGroup& g, const Limits& limits = {},
                                             NormalChoice choice = NormalChoice::SmallestIndex);

/// Exponents of the prime factorization of n, sorted descending.
std::vector<unsigned> order_shape(std::uint64_t n);

/// On-disk store of subgroup lattices, one JSON file per group key.
class LatticeCache {
 public:
  explicit LatticeCache(std::filesystem::path directory);
  /// Uses ISOPOSET_CACHE_DIR when set.
  static std::optional<LatticeCache> from_environment();

  const std::filesystem::path& directory() const { return directory_; }
  std::string key(const FiniteGroup& g) const;
  std::optional<SubgroupLattice> load(const FiniteGroup& g) const;
  void store(const FiniteGroup& g, const SubgroupLattice& lattice) const;

 private:
  std::filesystem::path directory_;
};

}  // namespace isoposet
