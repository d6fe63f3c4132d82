#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isoposet/finite_group.hpp"

namespace isoposet {

/// A named construction. `build(spec.name)` is deterministic, so rebuilding
/// from a name always yields the same generators and element order.
struct GroupSpec {
  std::string name;
  std::size_t order = 0;
};

/// One row of the curated catalog table.
struct CatalogOrder {
  std::size_t order = 0;
  bool curated = false;
  bool complete = false;
  std::optional<std::size_t> known_count;  // number of groups of this order, when recorded
  std::vector<GroupSpec> groups;
};

FiniteGroup cyclic(std::size_t n);
/// Dihedral group of order 2n acting on n points, n >= 3.
FiniteGroup dihedral(std::size_t order);
FiniteGroup symmetric(std::size_t n);
FiniteGroup alternating(std::size_t n);
FiniteGroup klein_four();

/// PSL(2,q) on the q+1 points of the projective line, generated by
/// x -> x+1 and x -> -1/x. Supports q in {5, 7}.
FiniteGroup psl2(std::size_t q);
/// SL(2,5) acting on the 24 nonzero vectors of F_5^2.
FiniteGroup sl2_5();
FiniteGroup sl2_3();
FiniteGroup quaternion8();
/// Z_7 semidirect Z_3 on 7 points: x -> x+1, x -> 2x.
FiniteGroup frobenius21();
/// <x -> x+1, x -> u x> on Z_m.
FiniteGroup affine(std::size_t m, std::size_t u);
/// Z_m semidirect Z_k where the generator of Z_k acts by multiplication by u
/// (u^k = 1 mod m). Realized on m + k points so the action need not be
/// faithful on Z_m; order m k.
FiniteGroup metacyclic(std::size_t m, std::size_t u, std::size_t k);
/// Dicyclic group of order 4n, n odd.
FiniteGroup dicyclic(std::size_t n);
FiniteGroup linear_group_on_vectors(std::size_t p, const std::vector<std::array<std::size_t, 4>>& matrices);

/// Acts on the disjoint union of both point sets.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits = {});

/// Builds a group from its catalog name, e.g. "A5", "PSL(2,7)", "S3xD10",
/// "Meta(15,2,4)". Factors separated by 'x' form a direct product.
FiniteGroup build(std::string_view name, const Limits& limits = {});

CatalogOrder catalog_for_order(std::size_t n);
std::vector<std::size_t> curated_orders();

/// Catalog name of a group isomorphic to `g`, if one is known.
std::optional<std::string> identify(const FiniteGroup& g);

}  // namespace isoposet
