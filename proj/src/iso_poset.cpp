#include "isoposet/iso_poset.hpp"

#include <algorithm>
#include <map>

#include "isoposet/catalog.hpp"

namespace isoposet {

IsoPoset build_iso_poset(const FiniteGroup& g, const Limits& limits, const LatticeCache* cache) {
  return build_iso_poset(g, all_subgroups(g, limits, cache), limits);
}

IsoPoset build_iso_poset(const FiniteGroup& g, const SubgroupLattice& lattice, const Limits& limits) {
  const Partition classes = classify(g, lattice, limits);
  std::vector<std::size_t> class_of(lattice.size());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto i : classes[c]) class_of[i] = c;

  IsoPoset poset;
  std::map<std::size_t, std::size_t> unnamed_per_order;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    IsoClassNode node;
    node.id = c;
    for (auto i : classes[c]) node.members.push_back(lattice.subgroups[i]);
    node.order = node.representative().order();
    node.shape = order_shape(node.order);
    const FiniteGroup standalone = subgroup_as_group(g, node.representative(), limits);
    node.fingerprint = fingerprint(standalone);
    node.all_members_maximal = std::all_of(classes[c].begin(), classes[c].end(),
                                           [&](std::size_t i) { return lattice.maximal[i]; });
    if (auto name = identify(standalone)) {
      node.label = *name;
    } else {
      node.label = "G" + std::to_string(node.order) + "." + std::to_string(++unnamed_per_order[node.order]);
    }
    poset.nodes.push_back(std::move(node));
  }

  const std::size_t n = poset.nodes.size();
  poset.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t j = i; j < lattice.size(); ++j)
      if (lattice.contains(i, j)) poset.leq[class_of[i]][class_of[j]] = true;
  poset.hasse_edges = Poset::from_relation(poset.leq).hasse_edges();
  poset.bottom = class_of[lattice.trivial_index()];
  poset.top = class_of[lattice.full_index()];
  return poset;
}

IsoPoset downset(const IsoPoset& p, std::size_t node) {
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < p.size(); ++v)
    if (p.leq[v][node]) keep.push_back(v);
  std::vector<std::size_t> renumber(p.size(), ~std::size_t{0});
  for (std::size_t i = 0; i < keep.size(); ++i) renumber[keep[i]] = i;

  IsoPoset sub;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    IsoClassNode copy = p.nodes[keep[i]];
    copy.id = i;
    sub.nodes.push_back(std::move(copy));
  }
  sub.leq.assign(keep.size(), std::vector<bool>(keep.size(), false));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) sub.leq[i][j] = p.leq[keep[i]][keep[j]];
  // Covers are preserved in a downset, so the Hasse edges restrict directly.
  for (auto [lo, hi] : p.hasse_edges)
    if (p.leq[hi][node]) sub.hasse_edges.emplace_back(renumber[lo], renumber[hi]);
  sub.bottom = renumber[p.bottom];
  sub.top = renumber[node];
  return sub;
}

std::vector<IsoClassNode> maximal_nontop_classes(const IsoPoset& p) {
  std::vector<IsoClassNode> result;
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (v == p.top) continue;
    bool only_top = true;
    bool any = false;
    for (auto [lo, hi] : p.hasse_edges) {
      if (lo != v) continue;
      any = true;
      if (hi != p.top) only_top = false;
    }
    if (any && only_top) result.push_back(p.nodes[v]);
  }
  return result;
}

std::optional<std::vector<std::size_t>> iso_poset_isomorphism(const IsoPoset& a, const IsoPoset& b, bool strict,
                                                              const Limits& limits) {
  if (!strict) return find_poset_isomorphism(a.to_poset(), b.to_poset(), limits);
  // Encode shapes as integers shared by both sides.
  std::map<std::vector<unsigned>, std::size_t> codes;
  auto encode = [&](const IsoPoset& p) {
    std::vector<std::size_t> labels;
    for (const auto& node : p.nodes) labels.push_back(codes.emplace(node.shape, codes.size()).first->second);
    return labels;
  };
  const auto la = encode(a);
  const auto lb = encode(b);
  return find_poset_isomorphism(a.to_poset(), b.to_poset(), limits, &la, &lb);
}

bool iso_posets_isomorphic(const IsoPoset& a, const IsoPoset& b, bool strict, const Limits& limits) {
  return iso_poset_isomorphism(a, b, strict, limits).has_value();
}

}  // namespace isoposet
