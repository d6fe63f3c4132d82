#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isoposet/limits.hpp"

namespace isoposet {

using Edge = std::pair<std::size_t, std::size_t>;  // (lower, upper)

/// A finite poset given by its Hasse diagram. The full order relation is
/// kept alongside for constant-time comparisons.
class Poset {
 public:
  Poset() = default;
  /// Throws std::invalid_argument unless the edges are acyclic and form a
  /// transitive reduction.
  Poset(std::size_t n, std::vector<Edge> hasse_edges);
  /// Computes the Hasse reduction of a reflexive partial order given as a
  /// matrix; throws std::invalid_argument if it is not a partial order.
  static Poset from_relation(const std::vector<std::vector<bool>>& leq);

  std::size_t size() const { return n_; }
  const std::vector<Edge>& hasse_edges() const { return edges_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  const std::vector<std::size_t>& upper_covers(std::size_t v) const { return up_[v]; }
  const std::vector<std::size_t>& lower_covers(std::size_t v) const { return down_[v]; }
  /// Longest chain length from a minimal element up to v.
  std::size_t height(std::size_t v) const { return height_[v]; }
  /// Longest chain length from v up to a maximal element.
  std::size_t depth(std::size_t v) const { return depth_[v]; }

 private:
  void index();

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> up_, down_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::size_t> height_, depth_;
};

using Coloring = std::vector<std::size_t>;

/// Iterated refinement from (height, depth, up-degree, down-degree), hashing
/// the multisets of upper and lower cover colors each round until the number
/// of colors stops growing. Colors are ranks of sorted signatures, so
/// isomorphic posets receive identical color multisets.
Coloring refine(const Poset& p);
/// Same rounds, starting from a caller-supplied coloring.
Coloring refine(const Poset& p, const Coloring& initial);

/// Order isomorphism p -> q as a node map; the witness is re-checked on all
/// pairs before being returned. Optional per-node labels must then match too.
std::optional<std::vector<std::size_t>> find_poset_isomorphism(
    const Poset& p, const Poset& q, const Limits& limits = {},
    const std::vector<std::size_t>* p_labels = nullptr, const std::vector<std::size_t>* q_labels = nullptr);
bool are_posets_isomorphic(const Poset& p, const Poset& q, const Limits& limits = {});

/// True when `map` is a bijection that preserves and reflects the order.
bool is_order_isomorphism(const Poset& p, const Poset& q, const std::vector<std::size_t>& map);

/// Canonical relabeling: canonical_label[v] is v's position in the canonical form.
std::vector<std::size_t> canonical_labeling(const Poset& p, const Limits& limits = {});
/// SHA-256 hex digest of the canonically relabeled Hasse edge list.
std::string canonical_hash(const Poset& p, const Limits& limits = {});

}  // namespace isoposet
