#include "isoposet/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "digest.hpp"

namespace isoposet {

Poset::Poset(std::size_t n, std::vector<Edge> hasse_edges) : n_(n), edges_(std::move(hasse_edges)) {
  for (auto [lo, hi] : edges_)
    if (lo >= n_ || hi >= n_ || lo == hi) throw std::invalid_argument("Poset: edge out of range or loop");
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("Poset: duplicate edge");
  index();
}

void Poset::index() {
  up_.assign(n_, {});
  down_.assign(n_, {});
  for (auto [lo, hi] : edges_) {
    up_[lo].push_back(hi);
    down_[hi].push_back(lo);
  }
  // Kahn order; a leftover node means a cycle.
  std::vector<std::size_t> indegree(n_, 0), topo;
  for (auto [lo, hi] : edges_) ++indegree[hi];
  for (std::size_t v = 0; v < n_; ++v)
    if (indegree[v] == 0) topo.push_back(v);
  for (std::size_t head = 0; head < topo.size(); ++head)
    for (auto w : up_[topo[head]])
      if (--indegree[w] == 0) topo.push_back(w);
  if (topo.size() != n_) throw std::invalid_argument("Poset: Hasse edges contain a cycle");

  leq_.assign(n_, std::vector<bool>(n_, false));
  height_.assign(n_, 0);
  depth_.assign(n_, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const std::size_t v = *it;
    leq_[v][v] = true;
    for (auto w : up_[v]) {
      for (std::size_t x = 0; x < n_; ++x)
        if (leq_[w][x]) leq_[v][x] = true;
      depth_[v] = std::max(depth_[v], depth_[w] + 1);
    }
  }
  for (auto v : topo)
    for (auto w : up_[v]) height_[w] = std::max(height_[w], height_[v] + 1);

  for (auto [lo, hi] : edges_)
    for (auto mid : up_[lo])
      if (mid != hi && leq_[mid][hi]) throw std::invalid_argument("Poset: edge is implied by transitivity");
}

Poset Poset::from_relation(const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (leq[a].size() != n || !leq[a][a]) throw std::invalid_argument("Poset: relation is not reflexive");
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq[a][b] && leq[b][a]) throw std::invalid_argument("Poset: relation is not antisymmetric");
      if (!leq[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (leq[b][c] && !leq[a][c]) throw std::invalid_argument("Poset: relation is not transitive");
    }
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (c != a && c != b && leq[a][c] && leq[c][b]) cover = false;
      if (cover) edges.emplace_back(a, b);
    }
  }
  return Poset(n, std::move(edges));
}

namespace {

using Signature = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;

std::size_t count_colors(const Coloring& c) {
  std::vector<std::size_t> copy = c;
  std::sort(copy.begin(), copy.end());
  return static_cast<std::size_t>(std::unique(copy.begin(), copy.end()) - copy.begin());
}

// Replaces each value by its rank among the distinct values.
template <typename T>
Coloring rank(const std::vector<T>& keys) {
  std::vector<T> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Coloring out(keys.size());
  for (std::size_t v = 0; v < keys.size(); ++v)
    out[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
  return out;
}

Coloring refine_round(const Poset& p, const Coloring& colors) {
  std::vector<Signature> sigs(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) {
    std::vector<std::size_t> ups, downs;
    for (auto w : p.upper_covers(v)) ups.push_back(colors[w]);
    for (auto w : p.lower_covers(v)) downs.push_back(colors[w]);
    std::sort(ups.begin(), ups.end());
    std::sort(downs.begin(), downs.end());
    sigs[v] = {colors[v], std::move(ups), std::move(downs)};
  }
  return rank(sigs);
}

// Disjoint union with q's nodes shifted by p.size().
Poset disjoint_union(const Poset& p, const Poset& q) {
  std::vector<Edge> edges = p.hasse_edges();
  for (auto [lo, hi] : q.hasse_edges()) edges.emplace_back(lo + p.size(), hi + p.size());
  return Poset(p.size() + q.size(), std::move(edges));
}

void check_node_cap(const Poset& p, const Limits& limits) {
  if (p.size() > limits.poset_node_cap)
    throw ResourceError("poset: " + std::to_string(p.size()) + " nodes exceeds cap " +
                        std::to_string(limits.poset_node_cap));
}

}  // namespace

Coloring refine(const Poset& p, const Coloring& initial) {
  Coloring colors = rank(initial);
  std::size_t count = count_colors(colors);
  while (true) {
    Coloring next = refine_round(p, colors);
    const std::size_t next_count = count_colors(next);
    colors = std::move(next);
    if (next_count == count) break;
    count = next_count;
  }
  return colors;
}

Coloring refine(const Poset& p) {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> start(p.size());
  for (std::size_t v = 0; v < p.size(); ++v)
    start[v] = {p.height(v), p.depth(v), p.upper_covers(v).size(), p.lower_covers(v).size()};
  return refine(p, rank(start));
}

bool is_order_isomorphism(const Poset& p, const Poset& q, const std::vector<std::size_t>& map) {
  if (p.size() != q.size() || map.size() != p.size()) return false;
  std::vector<bool> hit(q.size(), false);
  for (auto v : map) {
    if (v >= q.size() || hit[v]) return false;
    hit[v] = true;
  }
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.leq(a, b) != q.leq(map[a], map[b])) return false;
  return true;
}

std::optional<std::vector<std::size_t>> find_poset_isomorphism(const Poset& p, const Poset& q,
                                                               const Limits& limits,
                                                               const std::vector<std::size_t>* p_labels,
                                                               const std::vector<std::size_t>* q_labels) {
  check_node_cap(p, limits);
  check_node_cap(q, limits);
  if (p.size() != q.size() || p.hasse_edges().size() != q.hasse_edges().size()) return std::nullopt;
  const std::size_t n = p.size();

  // Refine the disjoint union so colors are comparable across p and q.
  const Poset both = disjoint_union(p, q);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>> start(2 * n);
  for (std::size_t v = 0; v < 2 * n; ++v) {
    std::size_t label = 0;
    if (p_labels != nullptr && q_labels != nullptr) label = v < n ? (*p_labels)[v] : (*q_labels)[v - n];
    start[v] = {label, both.height(v), both.depth(v), both.upper_covers(v).size(), both.lower_covers(v).size()};
  }
  const Coloring colors = refine(both, rank(start));
  Coloring pc(colors.begin(), colors.begin() + static_cast<std::ptrdiff_t>(n));
  Coloring qc(colors.begin() + static_cast<std::ptrdiff_t>(n), colors.end());
  {
    Coloring a = pc, b = qc;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  std::vector<std::size_t> class_size(2 * n, 0);
  for (auto c : pc) ++class_size[c];
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return class_size[pc[a]] < class_size[pc[b]]; });

  constexpr std::size_t kNone = ~std::size_t{0};
  std::vector<std::size_t> map(n, kNone);
  std::vector<bool> used(n, false);
  auto consistent = [&](std::size_t level, std::size_t u, std::size_t v) {
    for (std::size_t i = 0; i < level; ++i) {
      const std::size_t w = order[i];
      if (p.leq(u, w) != q.leq(v, map[w]) || p.leq(w, u) != q.leq(map[w], v)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t level) -> bool {
    if (level == n) return true;
    const std::size_t u = order[level];
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || qc[v] != pc[u] || !consistent(level, u, v)) continue;
      map[u] = v;
      used[v] = true;
      if (self(self, level + 1)) return true;
      used[v] = false;
      map[u] = kNone;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  if (!is_order_isomorphism(p, q, map))
    throw std::logic_error("find_poset_isomorphism: search produced an invalid witness");
  if (p_labels != nullptr && q_labels != nullptr)
    for (std::size_t v = 0; v < n; ++v)
      if ((*p_labels)[v] != (*q_labels)[map[v]])
        throw std::logic_error("find_poset_isomorphism: witness does not respect labels");
  return map;
}

bool are_posets_isomorphic(const Poset& p, const Poset& q, const Limits& limits) {
  return find_poset_isomorphism(p, q, limits).has_value();
}

namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Poset& p) : p_(p) {}

  std::vector<std::size_t> run() {
    descend(refine(p_));
    return best_labeling_;
  }

 private:
  void descend(const Coloring& colors) {
    const std::size_t n = p_.size();
    std::vector<std::size_t> cell_size(n, 0);
    for (auto c : colors) ++cell_size[c];
    std::size_t target = n;
    for (std::size_t c = 0; c < n; ++c)
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    if (target == n) {
      leaf(colors);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      // Individualize v: it sorts before the rest of its cell.
      std::vector<std::pair<std::size_t, std::size_t>> split(n);
      for (std::size_t w = 0; w < n; ++w) split[w] = {colors[w], w == v ? 0 : 1};
      descend(refine(p_, rank(split)));
    }
  }

  void leaf(const Coloring& labeling) {
    std::vector<Edge> cert;
    cert.reserve(p_.hasse_edges().size());
    for (auto [lo, hi] : p_.hasse_edges()) cert.emplace_back(labeling[lo], labeling[hi]);
    std::sort(cert.begin(), cert.end());
    if (!have_best_ || cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_labeling_ = labeling;
      have_best_ = true;
    }
  }

  const Poset& p_;
  bool have_best_ = false;
  std::vector<Edge> best_cert_;
  std::vector<std::size_t> best_labeling_;
};

}  // namespace

std::vector<std::size_t> canonical_labeling(const Poset& p, const Limits& limits) {
  check_node_cap(p, limits);
  if (p.size() == 0) return {};
  return CanonicalSearch(p).run();
}

std::string canonical_hash(const Poset& p, const Limits& limits) {
  const auto labeling = canonical_labeling(p, limits);
  std::vector<Edge> edges;
  for (auto [lo, hi] : p.hasse_edges()) edges.emplace_back(labeling[lo], labeling[hi]);
  std::sort(edges.begin(), edges.end());
  std::ostringstream s;
  s << "isoposet-poset-v1;n=" << p.size() << ';';
  for (auto [lo, hi] : edges) s << lo << '<' << hi << ';';
  return detail::sha256_hex(s.str());
}

}  // namespace isoposet
