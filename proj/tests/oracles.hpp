#pragma once

// Brute-force references used only by tests. None of these share code paths
// with the library routines they check.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "isoposet/catalog.hpp"
#include "isoposet/poset.hpp"

namespace oracle {

using isoposet::ElementIndex;
using isoposet::FiniteGroup;

// Multiplication table via raw composition, independent of the group's own
// multiply().
inline std::vector<std::vector<std::size_t>> table(const FiniteGroup& g) {
  const auto& els = g.elements();
  std::map<std::vector<isoposet::Point>, std::size_t> index;
  for (std::size_t i = 0; i < els.size(); ++i)
    index[std::vector<isoposet::Point>(els[i].images().begin(), els[i].images().end())] = i;
  std::vector<std::vector<std::size_t>> t(els.size(), std::vector<std::size_t>(els.size()));
  for (std::size_t a = 0; a < els.size(); ++a)
    for (std::size_t b = 0; b < els.size(); ++b) {
      std::vector<isoposet::Point> img(g.degree());
      for (std::size_t x = 0; x < g.degree(); ++x) img[x] = els[b](els[a](static_cast<isoposet::Point>(x)));
      t[a][b] = index.at(img);
    }
  return t;
}

inline std::vector<std::size_t> orders(const std::vector<std::vector<std::size_t>>& t) {
  std::vector<std::size_t> out(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) {
    std::size_t k = 1, y = x;
    while (y != 0) {
      y = t[y][x];
      ++k;
    }
    out[x] = k;
  }
  return out;
}

// Exhaustive search over bijections fixing the identity, element by element,
// restricted to order-preserving assignments. Every partial assignment is
// checked against all products among assigned elements.
inline bool groups_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return false;
  const auto tg = table(g), th = table(h);
  const auto og = orders(tg), oh = orders(th);
  {
    auto a = og, b = oh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  const std::size_t n = g.order();
  constexpr std::size_t kNone = ~std::size_t{0};
  std::vector<std::size_t> phi(n, kNone);
  std::vector<bool> used(n, false);
  phi[0] = 0;
  used[0] = true;
  auto ok = [&](std::size_t x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (phi[y] == kNone) continue;
      for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
        const std::size_t p = tg[a][b];
        if (phi[p] != kNone && phi[p] != th[phi[a]][phi[b]]) return false;
        if (phi[p] == kNone && used[th[phi[a]][phi[b]]]) return false;
      }
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t x) -> bool {
    if (x == n) return true;
    if (phi[x] != kNone) return self(self, x + 1);
    for (std::size_t y = 1; y < n; ++y) {
      if (used[y] || oh[y] != og[x]) continue;
      phi[x] = y;
      used[y] = true;
      if (ok(x) && self(self, x + 1)) return true;
      phi[x] = kNone;
      used[y] = false;
    }
    return false;
  };
  return search(search, 1);
}

// Number of subsets containing the identity that are closed under products.
inline std::size_t count_subgroups(const FiniteGroup& g) {
  const auto t = table(g);
  const std::size_t n = g.order();
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    const std::uint64_t set = (mask << 1) | 1u;
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a) {
      if (!((set >> a) & 1u)) continue;
      for (std::size_t b = 0; b < n && closed; ++b)
        if (((set >> b) & 1u) && !((set >> t[a][b]) & 1u)) closed = false;
    }
    if (closed) ++count;
  }
  return count;
}

// A copy of g on relabeled points with shuffled generators.
inline FiniteGroup relabeled(const FiniteGroup& g, std::mt19937& rng) {
  std::vector<isoposet::Point> perm(g.degree());
  std::iota(perm.begin(), perm.end(), isoposet::Point{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  const isoposet::Permutation relabel(perm);
  const auto inv = relabel.inverse();
  std::vector<isoposet::Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(isoposet::compose(isoposet::compose(inv, s), relabel));
  std::shuffle(gens.begin(), gens.end(), rng);
  return FiniteGroup::closure(g.degree(), std::move(gens));
}

// Full order relation of a poset, recomputed from edges by Floyd-Warshall.
inline std::vector<std::vector<bool>> relation(const isoposet::Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) r[v][v] = true;
  for (auto [lo, hi] : p.hasse_edges()) r[lo][hi] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

// Tries every bijection.
inline bool posets_isomorphic(const isoposet::Poset& p, const isoposet::Poset& q) {
  if (p.size() != q.size()) return false;
  const auto rp = relation(p), rq = relation(q);
  std::vector<std::size_t> map(p.size());
  std::iota(map.begin(), map.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t a = 0; a < p.size() && ok; ++a)
      for (std::size_t b = 0; b < p.size() && ok; ++b)
        if (rp[a][b] != rq[map[a]][map[b]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(map.begin(), map.end()));
  return false;
}

// Random poset: random upward edges over a random linear extension, then
// closed and reduced.
inline isoposet::Poset random_poset(std::size_t n, double density, std::mt19937& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution edge(density);
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[perm[i]][perm[i]] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) r[perm[i]][perm[j]] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return isoposet::Poset::from_relation(r);
}

inline isoposet::Poset relabel_poset(const isoposet::Poset& p, std::mt19937& rng) {
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<isoposet::Edge> edges;
  for (auto [lo, hi] : p.hasse_edges()) edges.emplace_back(perm[lo], perm[hi]);
  return isoposet::Poset(p.size(), std::move(edges));
}

inline isoposet::Poset chain(std::size_t n) {
  std::vector<isoposet::Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return isoposet::Poset(n, edges);
}

}  // namespace oracle
