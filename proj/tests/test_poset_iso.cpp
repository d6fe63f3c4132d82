#include <doctest.h>

#include <random>
#include <set>

#include "isoposet/catalog.hpp"
#include "isoposet/iso_poset.hpp"
#include "isoposet/poset.hpp"
#include "oracles.hpp"

using namespace isoposet;

namespace {

std::size_t distinct(const Coloring& c) { return std::set<std::size_t>(c.begin(), c.end()).size(); }

}  // namespace

TEST_CASE("Poset construction validates edges") {
  CHECK_NOTHROW(Poset(3, {{0, 1}, {1, 2}}));
  CHECK_THROWS_AS(Poset(3, {{0, 1}, {1, 2}, {0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(2, {{0, 1}, {0, 1}}), std::invalid_argument);
  const auto p = oracle::chain(4);
  CHECK(p.leq(0, 3));
  CHECK_FALSE(p.leq(3, 0));
  CHECK(p.height(3) == 3);
  CHECK(p.depth(0) == 3);
}

TEST_CASE("from_relation reduces to covers") {
  std::vector<std::vector<bool>> r(3, std::vector<bool>(3, true));
  r[1][0] = r[2][0] = r[2][1] = false;
  const auto p = Poset::from_relation(r);
  CHECK(p.hasse_edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  r[1][0] = true;
  CHECK_THROWS_AS(Poset::from_relation(r), std::invalid_argument);
}

TEST_CASE("refine examples") {
  CHECK(distinct(refine(Poset(4, {}))) == 1);
  CHECK(distinct(refine(oracle::chain(3))) == 3);
  // Diamond: the two middle nodes stay together.
  const Poset diamond(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  const auto c = refine(diamond);
  CHECK(distinct(c) == 3);
  CHECK(c[1] == c[2]);
  const auto a5 = build_iso_poset(psl2(5)).to_poset();
  const auto colors = refine(a5);
  const auto top = build_iso_poset(psl2(5)).top;
  CHECK(std::count(colors.begin(), colors.end(), colors[top]) == 1);
}

TEST_CASE("refine is label-equivariant") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = oracle::random_poset(7, 0.3, rng);
    const auto c = refine(p);
    CHECK(distinct(c) <= p.size());
    for (auto [lo, hi] : p.hasse_edges()) CHECK(p.height(lo) < p.height(hi));
  }
}

TEST_CASE("isomorphism examples") {
  CHECK(are_posets_isomorphic(oracle::chain(3), Poset(3, {{2, 1}, {1, 0}})));
  CHECK_FALSE(are_posets_isomorphic(oracle::chain(3), Poset(3, {{0, 1}, {0, 2}})));
  CHECK_FALSE(are_posets_isomorphic(Poset(3, {{0, 1}, {0, 2}}), Poset(3, {{0, 2}, {1, 2}})));
  CHECK(are_posets_isomorphic(build_iso_poset(cyclic(6)).to_poset(), build_iso_poset(cyclic(15)).to_poset()));
  CHECK(canonical_hash(build_iso_poset(cyclic(6)).to_poset()) == canonical_hash(build_iso_poset(cyclic(15)).to_poset()));
  CHECK(canonical_hash(oracle::chain(2)) != canonical_hash(Poset(2, {})));
}

TEST_CASE("labels restrict isomorphisms") {
  const Poset v(3, {{0, 1}, {0, 2}});
  const std::vector<std::size_t> a{0, 1, 2}, b{0, 2, 1}, c{0, 1, 1};
  const auto map = find_poset_isomorphism(v, v, {}, &a, &b);
  REQUIRE(map.has_value());
  CHECK((*map)[1] == 2);
  CHECK_FALSE(find_poset_isomorphism(v, v, {}, &a, &c).has_value());
}

TEST_CASE("poset isomorphism agrees with a brute-force oracle up to 8 nodes") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const double density = 0.15 + 0.1 * (trial % 5);
    const auto p = oracle::random_poset(n, density, rng);
    const auto q = trial % 3 == 0 ? oracle::relabel_poset(p, rng) : oracle::random_poset(n, density, rng);
    CAPTURE(trial);
    const bool expected = oracle::posets_isomorphic(p, q);
    const auto map = find_poset_isomorphism(p, q);
    CHECK(map.has_value() == expected);
    if (map) CHECK(is_order_isomorphism(p, q, *map));
    CHECK((canonical_hash(p) == canonical_hash(q)) == expected);
  }
}

TEST_CASE("canonical hash is invariant under relabeling") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = oracle::random_poset(4 + trial % 12, 0.25, rng);
    const auto q = oracle::relabel_poset(p, rng);
    CHECK(canonical_hash(p) == canonical_hash(q));
    const auto lab = canonical_labeling(p);
    CHECK(std::set<std::size_t>(lab.begin(), lab.end()).size() == p.size());
  }
}

TEST_CASE("poset node cap") {
  Limits small;
  small.poset_node_cap = 3;
  CHECK_THROWS_AS(canonical_hash(oracle::chain(5), small), ResourceError);
}
