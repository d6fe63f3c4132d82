#include <doctest.h>

#include <map>
#include <set>

#include "isoposet/catalog.hpp"
#include "isoposet/group_iso.hpp"
#include "isoposet/iso_poset.hpp"
#include "isoposet/subgroups.hpp"
#include "oracles.hpp"

using namespace isoposet;

namespace {

std::vector<std::string> catalog_names(std::size_t max_order) {
  std::vector<std::string> out;
  for (auto order : curated_orders())
    if (order <= max_order)
      for (const auto& spec : catalog_for_order(order).groups) out.push_back(spec.name);
  return out;
}

std::map<std::size_t, std::size_t> maximal_orders(const IsoPoset& p) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& node : maximal_nontop_classes(p)) out[node.order] = node.class_size();
  return out;
}

}  // namespace

TEST_CASE("prime cyclic groups give a two-element chain") {
  for (std::size_t p : {2u, 3u, 5u, 7u, 13u}) {
    const auto iso = build_iso_poset(cyclic(p));
    CHECK(iso.size() == 2);
    CHECK(iso.hasse_edges == std::vector<Edge>{{iso.bottom, iso.top}});
  }
  const auto trivial = build_iso_poset(cyclic(1));
  CHECK(trivial.size() == 1);
  CHECK(trivial.bottom == trivial.top);
}

TEST_CASE("Iso(A5) examples") {
  const auto iso = build_iso_poset(psl2(5));
  CHECK(iso.size() == 9);
  CHECK(iso.hasse_edges.size() == 13);
  CHECK(maximal_orders(iso) == std::map<std::size_t, std::size_t>{{6, 10}, {10, 6}, {12, 5}});
  for (const auto& node : maximal_nontop_classes(iso)) CHECK(node.all_members_maximal);
  CHECK(iso.nodes[iso.top].label == "A5");
  CHECK(iso.nodes[iso.bottom].order == 1);
}

TEST_CASE("Iso(Z6) is a diamond") {
  const auto iso = build_iso_poset(cyclic(6));
  const Poset diamond(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(are_posets_isomorphic(iso.to_poset(), diamond));
  CHECK(maximal_orders(iso) == std::map<std::size_t, std::size_t>{{2, 1}, {3, 1}});
}

TEST_CASE("Iso(PSL(2,7)) maximal classes") {
  const auto iso = build_iso_poset(psl2(7));
  CHECK(maximal_orders(iso) == std::map<std::size_t, std::size_t>{{21, 8}, {24, 14}});
  for (const auto& node : maximal_nontop_classes(iso)) CHECK(node.all_members_maximal);
}

TEST_CASE("order is existential containment, not representative containment") {
  const auto g = psl2(5);
  const auto iso = build_iso_poset(g);
  std::size_t nested_only_elsewhere = 0;
  for (std::size_t a = 0; a < iso.size(); ++a)
    for (std::size_t b = 0; b < iso.size(); ++b) {
      bool some = false;
      for (const auto& x : iso.nodes[a].members)
        for (const auto& y : iso.nodes[b].members) some = some || x.is_subset_of(y);
      CHECK(iso.leq[a][b] == some);
      if (some && !iso.nodes[a].representative().is_subset_of(iso.nodes[b].representative())) ++nested_only_elsewhere;
    }
  CHECK(nested_only_elsewhere > 0);
}

TEST_CASE("downset examples") {
  const auto a5 = build_iso_poset(psl2(5));
  CHECK(iso_posets_isomorphic(downset(a5, a5.top), a5));
  CHECK(downset(a5, a5.bottom).size() == 1);
  for (std::size_t v = 0; v < a5.size(); ++v)
    if (a5.nodes[v].order == 12) CHECK(iso_posets_isomorphic(downset(a5, v), build_iso_poset(alternating(4))));
  const auto chain = build_iso_poset(cyclic(5));
  const auto below = maximal_nontop_classes(chain);
  REQUIRE(below.size() == 1);
  CHECK(below[0].order == 1);
}

TEST_CASE("poset axioms and order divisibility on every catalog Iso poset") {
  for (const auto& name : catalog_names(168)) {
    const auto g = build(name);
    const auto iso = build_iso_poset(g);
    CAPTURE(name);
    const std::size_t n = iso.size();
    CHECK(iso.nodes[iso.bottom].order == 1);
    CHECK(iso.nodes[iso.top].order == g.order());
    const auto rel = oracle::relation(iso.to_poset());
    for (std::size_t a = 0; a < n; ++a) {
      CHECK(iso.leq[a][a]);
      CHECK(iso.leq[iso.bottom][a]);
      CHECK(iso.leq[a][iso.top]);
      for (std::size_t b = 0; b < n; ++b) {
        CHECK(rel[a][b] == iso.leq[a][b]);
        if (a != b && iso.leq[a][b]) {
          CHECK_FALSE(iso.leq[b][a]);
          CHECK(iso.nodes[b].order % iso.nodes[a].order == 0);
          CHECK(iso.nodes[a].order < iso.nodes[b].order);
        }
        for (std::size_t c = 0; c < n; ++c)
          if (iso.leq[a][b] && iso.leq[b][c]) CHECK(iso.leq[a][c]);
      }
    }
    std::size_t members = 0;
    for (const auto& node : iso.nodes) members += node.class_size();
    CHECK(members == all_subgroups(g).size());
  }
}

TEST_CASE("every class member is maximal implies the class is maximal non-top") {
  for (const auto& name : catalog_names(168)) {
    const auto iso = build_iso_poset(build(name));
    std::set<std::size_t> max_ids;
    for (const auto& node : maximal_nontop_classes(iso)) max_ids.insert(node.id);
    for (const auto& node : iso.nodes)
      if (node.all_members_maximal) CHECK(max_ids.count(node.id));
  }
}

TEST_CASE("downset of a class is its representative's Iso poset") {
  for (const auto& name : catalog_names(100)) {
    const auto g = build(name);
    const auto iso = build_iso_poset(g);
    CAPTURE(name);
    for (std::size_t v = 0; v < iso.size(); ++v) {
      const auto down = downset(iso, v);
      const auto standalone = build_iso_poset(subgroup_as_group(g, iso.nodes[v].representative()));
      CAPTURE(v);
      CHECK(iso_posets_isomorphic(down, standalone));
      CHECK(iso_posets_isomorphic(down, standalone, true));
    }
  }
}

TEST_CASE("strict mode distinguishes order shapes") {
  const auto a = build_iso_poset(cyclic(4));
  const auto b = build_iso_poset(cyclic(9));
  CHECK(iso_posets_isomorphic(a, b));
  CHECK(iso_posets_isomorphic(a, b, true));
  const auto c = build_iso_poset(cyclic(6));
  const auto d = build_iso_poset(direct_product(cyclic(2), cyclic(2)));
  CHECK_FALSE(iso_posets_isomorphic(c, d));
}
