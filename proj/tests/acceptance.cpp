// Acceptance suite: one PASS/FAIL line per criterion with its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "isoposet/catalog.hpp"
#include "isoposet/group_iso.hpp"
#include "isoposet/iso_poset.hpp"
#include "isoposet/subgroups.hpp"
#include "isoposet/verify.hpp"
#include "oracles.hpp"

using namespace isoposet;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int number, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = limit_s <= 0 || secs < limit_s;
  const bool pass = out.ok && in_time;
  if (!pass) ++failures;
  char limit[32] = "exact";
  if (limit_s > 0) std::snprintf(limit, sizeof limit, "exact, < %.0f s", limit_s);
  std::printf("%s  criterion %2d  %-58s  %8.3f s  (%s)  %s%s\n", pass ? "PASS" : "FAIL", number, title, secs, limit,
              out.detail.c_str(), in_time ? "" : "  [over time limit]");
  std::fflush(stdout);
}

std::vector<std::string> catalog_names(std::size_t max_order) {
  std::vector<std::string> out;
  for (auto order : curated_orders())
    if (order <= max_order)
      for (const auto& spec : catalog_for_order(order).groups) out.push_back(spec.name);
  return out;
}

double seconds(const std::function<void()>& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

int main() {
  criterion(1, "|psl2(5)|=60, |psl2(7)|=168, |sl2_5()|=120", 0, [] {
    std::size_t a = 0, b = 0, c = 0;
    const double ta = seconds([&] { a = psl2(5).order(); });
    const double tb = seconds([&] { b = psl2(7).order(); });
    const double tc = seconds([&] { c = sl2_5().order(); });
    char buf[160];
    std::snprintf(buf, sizeof buf, "orders %zu/%zu/%zu, closures %.4f/%.4f/%.4f s (each < 1 s)", a, b, c, ta, tb, tc);
    return Outcome{a == 60 && b == 168 && c == 120 && ta < 1 && tb < 1 && tc < 1, buf};
  });

  criterion(2, "psl2(5): 59 subgroups, 9 classes, maximal A4(5) D10(6) S3(10)", 10, [] {
    const auto g = psl2(5);
    const auto lattice = all_subgroups(g);
    const auto iso = build_iso_poset(g, lattice);
    const std::map<std::size_t, std::pair<FiniteGroup, std::size_t>> expected{
        {12, {alternating(4), 5}}, {10, {dihedral(10), 6}}, {6, {symmetric(3), 10}}};
    const auto maximal = maximal_nontop_classes(iso);
    bool ok = lattice.size() == 59 && iso.size() == 9 && maximal.size() == 3;
    std::string detail = std::to_string(lattice.size()) + " subgroups, " + std::to_string(iso.size()) + " classes;";
    for (const auto& node : maximal) {
      const auto it = expected.find(node.order);
      const bool match = it != expected.end() && it->second.second == node.class_size() &&
                         are_isomorphic(subgroup_as_group(g, node.representative()), it->second.first);
      ok = ok && match;
      detail += " " + node.label + "(order " + std::to_string(node.order) + ", " + std::to_string(node.class_size()) + ")";
    }
    return Outcome{ok, detail};
  });

  criterion(3, "every A4, D10, S3 subgroup of psl2(5) is maximal", 10, [] {
    const auto g = psl2(5);
    const auto lattice = all_subgroups(g);
    const std::vector<FiniteGroup> targets{alternating(4), dihedral(10), symmetric(3)};
    std::size_t checked = 0, maximal = 0;
    for (const auto& h : lattice.subgroups) {
      const auto hg = subgroup_as_group(g, h);
      bool target = false;
      for (const auto& t : targets) target = target || (t.order() == h.order() && are_isomorphic(hg, t));
      if (!target) continue;
      ++checked;
      maximal += is_maximal(g, h);
    }
    return Outcome{checked == 21 && maximal == checked,
                   std::to_string(maximal) + "/" + std::to_string(checked) + " pass is_maximal"};
  });

  criterion(4, "has_subgroup_of_order(psl2(5), 15) = false", 0, [] {
    const bool has = has_subgroup_of_order(psl2(5), 15);
    return Outcome{!has, has ? "found" : "none"};
  });

  criterion(5, "Iso(psl2(7)) maximal non-top classes have orders 24 and 21", 120, [] {
    const auto g = psl2(7);
    SubgroupLattice lattice;
    const double t = seconds([&] { lattice = all_subgroups(g); });
    const auto iso = build_iso_poset(g, lattice);
    std::multiset<std::size_t> orders;
    std::string detail = std::to_string(lattice.size()) + " subgroups enumerated in " + std::to_string(t) + " s;";
    for (const auto& node : maximal_nontop_classes(iso)) {
      orders.insert(node.order);
      detail += " " + node.label;
    }
    return Outcome{orders == std::multiset<std::size_t>{21, 24}, detail};
  });

  criterion(6, "S5, A5xZ2, SL(2,5) have no maximal subgroup of order 15", 60, [] {
    bool ok = true;
    std::string detail;
    for (const char* name : {"S5", "A5xZ2", "SL(2,5)"}) {
      const auto g = build(name);
      const auto lattice = all_subgroups(g);
      std::size_t of_order = 0, maximal = 0;
      for (std::size_t i = 0; i < lattice.size(); ++i)
        if (lattice.subgroups[i].order() == 15) {
          ++of_order;
          maximal += is_maximal(g, lattice.subgroups[i]);
        }
      ok = ok && maximal == 0;
      detail += std::string(name) + ": " + std::to_string(maximal) + " maximal of " + std::to_string(of_order) + "; ";
    }
    return Outcome{ok, detail};
  });

  criterion(7, "A5xA5: diagonal maximal, A5x1 isomorphic but not maximal", 300, [] {
    const auto claims = verify_remark();
    bool ok = claims.size() == 3;
    std::string detail;
    for (const auto& c : claims) {
      ok = ok && c.status == ClaimStatus::Verified;
      detail += c.id + "=" + std::string(to_string(c.status)) + " ";
      if (c.evidence.contains("intermediate_order")) {
        ok = ok && c.evidence["intermediate_order"] == 120;
        detail += "(witness order " + c.evidence["intermediate_order"].dump() + ") ";
      }
    }
    return Outcome{ok, detail};
  });

  criterion(8, "downset of every class = Iso of its representative, |G| <= 100", 0, [] {
    std::size_t groups = 0, nodes = 0, bad = 0;
    for (const auto& name : catalog_names(100)) {
      const auto g = build(name);
      const auto iso = build_iso_poset(g);
      ++groups;
      for (std::size_t v = 0; v < iso.size(); ++v) {
        ++nodes;
        const auto standalone = build_iso_poset(subgroup_as_group(g, iso.nodes[v].representative()));
        bad += !iso_posets_isomorphic(downset(iso, v), standalone);
      }
    }
    return Outcome{bad == 0 && groups > 0, std::to_string(groups) + " groups, " + std::to_string(nodes) +
                                               " nodes, " + std::to_string(bad) + " failures"};
  });

  criterion(9, "scan: psl2(5) digest unique at 60; Z6/Z15 collide", 0, [] {
    const auto r60 = scan({60});
    const auto a5_digest = canonical_hash(build_iso_poset(psl2(5)).to_poset());
    std::size_t same = 0;
    for (const auto& e : r60.entries) same += e.digest == a5_digest;
    const auto r = scan({6, 15});
    std::string z6, z15;
    for (const auto& e : r.entries) {
      if (e.name == "Z6") z6 = e.digest;
      if (e.name == "Z15") z15 = e.digest;
    }
    bool pair_ok = false;
    for (const auto& p : r.pairs)
      if ((p.a == "Z6" && p.b == "Z15") || (p.a == "Z15" && p.b == "Z6"))
        pair_ok = p.shapes_match && p.node_shapes_match && !p.isomorphic;
    const bool ok = same == 1 && !z6.empty() && z6 == z15 && pair_ok;
    return Outcome{ok, "A5 digest matches " + std::to_string(same) + " of " + std::to_string(r60.entries.size()) +
                           " order-60 entries; Z6/Z15 " + (z6 == z15 ? "collide" : "differ") +
                           (pair_ok ? ", shapes match, not isomorphic" : ", pair check failed")};
  });

  criterion(10, "property suites (axioms, poset oracle, group oracle, cross-check)", 0, [] {
    std::size_t axiom_bad = 0, posets = 0;
    std::size_t cross_bad = 0, lattices = 0;
    for (const auto& name : catalog_names(168)) {
      const auto g = build(name);
      const auto lattice = all_subgroups(g);
      const auto iso = build_iso_poset(g, lattice);
      ++posets;
      ++lattices;
      const std::size_t n = iso.size();
      const auto rel = oracle::relation(iso.to_poset());
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          if (rel[a][b] != iso.leq[a][b]) ++axiom_bad;
          if (a == b && !iso.leq[a][a]) ++axiom_bad;
          if (a != b && iso.leq[a][b] && iso.leq[b][a]) ++axiom_bad;
          if (iso.leq[a][b] && iso.nodes[b].order % iso.nodes[a].order) ++axiom_bad;
          for (std::size_t c = 0; c < n; ++c)
            if (iso.leq[a][b] && iso.leq[b][c] && !iso.leq[a][c]) ++axiom_bad;
        }
      std::map<std::size_t, std::size_t> elements, subs;
      for (ElementIndex x = 0; x < g.order(); ++x) ++elements[element_order(g, x)];
      for (const auto& h : lattice.subgroups) ++subs[h.order()];
      for (std::size_t p = 2; p <= g.order(); ++p)
        if (is_prime(p) && g.order() % p == 0 && elements[p] != subs[p] * (p - 1)) ++cross_bad;
      if (g.order() <= 12 && oracle::count_subgroups(g) != lattice.size()) ++cross_bad;
    }

    std::mt19937 rng(2024);
    std::size_t poset_bad = 0, poset_trials = 0;
    for (int trial = 0; trial < 400; ++trial, ++poset_trials) {
      const std::size_t n = 1 + trial % 8;
      const double density = 0.15 + 0.1 * (trial % 5);
      const auto p = oracle::random_poset(n, density, rng);
      const auto q = trial % 3 == 0 ? oracle::relabel_poset(p, rng) : oracle::random_poset(n, density, rng);
      const bool expected = oracle::posets_isomorphic(p, q);
      if (are_posets_isomorphic(p, q) != expected) ++poset_bad;
      if ((canonical_hash(p) == canonical_hash(q)) != expected) ++poset_bad;
    }

    std::size_t group_bad = 0, group_pairs = 0;
    std::map<std::size_t, std::vector<FiniteGroup>> by_order;
    for (const auto& name : catalog_names(24)) {
      const auto g = build(name);
      by_order[g.order()].push_back(g);
      by_order[g.order()].push_back(oracle::relabeled(g, rng));
    }
    by_order[16] = {direct_product(cyclic(4), cyclic(4)), direct_product(dihedral(8), cyclic(2)),
                    direct_product(quaternion8(), cyclic(2)), dihedral(16)};
    by_order[18] = {dihedral(18), direct_product(symmetric(3), cyclic(3)), direct_product(cyclic(9), cyclic(2))};
    for (const auto& [order, groups] : by_order)
      for (std::size_t i = 0; i < groups.size(); ++i)
        for (std::size_t j = i; j < groups.size(); ++j, ++group_pairs)
          if (are_isomorphic(groups[i], groups[j]) != oracle::groups_isomorphic(groups[i], groups[j])) ++group_bad;

    const std::size_t total = axiom_bad + poset_bad + group_bad + cross_bad;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "axioms %zu posets/%zu bad; poset oracle %zu trials/%zu bad; group oracle %zu pairs/%zu bad; "
                  "cross-check %zu lattices/%zu bad",
                  posets, axiom_bad, poset_trials, poset_bad, group_pairs, group_bad, lattices, cross_bad);
    return Outcome{total == 0, buf};
  });

  criterion(11, "composition_factors(sl2_5()) = {Z2, A5}; psl2(7) simple", 0, [] {
    const auto factors = composition_factors(sl2_5());
    const std::vector<Fingerprint> expected{fingerprint(cyclic(2)), fingerprint(psl2(5))};
    const bool simple = is_simple(psl2(7));
    std::string detail = "factor orders";
    for (const auto& f : factors) detail += " " + std::to_string(f.order);
    detail += simple ? "; psl2(7) simple" : "; psl2(7) not simple";
    return Outcome{factors == expected && simple, detail};
  });

  std::printf("%s: %d of 11 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
