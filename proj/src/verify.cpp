#include "isoposet/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

namespace isoposet {

std::string_view to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Verified: return "verified";
    case ClaimStatus::Refuted: return "refuted";
    case ClaimStatus::Skipped: return "skipped";
  }
  return "unknown";
}

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> registry = {
      {"chain.abelian-simple", "intro/abelian-simple-chain",
       "Iso(Z_p) is a chain of length 1 for every catalog prime p, so these posets coincide"},
      {"psl25.order-shape", "main-proof/psl25/order-shape", "|PSL(2,5)| has order shape p^2 q r"},
      {"psl25.maximal-classes", "main-proof/psl25/maximal-inventory",
       "maximal non-top classes of Iso(PSL(2,5)) are A4, D10, S3 (orders 12, 10, 6)"},
      {"psl25.all-copies-maximal", "main-proof/psl25/all-copies-maximal",
       "every subgroup isomorphic to A4, D10 or S3 is maximal"},
      {"psl25.no-subgroup-order-qr", "main-proof/psl25/no-hall-qr", "PSL(2,5) has no subgroup of order qr = 15"},
      {"psl25.not-solvable", "main-proof/psl25/not-solvable", "PSL(2,5) is not solvable"},
      {"psl25.unique-order-60", "main-proof/psl25/unique-nonsolvable",
       "A5 is the unique nonsolvable catalog group of order 60 and the unique one with Iso(PSL(2,5))"},
      {"psl27.order-shape", "main-proof/psl27/order-shape", "|PSL(2,7)| has order shape p^3 q r"},
      {"psl27.maximal-classes", "main-proof/psl27/maximal-inventory",
       "maximal non-top classes of Iso(PSL(2,7)) are S4 (order 24) and F21 (order 21)"},
      {"psl27.all-copies-maximal", "main-proof/psl27/all-copies-maximal",
       "every subgroup isomorphic to S4 or F21 is maximal"},
      {"psl27.four-divides", "main-proof/psl27/four-divides-simple-order",
       "4 divides |PSL(2,5)|, |PSL(2,7)| and the order of every nonabelian simple catalog group"},
      {"psl27.no-maximal-order-15", "main-proof/psl27/order-120-exclusion",
       "none of S5, A5xZ2, SL(2,5) has a maximal subgroup of order 15"},
      {"psl27.composition-factors", "main-proof/psl27/composition-factor",
       "S5, A5xZ2 and SL(2,5) have an A5 composition factor; PSL(2,7) is simple"},
      {"psl27.hall-order-note", "main-proof/psl27/no-hall-qr",
       "an order-qr Hall argument does not transfer to PSL(2,7)"},
      {"lemma.hypothesis", "lemma/hypothesis", "Iso(G0) and Iso(G) are isomorphic posets"},
      {"lemma.a", "lemma/a-downsets", "corresponding classes have isomorphic Iso posets"},
      {"lemma.b", "lemma/b-order-shape", "corresponding classes have equal order shapes"},
      {"lemma.c", "lemma/c-maximality", "classes of all-maximal subgroups map to classes of maximal subgroups"},
      {"remark.diagonal-maximal", "remark/diagonal-maximal", "the diagonal of A5xA5 is maximal"},
      {"remark.copy-isomorphic", "remark/copy-isomorphic", "A5x1 is isomorphic to the diagonal"},
      {"remark.copy-not-maximal", "remark/copy-not-maximal",
       "A5x1 is not maximal: an order-120 subgroup lies strictly between"},
  };
  return registry;
}

bool any_refuted(const std::vector<ClaimResult>& claims) {
  return std::any_of(claims.begin(), claims.end(),
                     [](const ClaimResult& c) { return c.status == ClaimStatus::Refuted; });
}

namespace {

ClaimResult run_claim(std::string_view id, const std::function<void(ClaimResult&)>& body) {
  const auto& registry = claim_registry();
  auto it = std::find_if(registry.begin(), registry.end(), [&](const ClaimInfo& c) { return c.id == id; });
  if (it == registry.end()) throw std::logic_error("unregistered claim " + std::string(id));
  ClaimResult result;
  result.id = it->id;
  result.anchor = it->anchor;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(result);
  } catch (const ResourceError& e) {
    result.status = ClaimStatus::Skipped;
    result.reason = std::string("resource limit: ") + e.what();
  }
  result.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

ClaimStatus status_of(bool ok) { return ok ? ClaimStatus::Verified : ClaimStatus::Refuted; }

nlohmann::json shape_json(const std::vector<unsigned>& shape) { return nlohmann::json(shape); }

// Which of the named groups (if any) the class representative is isomorphic to.
std::optional<std::string> match_named(const FiniteGroup& g, const IsoClassNode& node,
                                       const std::vector<std::pair<std::string, FiniteGroup>>& named,
                                       const Limits& limits) {
  const FiniteGroup standalone = subgroup_as_group(g, node.representative(), limits);
  for (const auto& [name, h] : named)
    if (h.order() == standalone.order() && are_isomorphic(standalone, h, limits)) return name;
  return std::nullopt;
}

struct Inventory {
  bool ok = true;
  nlohmann::json evidence = nlohmann::json::array();
};

// Checks maximal_nontop_classes against an expected set of (name, group).
Inventory maximal_inventory(const FiniteGroup& g, const IsoPoset& poset,
                            const std::vector<std::pair<std::string, FiniteGroup>>& expected,
                            const Limits& limits) {
  Inventory inv;
  const auto classes = maximal_nontop_classes(poset);
  std::vector<std::string> seen;
  for (const auto& node : classes) {
    auto name = match_named(g, node, expected, limits);
    inv.evidence.push_back({{"label", node.label},
                            {"order", node.order},
                            {"class_size", node.class_size()},
                            {"isomorphic_to", name ? nlohmann::json(*name) : nlohmann::json(nullptr)}});
    if (!name || std::find(seen.begin(), seen.end(), *name) != seen.end()) inv.ok = false;
    if (name) seen.push_back(*name);
  }
  if (classes.size() != expected.size()) inv.ok = false;
  return inv;
}

// Every subgroup in a class isomorphic to one of `named` passes is_maximal.
std::pair<bool, nlohmann::json> all_copies_maximal(const FiniteGroup& g, const IsoPoset& poset,
                                                   const std::vector<std::pair<std::string, FiniteGroup>>& named,
                                                   const Limits& limits) {
  bool ok = true;
  nlohmann::json evidence = nlohmann::json::array();
  std::vector<std::string> covered;
  for (const auto& node : poset.nodes) {
    if (node.id == poset.top) continue;
    auto name = match_named(g, node, named, limits);
    if (!name) continue;
    covered.push_back(*name);
    std::size_t maximal = 0;
    for (const auto& s : node.members)
      if (is_maximal(g, s)) ++maximal;
    evidence.push_back({{"class", *name}, {"copies", node.class_size()}, {"maximal", maximal}});
    if (maximal != node.class_size()) ok = false;
  }
  for (const auto& [name, h] : named)
    if (std::find(covered.begin(), covered.end(), name) == covered.end()) ok = false;
  return {ok, evidence};
}

}  // namespace

std::vector<ClaimResult> verify_abelian_chain(const VerifyContext& ctx) {
  return {run_claim("chain.abelian-simple", [&](ClaimResult& r) {
    bool ok = true;
    std::optional<std::string> reference;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t p : {2, 3, 5, 7, 11, 13}) {
      const auto poset = build_iso_poset(cyclic(p), ctx.limits, ctx.cache);
      const auto digest = canonical_hash(poset.to_poset(), ctx.limits);
      const bool chain = poset.size() == 2 && poset.hasse_edges.size() == 1;
      if (!reference) reference = digest;
      ok = ok && chain && digest == *reference;
      rows.push_back({{"group", "Z" + std::to_string(p)}, {"nodes", poset.size()}, {"digest", digest}});
    }
    r.status = status_of(ok);
    r.evidence = {{"groups", rows}};
  })};
}

std::vector<ClaimResult> verify_psl25(const VerifyContext& ctx) {
  const Limits& limits = ctx.limits;
  const FiniteGroup g = psl2(5);
  std::optional<SubgroupLattice> lattice;
  std::optional<IsoPoset> poset;
  auto ensure = [&] {
    if (!lattice) lattice = all_subgroups(g, limits, ctx.cache);
    if (!poset) poset = build_iso_poset(g, *lattice, limits);
  };
  const std::vector<std::pair<std::string, FiniteGroup>> maximals = {
      {"A4", alternating(4)}, {"D10", dihedral(10)}, {"S3", symmetric(3)}};

  std::vector<ClaimResult> out;
  out.push_back(run_claim("psl25.order-shape", [&](ClaimResult& r) {
    const auto shape = order_shape(g.order());
    r.status = status_of(g.order() == 60 && shape == std::vector<unsigned>{2, 1, 1});
    r.evidence = {{"order", g.order()}, {"shape", shape_json(shape)}};
  }));
  out.push_back(run_claim("psl25.maximal-classes", [&](ClaimResult& r) {
    ensure();
    auto inv = maximal_inventory(g, *poset, maximals, limits);
    r.status = status_of(inv.ok);
    r.evidence = {{"subgroups", lattice->size()}, {"classes", poset->size()}, {"maximal_classes", inv.evidence}};
  }));
  out.push_back(run_claim("psl25.all-copies-maximal", [&](ClaimResult& r) {
    ensure();
    auto [ok, evidence] = all_copies_maximal(g, *poset, maximals, limits);
    r.status = status_of(ok);
    r.evidence = {{"classes", evidence}};
  }));
  out.push_back(run_claim("psl25.no-subgroup-order-qr", [&](ClaimResult& r) {
    const bool exists = has_subgroup_of_order(g, 15, limits, ctx.cache);
    r.status = status_of(!exists);
    r.evidence = {{"order", 15}, {"exists", exists}};
  }));
  out.push_back(run_claim("psl25.not-solvable", [&](ClaimResult& r) {
    const auto series = derived_series(g);
    nlohmann::json orders = nlohmann::json::array();
    for (const auto& s : series) orders.push_back(s.order());
    r.status = status_of(series.back().order() != 1);
    r.evidence = {{"derived_series_orders", orders}};
  }));
  out.push_back(run_claim("psl25.unique-order-60", [&](ClaimResult& r) {
    ensure();
    const auto target = canonical_hash(poset->to_poset(), limits);
    const auto row = catalog_for_order(60);
    std::vector<std::string> nonsolvable, matching;
    for (const auto& spec : row.groups) {
      const FiniteGroup h = build(spec.name, limits);
      if (!is_solvable(h)) nonsolvable.push_back(spec.name);
      if (canonical_hash(build_iso_poset(h, limits, ctx.cache).to_poset(), limits) == target)
        matching.push_back(spec.name);
    }
    const bool ok = nonsolvable == std::vector<std::string>{"A5"} && matching == std::vector<std::string>{"A5"};
    r.status = status_of(ok);
    r.evidence = {{"scope", "catalog"},
                  {"catalog_entries", row.groups.size()},
                  {"catalog_complete", row.complete},
                  {"known_count", row.known_count ? nlohmann::json(*row.known_count) : nlohmann::json(nullptr)},
                  {"nonsolvable", nonsolvable},
                  {"iso_poset_matches", matching},
                  {"digest", target}};
  }));
  return out;
}

std::vector<ClaimResult> verify_psl27(const VerifyContext& ctx) {
  const Limits& limits = ctx.limits;
  const FiniteGroup g = psl2(7);
  std::optional<SubgroupLattice> lattice;
  std::optional<IsoPoset> poset;
  auto ensure = [&] {
    if (!lattice) lattice = all_subgroups(g, limits, ctx.cache);
    if (!poset) poset = build_iso_poset(g, *lattice, limits);
  };
  const std::vector<std::pair<std::string, FiniteGroup>> maximals = {{"S4", symmetric(4)}, {"F21", frobenius21()}};

  std::vector<ClaimResult> out;
  out.push_back(run_claim("psl27.order-shape", [&](ClaimResult& r) {
    const auto shape = order_shape(g.order());
    r.status = status_of(g.order() == 168 && shape == std::vector<unsigned>{3, 1, 1});
    r.evidence = {{"order", g.order()}, {"shape", shape_json(shape)}};
  }));
  out.push_back(run_claim("psl27.maximal-classes", [&](ClaimResult& r) {
    ensure();
    auto inv = maximal_inventory(g, *poset, maximals, limits);
    r.status = status_of(inv.ok);
    r.evidence = {{"subgroups", lattice->size()},
                  {"classes", poset->size()},
                  {"maximal_classes", inv.evidence},
                  {"note", "inventory checked against PSL(2,7)"}};
  }));
  out.push_back(run_claim("psl27.all-copies-maximal", [&](ClaimResult& r) {
    ensure();
    auto [ok, evidence] = all_copies_maximal(g, *poset, maximals, limits);
    r.status = status_of(ok);
    r.evidence = {{"classes", evidence}};
  }));
  out.push_back(run_claim("psl27.four-divides", [&](ClaimResult& r) {
    bool ok = g.order() % 4 == 0 && psl2(5).order() % 4 == 0;
    std::vector<std::string> simple;
    for (auto order : curated_orders()) {
      if (order > limits.enumeration_cap) continue;
      for (const auto& spec : catalog_for_order(order).groups) {
        const FiniteGroup h = build(spec.name, limits);
        if (is_abelian(h) || !is_simple(h, limits)) continue;
        simple.push_back(spec.name);
        if (h.order() % 4 != 0) ok = false;
      }
    }
    r.status = status_of(ok);
    r.evidence = {{"psl27_order", g.order()}, {"psl25_order", 60}, {"scope", "catalog"}, {"nonabelian_simple", simple}};
  }));
  out.push_back(run_claim("psl27.no-maximal-order-15", [&](ClaimResult& r) {
    bool ok = true;
    nlohmann::json rows = nlohmann::json::array();
    for (const char* name : {"S5", "A5xZ2", "SL(2,5)"}) {
      const FiniteGroup h = build(name, limits);
      const auto lat = all_subgroups(h, limits, ctx.cache);
      std::size_t maximal15 = 0;
      for (std::size_t i = 0; i < lat.size(); ++i)
        if (lat.maximal[i] && lat.subgroups[i].order() == 15) ++maximal15;
      const bool any15 = has_subgroup_of_order(h, 15, limits, ctx.cache);
      if (maximal15 != 0 || h.order() != 120) ok = false;
      rows.push_back({{"group", name}, {"order", h.order()}, {"maximal_of_order_15", maximal15},
                      {"any_subgroup_of_order_15", any15}});
    }
    r.status = status_of(ok);
    r.evidence = {{"groups", rows}};
  }));
  out.push_back(run_claim("psl27.composition-factors", [&](ClaimResult& r) {
    const Fingerprint a5 = fingerprint(alternating(5));
    const bool simple = is_simple(g, limits);
    bool ok = simple;
    nlohmann::json rows = nlohmann::json::array();
    for (const char* name : {"S5", "A5xZ2", "SL(2,5)"}) {
      const auto factors = composition_factors(build(name, limits), limits);
      const bool has_a5 = std::find(factors.begin(), factors.end(), a5) != factors.end();
      ok = ok && has_a5;
      nlohmann::json orders = nlohmann::json::array();
      for (const auto& f : factors) orders.push_back(f.order);
      rows.push_back({{"group", name}, {"factor_orders", orders}, {"has_A5_factor", has_a5}});
    }
    const auto own = composition_factors(g, limits);
    ok = ok && own.size() == 1 && own.front() == fingerprint(g);
    r.status = status_of(ok);
    r.evidence = {{"groups", rows}, {"psl27_simple", simple}, {"psl27_factor_count", own.size()}};
  }));
  out.push_back(run_claim("psl27.hall-order-note", [&](ClaimResult& r) {
    const bool has21 = has_subgroup_of_order(g, 21, limits, ctx.cache);
    const bool has56 = has_subgroup_of_order(g, 56, limits, ctx.cache);
    r.status = ClaimStatus::Skipped;
    r.reason = "PSL(2,7) contains F21 of order qr = 21, so no order-qr Hall argument applies; "
               "the missing Hall order is p^3 r = 56";
    r.evidence = {{"has_subgroup_of_order_21", has21}, {"has_subgroup_of_order_56", has56}};
  }));
  return out;
}

std::vector<ClaimResult> verify_lemma(std::string_view a, std::string_view b, const VerifyContext& ctx) {
  const Limits& limits = ctx.limits;
  const FiniteGroup g0 = build(a, limits);
  const FiniteGroup g1 = build(b, limits);
  std::optional<IsoPoset> p0, p1;
  std::optional<std::vector<std::size_t>> witness;
  std::vector<ClaimResult> out;

  out.push_back(run_claim("lemma.hypothesis", [&](ClaimResult& r) {
    p0 = build_iso_poset(g0, limits, ctx.cache);
    p1 = build_iso_poset(g1, limits, ctx.cache);
    witness = iso_poset_isomorphism(*p0, *p1, false, limits);
    r.evidence = {{"g0", a}, {"g", b}, {"nodes", {p0->size(), p1->size()}}, {"isomorphic", witness.has_value()}};
    if (witness) {
      nlohmann::json map = nlohmann::json::array();
      for (std::size_t v = 0; v < witness->size(); ++v)
        map.push_back({p0->nodes[v].label, p1->nodes[(*witness)[v]].label});
      r.evidence["witness"] = map;
      r.status = ClaimStatus::Verified;
    } else {
      r.status = ClaimStatus::Skipped;
      r.reason = "hypothesis not met: the Iso posets are not isomorphic";
    }
  }));

  auto part = [&](std::string_view id, const std::function<void(ClaimResult&)>& body) {
    out.push_back(run_claim(id, [&](ClaimResult& r) {
      if (!witness) {
        r.status = ClaimStatus::Skipped;
        r.reason = "hypothesis not met";
        return;
      }
      body(r);
    }));
  };

  part("lemma.a", [&](ClaimResult& r) {
    std::size_t checked = 0, failures = 0;
    for (std::size_t v = 0; v < p0->size(); ++v) {
      const std::size_t w = (*witness)[v];
      const bool downsets = iso_posets_isomorphic(downset(*p0, v), downset(*p1, w), false, limits);
      const auto h0 = build_iso_poset(subgroup_as_group(g0, p0->nodes[v].representative(), limits), limits);
      const auto h1 = build_iso_poset(subgroup_as_group(g1, p1->nodes[w].representative(), limits), limits);
      const bool standalone = iso_posets_isomorphic(h0, h1, false, limits);
      ++checked;
      if (!downsets || !standalone) ++failures;
    }
    r.status = status_of(failures == 0);
    r.evidence = {{"classes_checked", checked}, {"failures", failures}};
  });
  part("lemma.b", [&](ClaimResult& r) {
    std::size_t failures = 0;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t v = 0; v < p0->size(); ++v) {
      const auto& x = p0->nodes[v];
      const auto& y = p1->nodes[(*witness)[v]];
      if (x.shape != y.shape) ++failures;
      rows.push_back({{"g0_class", x.label}, {"g0_order", x.order}, {"g_class", y.label}, {"g_order", y.order},
                      {"shape", shape_json(x.shape)}, {"image_shape", shape_json(y.shape)}});
    }
    r.status = status_of(failures == 0);
    r.evidence = {{"classes", rows}, {"failures", failures}};
  });
  part("lemma.c", [&](ClaimResult& r) {
    std::size_t premises = 0, failures = 0;
    for (std::size_t v = 0; v < p0->size(); ++v) {
      if (!p0->nodes[v].all_members_maximal) continue;
      ++premises;
      const auto& image = p1->nodes[(*witness)[v]];
      for (const auto& s : image.members)
        if (!is_maximal(g1, s)) {
          ++failures;
          break;
        }
    }
    r.status = status_of(failures == 0);
    r.evidence = {{"all_maximal_classes", premises}, {"failures", failures}};
  });
  return out;
}

std::vector<ClaimResult> verify_remark(const VerifyContext& ctx) {
  const Limits& limits = ctx.limits;
  const FiniteGroup a5 = alternating(5);
  const FiniteGroup g = direct_product(a5, a5, limits);
  const std::size_t d = a5.degree();

  auto lift = [&](const Permutation& x, const Permutation& y) {
    std::vector<Point> images(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
      images[i] = x(static_cast<Point>(i));
      images[d + i] = static_cast<Point>(d + y(static_cast<Point>(i)));
    }
    return *g.index_of(Permutation(std::move(images)));
  };
  const Permutation id = Permutation::identity(d);
  std::vector<ElementIndex> diagonal_gens, copy_gens;
  for (const auto& s : a5.generators()) {
    diagonal_gens.push_back(lift(s, s));
    copy_gens.push_back(lift(s, id));
  }
  const Subgroup diagonal = generate(g, diagonal_gens);
  const Subgroup copy = generate(g, copy_gens);

  std::vector<ClaimResult> out;
  out.push_back(run_claim("remark.diagonal-maximal", [&](ClaimResult& r) {
    const bool maximal = is_maximal(g, diagonal);
    r.status = status_of(maximal && diagonal.order() == 60);
    r.evidence = {{"group_order", g.order()}, {"diagonal_order", diagonal.order()}, {"maximal", maximal}};
  }));
  out.push_back(run_claim("remark.copy-isomorphic", [&](ClaimResult& r) {
    const FiniteGroup m = subgroup_as_group(g, diagonal, limits);
    const FiniteGroup m_prime = subgroup_as_group(g, copy, limits);
    const bool iso = are_isomorphic(m_prime, m, limits);
    const bool to_a5 = are_isomorphic(m, a5, limits);
    r.status = status_of(iso && to_a5);
    r.evidence = {{"copy_order", copy.order()}, {"copy_isomorphic_to_diagonal", iso}, {"diagonal_isomorphic_to_A5", to_a5}};
  }));
  out.push_back(run_claim("remark.copy-not-maximal", [&](ClaimResult& r) {
    // Extend A5x1 by (1, t) with t an involution of the second factor.
    std::optional<ElementIndex> involution;
    for (ElementIndex x = 1; x < a5.order() && !involution; ++x)
      if (element_order(a5, x) == 2) involution = x;
    std::vector<ElementIndex> gens = copy_gens;
    gens.push_back(lift(id, a5.element(*involution)));
    const Subgroup middle = generate(g, gens);
    const bool strictly_between = copy.is_subset_of(middle) && copy.order() < middle.order() &&
                                  middle.order() < g.order();
    const bool maximal = is_maximal(g, copy);
    r.status = status_of(!maximal && strictly_between && middle.order() == 120);
    r.evidence = {{"copy_maximal", maximal},
                  {"intermediate_order", middle.order()},
                  {"intermediate_strict", strictly_between},
                  {"extra_generator", g.element(gens.back()).to_cycle_string()}};
  }));
  return out;
}

std::vector<ClaimResult> verify_all(const VerifyContext& ctx) {
  std::vector<ClaimResult> all = verify_abelian_chain(ctx);
  for (auto&& part : {verify_psl25(ctx), verify_psl27(ctx), verify_lemma("PSL(2,5)", "A5", ctx), verify_remark(ctx)})
    all.insert(all.end(), part.begin(), part.end());
  return all;
}

ScanReport scan(const std::vector<std::size_t>& orders, const VerifyContext& ctx) {
  const Limits& limits = ctx.limits;
  ScanReport report;
  std::map<std::string, std::size_t> class_index;
  std::map<std::string, IsoPoset> posets;
  std::map<std::string, FiniteGroup> groups;
  for (auto order : orders) {
    const auto row = catalog_for_order(order);
    report.orders.push_back(row);
    for (const auto& spec : row.groups) {
      ScanEntry entry;
      entry.name = spec.name;
      entry.order = spec.order;
      entry.shape = order_shape(spec.order);
      try {
        const FiniteGroup g = build(spec.name, limits);
        IsoPoset poset = build_iso_poset(g, limits, ctx.cache);
        entry.digest = canonical_hash(poset.to_poset(), limits);
        entry.nodes = poset.size();
        posets.emplace(spec.name, std::move(poset));
        groups.emplace(spec.name, g);
      } catch (const ResourceError& e) {
        entry.error = e.what();
      }
      if (!entry.error) {
        auto [it, inserted] = class_index.emplace(entry.digest, report.classes.size());
        if (inserted) report.classes.push_back({entry.digest, {}});
        report.classes[it->second].members.push_back(entry.name);
      }
      report.entries.push_back(std::move(entry));
    }
  }
  for (const auto& cls : report.classes) {
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.members.size(); ++j) {
        const auto& a = cls.members[i];
        const auto& b = cls.members[j];
        ScanPair pair;
        pair.a = a;
        pair.b = b;
        pair.shapes_match = order_shape(groups.at(a).order()) == order_shape(groups.at(b).order());
        pair.node_shapes_match = iso_posets_isomorphic(posets.at(a), posets.at(b), true, limits);
        pair.isomorphic = groups.at(a).order() == groups.at(b).order() &&
                          are_isomorphic(groups.at(a), groups.at(b), limits);
        report.pairs.push_back(std::move(pair));
      }
    }
  }
  return report;
}

}  // namespace isoposet
