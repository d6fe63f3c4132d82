// isoposet: subgroup lattices, Iso posets, and the recognition checks for
// PSL(2,5) and PSL(2,7).

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isoposet/verify.hpp"

namespace {

using namespace isoposet;

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) values.push_back(static_cast<std::size_t>(std::stoull(item)));
  return values;
}

nlohmann::json fingerprint_json(const Fingerprint& fp) {
  return {{"order", fp.order},
          {"abelian", fp.abelian},
          {"exponent", fp.exponent},
          {"order_histogram", fp.order_histogram},
          {"center_size", fp.center_size},
          {"derived_size", fp.derived_size},
          {"class_sizes", fp.class_sizes}};
}

int group_command(const std::string& spec, const std::string& action, const std::string& format,
                  const VerifyContext& ctx) {
  const FiniteGroup g = build(spec, ctx.limits);
  if (action == "info") {
    const Fingerprint fp = fingerprint(g);
    const bool enumerable = g.order() <= ctx.limits.enumeration_cap;
    nlohmann::json info = {{"fingerprint", fingerprint_json(fp)}, {"solvable", is_solvable(g)}};
    if (enumerable) {
      info["simple"] = is_simple(g, ctx.limits);
      nlohmann::json factors = nlohmann::json::array();
      for (const auto& f : composition_factors(g, ctx.limits)) factors.push_back(f.order);
      info["composition_factor_orders"] = factors;
    }
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& p : g.generators()) gens.push_back(p.to_cycle_string());
    info["generators"] = gens;
    if (format == "json") {
      auto report = report_json(group_json(spec, g), nullptr, nullptr, {});
      report["info"] = info;
      std::cout << report.dump(2) << '\n';
    } else {
      std::cout << spec << ": order " << g.order() << ", degree " << g.degree() << '\n';
      for (auto& [key, value] : info.items()) std::cout << "  " << key << ": " << value.dump() << '\n';
    }
    return 0;
  }
  if (action == "subgroups") {
    const auto lattice = all_subgroups(g, ctx.limits, ctx.cache);
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      const auto& s = lattice.subgroups[i];
      nlohmann::json gens = nlohmann::json::array();
      for (auto x : s.generators()) gens.push_back(g.element(x).to_cycle_string());
      rows.push_back({{"index", i}, {"order", s.order()}, {"maximal", static_cast<bool>(lattice.maximal[i])},
                      {"normal", is_normal(g, s)}, {"generators", gens}});
    }
    if (format == "json") {
      auto report = report_json(group_json(spec, g), nullptr, nullptr, {});
      report["subgroups"] = rows;
      std::cout << report.dump(2) << '\n';
    } else {
      std::cout << spec << ": " << lattice.size() << " subgroups\n";
      for (const auto& row : rows)
        std::cout << "  [" << row["index"] << "] order=" << row["order"] << (row["maximal"].get<bool>() ? " maximal" : "")
                  << (row["normal"].get<bool>() ? " normal" : "") << " gens=" << row["generators"].dump() << '\n';
    }
    return 0;
  }
  if (action == "isoposet") {
    const auto poset = build_iso_poset(g, ctx.limits, ctx.cache);
    const auto digest = canonical_hash(poset.to_poset(), ctx.limits);
    if (format == "json") {
      std::cout << report_json(group_json(spec, g), poset_json(poset), digest, {}).dump(2) << '\n';
    } else if (format == "dot") {
      std::cout << poset_dot(poset, spec);
    } else {
      std::cout << "Iso(" << spec << "): " << poset_text(poset) << "digest " << digest << '\n';
    }
    return 0;
  }
  std::cerr << "unknown group action '" << action << "' (expected info, subgroups or isoposet)\n";
  return 2;
}

int poset_iso_command(const std::string& a, const std::string& b, bool strict, const std::string& format,
                      const VerifyContext& ctx) {
  const FiniteGroup ga = build(a, ctx.limits);
  const FiniteGroup gb = build(b, ctx.limits);
  const auto pa = build_iso_poset(ga, ctx.limits, ctx.cache);
  const auto pb = build_iso_poset(gb, ctx.limits, ctx.cache);
  const auto witness = iso_poset_isomorphism(pa, pb, strict, ctx.limits);
  if (format == "json") {
    nlohmann::json map = nullptr;
    if (witness) map = *witness;
    nlohmann::json out = {
        {"a", report_json(group_json(a, ga), poset_json(pa), canonical_hash(pa.to_poset(), ctx.limits), {})},
        {"b", report_json(group_json(b, gb), poset_json(pb), canonical_hash(pb.to_poset(), ctx.limits), {})},
        {"strict", strict},
        {"isomorphic", witness.has_value()},
        {"witness", map}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "Iso(" << a << ") " << (witness ? "~=" : "!~=") << " Iso(" << b << ")\n";
    if (witness)
      for (std::size_t v = 0; v < witness->size(); ++v)
        std::cout << "  " << pa.nodes[v].label << " -> " << pb.nodes[(*witness)[v]].label << '\n';
  }
  return 0;
}

int verify_command(const std::string& target, const std::vector<std::string>& args, const std::string& format,
                   const VerifyContext& ctx) {
  std::vector<ClaimResult> claims;
  nlohmann::json group = nullptr, poset = nullptr, digest = nullptr;
  auto attach = [&](const char* name, const FiniteGroup& g) {
    const auto p = build_iso_poset(g, ctx.limits, ctx.cache);
    group = group_json(name, g);
    poset = poset_json(p);
    digest = canonical_hash(p.to_poset(), ctx.limits);
  };
  if (target == "psl25") {
    claims = verify_psl25(ctx);
    attach("PSL(2,5)", psl2(5));
  } else if (target == "psl27") {
    claims = verify_psl27(ctx);
    attach("PSL(2,7)", psl2(7));
  } else if (target == "lemma") {
    if (args.size() != 2) {
      std::cerr << "verify lemma needs two group names\n";
      return 2;
    }
    claims = verify_lemma(args[0], args[1], ctx);
  } else if (target == "remark") {
    claims = verify_remark(ctx);
  } else if (target == "chain") {
    claims = verify_abelian_chain(ctx);
  } else if (target == "all") {
    claims = verify_all(ctx);
  } else {
    std::cerr << "unknown verify target '" << target << "'\n";
    return 2;
  }
  if (format == "json") {
    std::cout << report_json(group, poset, digest, claims).dump(2) << '\n';
  } else {
    std::cout << claims_text(claims);
    std::size_t refuted = 0, skipped = 0;
    for (const auto& c : claims) {
      refuted += c.status == ClaimStatus::Refuted;
      skipped += c.status == ClaimStatus::Skipped;
    }
    std::cout << claims.size() << " claims, " << refuted << " refuted, " << skipped << " skipped\n";
  }
  return any_refuted(claims) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iso posets of finite groups and recognition checks for PSL(2,5) and PSL(2,7)"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string cache_dir;
  std::string caps;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--cache-dir", cache_dir, "Lattice cache directory")->envname("ISOPOSET_CACHE_DIR");
  app.add_option("--caps", caps, "Enumeration and isomorphism caps, e.g. 400,400");

  auto* group = app.add_subcommand("group", "Inspect one group")->fallthrough();
  std::string group_spec, group_action = "info";
  group->add_option("spec", group_spec, "Group name, e.g. A5, PSL(2,7), S3xD10")->required();
  group->add_option("action", group_action, "info | subgroups | isoposet");

  auto* poset_iso = app.add_subcommand("poset-iso", "Compare Iso posets of two groups")->fallthrough();
  std::string spec_a, spec_b;
  bool strict = false;
  poset_iso->add_option("a", spec_a)->required();
  poset_iso->add_option("b", spec_b)->required();
  poset_iso->add_flag("--strict", strict, "Also match order shapes node by node");

  auto* verify = app.add_subcommand("verify", "Run recognition checks")->fallthrough();
  std::string target;
  std::vector<std::string> verify_args;
  verify->add_option("target", target, "psl25 | psl27 | lemma <A> <B> | remark | chain | all")->required();
  verify->add_option("groups", verify_args, "Group names for lemma");

  auto* scan_cmd = app.add_subcommand("scan", "Iso-poset collision scan over the catalog")->fallthrough();
  std::string orders = "60,120";
  scan_cmd->add_option("--orders", orders, "Comma-separated orders");

  CLI11_PARSE(app, argc, argv);

  try {
    VerifyContext ctx;
    if (!caps.empty()) {
      const auto values = parse_list(caps);
      if (values.size() != 2) throw std::invalid_argument("--caps expects <enum-cap>,<iso-cap>");
      ctx.limits.enumeration_cap = values[0];
      ctx.limits.iso_cap = values[1];
    }
    std::optional<LatticeCache> cache;
    if (!cache_dir.empty()) {
      cache.emplace(cache_dir);
      ctx.cache = &*cache;
    }

    if (*group) return group_command(group_spec, group_action, format, ctx);
    if (*poset_iso) return poset_iso_command(spec_a, spec_b, strict, format, ctx);
    if (*verify) return verify_command(target, verify_args, format, ctx);
    if (*scan_cmd) {
      const auto report = scan(parse_list(orders), ctx);
      if (format == "json") std::cout << scan_json(report).dump(2) << '\n';
      else std::cout << scan_text(report);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "isoposet: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
