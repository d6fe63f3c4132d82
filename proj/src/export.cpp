#include <sstream>

#include "isoposet/verify.hpp"

namespace isoposet {

nlohmann::json group_json(std::string_view name, const FiniteGroup& g) {
  return {{"name", name}, {"order", g.order()}, {"degree", g.degree()}};
}

nlohmann::json poset_json(const IsoPoset& p) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : p.nodes)
    nodes.push_back({{"id", n.id},
                     {"label", n.label},
                     {"order", n.order},
                     {"shape", n.shape},
                     {"class_size", n.class_size()},
                     {"all_maximal", n.all_members_maximal}});
  nlohmann::json edges = nlohmann::json::array();
  for (auto [lo, hi] : p.hasse_edges) edges.push_back({lo, hi});
  return {{"nodes", nodes}, {"hasse_edges", edges}};
}

nlohmann::json claim_json(const ClaimResult& c) {
  nlohmann::json j = {{"id", c.id}, {"anchor", c.anchor}, {"status", to_string(c.status)}, {"evidence", c.evidence}};
  j["reason"] = c.reason.empty() ? nlohmann::json(nullptr) : nlohmann::json(c.reason);
  j["wall_ms"] = c.wall_ms;
  return j;
}

nlohmann::json report_json(const nlohmann::json& group, const nlohmann::json& poset, const nlohmann::json& digest,
                           const std::vector<ClaimResult>& claims) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : claims) list.push_back(claim_json(c));
  return {{"group", group}, {"poset", poset}, {"digest", digest}, {"claims", list}};
}

nlohmann::json scan_json(const ScanReport& report) {
  nlohmann::json orders = nlohmann::json::array();
  for (const auto& row : report.orders)
    orders.push_back({{"order", row.order},
                      {"curated", row.curated},
                      {"complete", row.complete},
                      {"known_count", row.known_count ? nlohmann::json(*row.known_count) : nlohmann::json(nullptr)},
                      {"entries", row.groups.size()}});
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries)
    entries.push_back({{"name", e.name},
                       {"order", e.order},
                       {"shape", e.shape},
                       {"digest", e.error ? nlohmann::json(nullptr) : nlohmann::json(e.digest)},
                       {"nodes", e.nodes},
                       {"error", e.error ? nlohmann::json(*e.error) : nlohmann::json(nullptr)}});
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : report.classes) classes.push_back({{"digest", c.digest}, {"members", c.members}});
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : report.pairs)
    pairs.push_back({{"a", p.a},
                     {"b", p.b},
                     {"shapes_match", p.shapes_match},
                     {"node_shapes_match", p.node_shapes_match},
                     {"isomorphic", p.isomorphic}});
  return {{"orders", orders}, {"entries", entries}, {"collision_classes", classes}, {"pairs", pairs}};
}

std::string poset_dot(const IsoPoset& p, std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph \"" << graph_name << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& n : p.nodes)
    out << "  n" << n.id << " [label=\"" << n.label << "\\norder=" << n.order << " size=" << n.class_size()
        << "\"];\n";
  for (auto [lo, hi] : p.hasse_edges) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string poset_text(const IsoPoset& p) {
  std::ostringstream out;
  out << p.size() << " classes, " << p.hasse_edges.size() << " Hasse edges\n";
  for (const auto& n : p.nodes) {
    out << "  [" << n.id << "] " << n.label << "  order=" << n.order << "  copies=" << n.class_size()
        << (n.all_members_maximal ? "  all-maximal" : "") << "  covers:";
    for (auto [lo, hi] : p.hasse_edges)
      if (lo == n.id) out << ' ' << hi;
    out << '\n';
  }
  return out.str();
}

std::string claims_text(const std::vector<ClaimResult>& claims) {
  std::ostringstream out;
  for (const auto& c : claims) {
    out << (c.status == ClaimStatus::Verified ? "[ok]      " : c.status == ClaimStatus::Refuted ? "[REFUTED] " : "[skipped] ")
        << c.id << "  (" << c.anchor << ")\n";
    if (!c.reason.empty()) out << "          reason: " << c.reason << '\n';
    out << "          " << c.evidence.dump() << '\n';
  }
  return out.str();
}

std::string scan_text(const ScanReport& report) {
  std::ostringstream out;
  for (const auto& row : report.orders) {
    out << "order " << row.order << ": ";
    if (!row.curated) {
      out << "not curated\n";
      continue;
    }
    out << row.groups.size() << " entries" << (row.complete ? " (complete)" : " (incomplete)") << '\n';
  }
  for (const auto& e : report.entries) {
    out << "  " << e.name << "  nodes=" << e.nodes << "  ";
    if (e.error) out << "error: " << *e.error;
    else out << e.digest.substr(0, 16);
    out << '\n';
  }
  for (const auto& c : report.classes) {
    if (c.members.size() < 2) continue;
    out << "collision " << c.digest.substr(0, 16) << ":";
    for (const auto& m : c.members) out << ' ' << m;
    out << '\n';
  }
  for (const auto& p : report.pairs)
    out << "  " << p.a << " ~ " << p.b << "  shapes_match=" << p.shapes_match
        << "  node_shapes_match=" << p.node_shapes_match << "  isomorphic=" << p.isomorphic << '\n';
  return out.str();
}

}  // namespace isoposet
