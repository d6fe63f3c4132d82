#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "isoposet/catalog.hpp"
#include "isoposet/iso_poset.hpp"

namespace isoposet {

enum class ClaimStatus { Verified, Refuted, Skipped };
std::string_view to_string(ClaimStatus status);

struct ClaimResult {
  std::string id;
  std::string anchor;
  ClaimStatus status = ClaimStatus::Skipped;
  std::string reason;  // set for skipped claims
  nlohmann::json evidence = nlohmann::json::object();
  double wall_ms = 0.0;
};

/// Registry entry: every check the harness knows about.
struct ClaimInfo {
  std::string id;
  std::string anchor;
  std::string summary;
};
const std::vector<ClaimInfo>& claim_registry();

struct VerifyContext {
  Limits limits;
  const LatticeCache* cache = nullptr;
};

std::vector<ClaimResult> verify_psl25(const VerifyContext& ctx = {});
std::vector<ClaimResult> verify_psl27(const VerifyContext& ctx = {});
/// Checks the three transfer properties along a witness of Iso(a) = Iso(b);
/// when the posets differ, every part is reported as skipped.
std::vector<ClaimResult> verify_lemma(std::string_view a, std::string_view b, const VerifyContext& ctx = {});
std::vector<ClaimResult> verify_remark(const VerifyContext& ctx = {});
std::vector<ClaimResult> verify_abelian_chain(const VerifyContext& ctx = {});
/// Everything above, with the lemma run on (PSL(2,5), A5).
std::vector<ClaimResult> verify_all(const VerifyContext& ctx = {});

bool any_refuted(const std::vector<ClaimResult>& claims);

struct ScanEntry {
  std::string name;
  std::size_t order = 0;
  std::vector<unsigned> shape;
  std::string digest;
  std::size_t nodes = 0;
  std::optional<std::string> error;
};

struct ScanPair {
  std::string a, b;
  bool shapes_match = false;       // order shapes of |A| and |B|
  bool node_shapes_match = false;  // some poset isomorphism also matches every node's order shape
  bool isomorphic = false;
};

struct ScanClass {
  std::string digest;
  std::vector<std::string> members;
};

struct ScanReport {
  std::vector<CatalogOrder> orders;
  std::vector<ScanEntry> entries;
  std::vector<ScanClass> classes;  // in order of first appearance
  std::vector<ScanPair> pairs;     // every pair inside a class of size >= 2
};

ScanReport scan(const std::vector<std::size_t>& orders, const VerifyContext& ctx = {});

// Serialization.
nlohmann::json group_json(std::string_view name, const FiniteGroup& g);
nlohmann::json poset_json(const IsoPoset& p);
nlohmann::json claim_json(const ClaimResult& c);
/// { group, poset, digest, claims }; absent parts are null.
nlohmann::json report_json(const nlohmann::json& group, const nlohmann::json& poset, const nlohmann::json& digest,
                           const std::vector<ClaimResult>& claims);
nlohmann::json scan_json(const ScanReport& report);
/// Hasse diagram drawn bottom to top.
std::string poset_dot(const IsoPoset& p, std::string_view graph_name);
std::string poset_text(const IsoPoset& p);
std::string claims_text(const std::vector<ClaimResult>& claims);
std::string scan_text(const ScanReport& report);

}  // namespace isoposet
