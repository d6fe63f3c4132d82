#include "isoposet/subgroups.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "digest.hpp"

namespace isoposet {

namespace {

// Subgroup generated by `gens`, or nullopt once it grows past `limit`
// elements.
std::optional<Subgroup> generate_bounded(const FiniteGroup& g, const std::vector<ElementIndex>& gens,
                                         std::size_t limit) {
  ElementSet seen(g.order());
  std::vector<ElementIndex> members{FiniteGroup::identity_index()};
  seen.insert(FiniteGroup::identity_index());
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (auto gen : gens) {
      ElementIndex next = g.multiply(members[head], gen);
      if (seen.insert(next)) {
        members.push_back(next);
        if (members.size() > limit) return std::nullopt;
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup(g, std::move(members), gens);
}

ElementIndex commutator(const FiniteGroup& g, ElementIndex a, ElementIndex b) {
  return g.multiply(g.multiply(g.inverse(a), g.inverse(b)), g.multiply(a, b));
}

}  // namespace

std::optional<std::size_t> SubgroupLattice::find(const Subgroup& h) const {
  auto it = std::lower_bound(subgroups.begin(), subgroups.end(), h);
  if (it != subgroups.end() && it->members() == h.members())
    return static_cast<std::size_t>(it - subgroups.begin());
  return std::nullopt;
}

SubgroupLattice make_lattice(const FiniteGroup& g, std::vector<Subgroup> subgroups) {
  std::sort(subgroups.begin(), subgroups.end());
  SubgroupLattice lattice;
  lattice.parent_id = g.id();
  const std::size_t n = subgroups.size();
  lattice.contained.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (subgroups[j].order() % subgroups[i].order() != 0) continue;
      if (subgroups[i].is_subset_of(subgroups[j])) lattice.contained[i][j] = true;
    }
  }
  lattice.maximal.assign(n, false);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j + 1 < n && maximal; ++j)
      if (lattice.contained[i][j]) maximal = false;
    lattice.maximal[i] = maximal;
  }
  lattice.subgroups = std::move(subgroups);
  return lattice;
}

SubgroupLattice all_subgroups(const FiniteGroup& g, const Limits& limits, const LatticeCache* cache) {
  if (g.order() > limits.enumeration_cap)
    throw ResourceError("all_subgroups: order " + std::to_string(g.order()) +
                        " exceeds enumeration cap " + std::to_string(limits.enumeration_cap));
  if (cache != nullptr)
    if (auto cached = cache->load(g)) return std::move(*cached);

  std::vector<Subgroup> found;
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash;
  auto intern = [&](Subgroup s) -> bool {
    auto& bucket = by_hash[s.bits().hash()];
    for (auto idx : bucket)
      if (found[idx].bits() == s.bits()) return false;
    bucket.push_back(found.size());
    found.push_back(std::move(s));
    return true;
  };

  std::vector<ElementIndex> cyclic_generators;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    const std::array<ElementIndex, 1> gen{x};
    if (intern(generate(g, gen)) && x != FiniteGroup::identity_index()) cyclic_generators.push_back(x);
  }

  std::vector<std::size_t> frontier(found.size());
  for (std::size_t i = 0; i < frontier.size(); ++i) frontier[i] = i;
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto idx : frontier) {
      for (auto c : cyclic_generators) {
        if (found[idx].contains(c)) continue;
        std::vector<ElementIndex> gens = found[idx].generators();
        gens.push_back(c);
        if (intern(generate(g, gens))) next.push_back(found.size() - 1);
      }
    }
    frontier = std::move(next);
  }

  SubgroupLattice lattice = make_lattice(g, std::move(found));
  if (cache != nullptr) cache->store(g, lattice);
  return lattice;
}

std::optional<Subgroup> intermediate_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.order() == g.order())
    throw std::invalid_argument("intermediate_subgroup: maximality is undefined for the whole group");
  const std::size_t n = g.order();
  ElementSet done = h.bits();
  for (ElementIndex x = 0; x < n; ++x) {
    if (done.contains(x)) continue;
    std::vector<ElementIndex> gens = h.generators();
    gens.push_back(x);
    // A subgroup with more than half the elements is the whole group.
    if (auto joined = generate_bounded(g, gens, n / 2)) return joined;
    // <h, y> is the same subgroup for every y in the double coset h x h.
    for (auto a : h.members()) {
      const ElementIndex ax = g.multiply(a, x);
      for (auto b : h.members()) done.insert(g.multiply(ax, b));
    }
  }
  return std::nullopt;
}

bool is_maximal(const FiniteGroup& g, const Subgroup& h) {
  return !intermediate_subgroup(g, h).has_value();
}

bool is_cyclic_only_order(std::size_t m) {
  // Orders m <= 100 with gcd(m, phi(m)) = 1.
  static constexpr std::array<std::size_t, 37> kTable = {
      1,  2,  3,  5,  7,  11, 13, 15, 17, 19, 23, 29, 31, 33, 35, 37, 41, 43, 47,
      51, 53, 59, 61, 65, 67, 69, 71, 73, 77, 79, 83, 85, 87, 89, 91, 95, 97};
  return std::binary_search(kTable.begin(), kTable.end(), m);
}

bool has_element_of_order(const FiniteGroup& g, std::size_t m) {
  for (ElementIndex x = 0; x < g.order(); ++x)
    if (element_order(g, x) == m) return true;
  return false;
}

bool has_subgroup_of_order(const FiniteGroup& g, std::size_t m, const Limits& limits,
                           const LatticeCache* cache) {
  if (m == 0) throw std::invalid_argument("has_subgroup_of_order: m must be positive");
  if (g.order() % m != 0) return false;
  if (m == 1 || m == g.order()) return true;
  if (is_cyclic_only_order(m)) return has_element_of_order(g, m);
  const auto lattice = all_subgroups(g, limits, cache);
  return std::any_of(lattice.subgroups.begin(), lattice.subgroups.end(),
                     [m](const Subgroup& s) { return s.order() == m; });
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const SubgroupLattice& lattice) {
  std::vector<Subgroup> result;
  for (const auto& s : lattice.subgroups)
    if (is_normal(g, s)) result.push_back(s);
  return result;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const Limits& limits) {
  return normal_subgroups(g, all_subgroups(g, limits));
}

bool is_simple(const FiniteGroup& g, const Limits& limits) {
  return g.order() > 1 && normal_subgroups(g, limits).size() == 2;
}

Subgroup center(const FiniteGroup& g) {
  std::vector<ElementIndex> members;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    bool central = true;
    for (auto s : g.generator_indices())
      if (g.multiply(x, s) != g.multiply(s, x)) {
        central = false;
        break;
      }
    if (central) members.push_back(x);
  }
  Subgroup as_set(g, members, {});
  return generate(g, greedy_generators(g, as_set));
}

Subgroup derived_subgroup(const FiniteGroup& g, const Subgroup& h) {
  const auto& hg = h.generators();
  std::vector<ElementIndex> gens;
  for (std::size_t i = 0; i < hg.size(); ++i)
    for (std::size_t j = i + 1; j < hg.size(); ++j) gens.push_back(commutator(g, hg[i], hg[j]));
  Subgroup current = generate(g, gens);
  // Normal closure in h of the generator commutators.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<ElementIndex> snapshot = current.generators();
    for (auto x : hg) {
      const ElementIndex xinv = g.inverse(x);
      for (auto c : snapshot) {
        const ElementIndex conj = g.multiply(g.multiply(xinv, c), x);
        if (current.contains(conj)) continue;
        gens = current.generators();
        gens.push_back(conj);
        current = generate(g, gens);
        grew = true;
      }
    }
  }
  return current;
}

std::vector<Subgroup> derived_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{whole_group(g)};
  while (true) {
    Subgroup next = derived_subgroup(g, series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const FiniteGroup& g) { return derived_series(g).back().order() == 1; }

std::vector<Fingerprint> composition_factors(const FiniteGroup& g, const Limits& limits,
                                             NormalChoice choice) {
  std::vector<Fingerprint> factors;
  FiniteGroup current = g;
  while (current.order() > 1) {
    const auto lattice = all_subgroups(current, limits);
    std::vector<Subgroup> proper;
    for (auto& s : normal_subgroups(current, lattice))
      if (s.order() < current.order()) proper.push_back(std::move(s));
    std::vector<const Subgroup*> maximal;
    for (const auto& n : proper) {
      bool covered = false;
      for (const auto& m : proper)
        if (m.order() > n.order() && n.is_subset_of(m)) covered = true;
      if (!covered) maximal.push_back(&n);
    }
    const Subgroup& chosen = choice == NormalChoice::SmallestIndex ? *maximal.front() : *maximal.back();
    factors.push_back(fingerprint(coset_action(current, chosen, limits)));
    current = subgroup_as_group(current, chosen, limits);
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

std::vector<unsigned> order_shape(std::uint64_t n) {
  std::vector<unsigned> shape;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) shape.push_back(e);
  }
  if (n > 1) shape.push_back(1);
  std::sort(shape.rbegin(), shape.rend());
  return shape;
}

LatticeCache::LatticeCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

std::optional<LatticeCache> LatticeCache::from_environment() {
  const char* dir = std::getenv("ISOPOSET_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return LatticeCache(dir);
}

namespace {

nlohmann::json generator_images(const FiniteGroup& g) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& p : g.generators())
    gens.push_back(std::vector<Point>(p.images().begin(), p.images().end()));
  return gens;
}

}  // namespace

std::string LatticeCache::key(const FiniteGroup& g) const {
  const Fingerprint fp = fingerprint(g);
  std::ostringstream s;
  s << "order=" << fp.order << ";abelian=" << fp.abelian << ";exp=" << fp.exponent
    << ";center=" << fp.center_size << ";derived=" << fp.derived_size << ";hist=";
  for (auto [k, c] : fp.order_histogram) s << k << ':' << c << ',';
  s << ";classes=";
  for (auto c : fp.class_sizes) s << c << ',';
  s << ";degree=" << g.degree() << ";gens=" << generator_images(g).dump();
  return detail::sha256_hex(s.str());
}

std::optional<SubgroupLattice> LatticeCache::load(const FiniteGroup& g) const {
  const auto path = directory_ / (key(g) + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    if (doc.at("generators") != generator_images(g)) return std::nullopt;
    std::vector<Subgroup> subgroups;
    for (const auto& entry : doc.at("lattice").at("subgroups")) {
      const auto gens = entry.at("generators").get<std::vector<ElementIndex>>();
      const auto members = entry.at("members").get<std::vector<ElementIndex>>();
      for (auto x : gens)
        if (x >= g.order()) return std::nullopt;
      Subgroup s = generate(g, gens);
      if (s.members() != members) return std::nullopt;
      subgroups.push_back(std::move(s));
    }
    return make_lattice(g, std::move(subgroups));
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void LatticeCache::store(const FiniteGroup& g, const SubgroupLattice& lattice) const {
  std::filesystem::create_directories(directory_);
  nlohmann::json subgroups = nlohmann::json::array();
  for (const auto& s : lattice.subgroups)
    subgroups.push_back({{"members", s.members()}, {"generators", s.generators()}});
  nlohmann::json doc = {
      {"format", "isoposet-lattice"},
      {"version", 1},
      {"key", key(g)},
      {"group", {{"name", nullptr}, {"order", g.order()}, {"degree", g.degree()}}},
      {"generators", generator_images(g)},
      {"lattice", {{"subgroups", std::move(subgroups)}}},
  };
  const auto path = directory_ / (key(g) + ".json");
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace isoposet
