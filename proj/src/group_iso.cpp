#include "isoposet/group_iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "isoposet/subgroups.hpp"

namespace isoposet {

bool is_abelian(const FiniteGroup& g) {
  const auto gens = g.generator_indices();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.multiply(gens[i], gens[j]) != g.multiply(gens[j], gens[i])) return false;
  return true;
}

std::vector<std::size_t> conjugacy_classes(const FiniteGroup& g) {
  constexpr std::size_t kNone = ~std::size_t{0};
  std::vector<std::size_t> class_of(g.order(), kNone);
  std::size_t next_id = 0;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    if (class_of[x] != kNone) continue;
    const std::size_t id = next_id++;
    std::vector<ElementIndex> orbit{x};
    class_of[x] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (auto s : g.generator_indices()) {
        const ElementIndex y = g.multiply(g.multiply(g.inverse(s), orbit[head]), s);
        if (class_of[y] == kNone) {
          class_of[y] = id;
          orbit.push_back(y);
        }
      }
    }
  }
  return class_of;
}

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint fp;
  fp.order = g.order();
  fp.abelian = is_abelian(g);
  std::map<std::size_t, std::size_t> histogram;
  fp.exponent = 1;
  for (ElementIndex x = 0; x < g.order(); ++x) {
    const std::size_t k = element_order(g, x);
    ++histogram[k];
    fp.exponent = std::lcm(fp.exponent, k);
  }
  fp.order_histogram.assign(histogram.begin(), histogram.end());
  fp.center_size = center(g).order();
  fp.derived_size = derived_subgroup(g, whole_group(g)).order();
  const auto classes = conjugacy_classes(g);
  std::vector<std::size_t> sizes(classes.empty() ? 0 : *std::max_element(classes.begin(), classes.end()) + 1, 0);
  for (auto c : classes) ++sizes[c];
  std::sort(sizes.begin(), sizes.end());
  fp.class_sizes = std::move(sizes);
  return fp;
}

namespace {

constexpr ElementIndex kUnmapped = ~ElementIndex{0};

struct ElementProfile {
  std::vector<std::size_t> order;
  std::vector<std::size_t> class_size;
};

ElementProfile profile(const FiniteGroup& g) {
  ElementProfile p;
  p.order.resize(g.order());
  for (ElementIndex x = 0; x < g.order(); ++x) p.order[x] = element_order(g, x);
  const auto classes = conjugacy_classes(g);
  std::vector<std::size_t> sizes(g.order(), 0);
  for (auto c : classes) ++sizes[c];
  p.class_size.resize(g.order());
  for (ElementIndex x = 0; x < g.order(); ++x) p.class_size[x] = sizes[classes[x]];
  return p;
}

// Partial homomorphism defined on <gens[0..k)>.
struct PartialMap {
  std::vector<ElementIndex> image;  // kUnmapped outside the domain
  ElementSet used;
  std::vector<ElementIndex> domain;
};

class IsoSearch {
 public:
  IsoSearch(const FiniteGroup& g, const FiniteGroup& h, std::vector<ElementIndex> gens)
      : g_(g), h_(h), gens_(std::move(gens)) {
    const auto pg = profile(g);
    const auto ph = profile(h);
    candidates_.resize(gens_.size());
    for (std::size_t k = 0; k < gens_.size(); ++k)
      for (ElementIndex y = 0; y < h.order(); ++y)
        if (ph.order[y] == pg.order[gens_[k]] && ph.class_size[y] == pg.class_size[gens_[k]])
          candidates_[k].push_back(y);
  }

  std::optional<std::vector<ElementIndex>> run() {
    PartialMap start;
    start.image.assign(g_.order(), kUnmapped);
    start.used = ElementSet(h_.order());
    start.image[FiniteGroup::identity_index()] = FiniteGroup::identity_index();
    start.used.insert(FiniteGroup::identity_index());
    start.domain.push_back(FiniteGroup::identity_index());
    images_.clear();
    if (search(0, start)) return images_;
    return std::nullopt;
  }

 private:
  bool search(std::size_t level, const PartialMap& state) {
    if (level == gens_.size()) return state.domain.size() == g_.order();
    for (auto y : candidates_[level]) {
      PartialMap next = state;
      images_.push_back(y);
      if (extend(next, level) && search(level + 1, next)) return true;
      images_.pop_back();
    }
    return false;
  }

  // Adds generator `level` with image images_.back() and checks every
  // Cayley-graph edge of the enlarged domain.
  bool extend(PartialMap& state, std::size_t level) {
    const std::size_t old_size = state.domain.size();
    for (std::size_t head = 0; head < state.domain.size(); ++head) {
      const ElementIndex x = state.domain[head];
      const std::size_t first_gen = head < old_size ? level : 0;
      for (std::size_t j = first_gen; j <= level; ++j) {
        const ElementIndex z = g_.multiply(x, gens_[j]);
        const ElementIndex t = h_.multiply(state.image[x], images_[j]);
        if (state.image[z] == kUnmapped) {
          if (!state.used.insert(t)) return false;
          state.image[z] = t;
          state.domain.push_back(z);
        } else if (state.image[z] != t) {
          return false;
        }
      }
    }
    return true;
  }

  const FiniteGroup& g_;
  const FiniteGroup& h_;
  std::vector<ElementIndex> gens_;
  std::vector<std::vector<ElementIndex>> candidates_;
  std::vector<ElementIndex> images_;
};

void check_cap(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > limits.iso_cap)
    throw ResourceError("are_isomorphic: order " + std::to_string(g.order()) + " exceeds iso cap " +
                        std::to_string(limits.iso_cap));
}

}  // namespace

bool verify_isomorphism(const FiniteGroup& g, const FiniteGroup& h, const GroupIsomorphism& iso) {
  if (g.order() != h.order() || iso.source_generators.size() != iso.images.size()) return false;
  std::vector<ElementIndex> map(g.order(), kUnmapped);
  map[FiniteGroup::identity_index()] = FiniteGroup::identity_index();
  std::vector<ElementIndex> queue{FiniteGroup::identity_index()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t j = 0; j < iso.source_generators.size(); ++j) {
      const ElementIndex z = g.multiply(queue[head], iso.source_generators[j]);
      if (map[z] == kUnmapped) {
        map[z] = h.multiply(map[queue[head]], iso.images[j]);
        queue.push_back(z);
      }
    }
  }
  if (queue.size() != g.order()) return false;
  ElementSet hit(h.order());
  for (auto y : map)
    if (!hit.insert(y)) return false;
  for (ElementIndex a = 0; a < g.order(); ++a)
    for (ElementIndex b = 0; b < g.order(); ++b)
      if (map[g.multiply(a, b)] != h.multiply(map[a], map[b])) return false;
  return map == iso.mapping;
}

std::optional<GroupIsomorphism> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                                 const Limits& limits) {
  check_cap(g, limits);
  check_cap(h, limits);
  if (g.order() != h.order()) return std::nullopt;
  if (fingerprint(g) != fingerprint(h)) return std::nullopt;

  GroupIsomorphism iso;
  iso.source_generators = greedy_generators(g, whole_group(g));
  IsoSearch search(g, h, iso.source_generators);
  auto images = search.run();
  if (!images) return std::nullopt;
  iso.images = std::move(*images);

  // Rebuild the full map from generator images.
  iso.mapping.assign(g.order(), kUnmapped);
  iso.mapping[FiniteGroup::identity_index()] = FiniteGroup::identity_index();
  std::vector<ElementIndex> queue{FiniteGroup::identity_index()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t j = 0; j < iso.source_generators.size(); ++j) {
      const ElementIndex z = g.multiply(queue[head], iso.source_generators[j]);
      if (iso.mapping[z] == kUnmapped) {
        iso.mapping[z] = h.multiply(iso.mapping[queue[head]], iso.images[j]);
        queue.push_back(z);
      }
    }
  }
  if (!verify_isomorphism(g, h, iso))
    throw std::logic_error("find_isomorphism: search produced an invalid witness");
  return iso;
}

bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits) {
  return find_isomorphism(g, h, limits).has_value();
}

Partition classify(const FiniteGroup& g, const SubgroupLattice& lattice, const Limits& limits) {
  if (lattice.parent_id != g.id()) throw std::invalid_argument("classify: lattice belongs to another group");
  struct Class {
    FiniteGroup representative;
    std::vector<std::size_t> members;
  };
  std::vector<Class> classes;
  std::map<Fingerprint, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    FiniteGroup standalone = subgroup_as_group(g, lattice.subgroups[i], limits);
    auto& bucket = buckets[fingerprint(standalone)];
    bool placed = false;
    for (auto c : bucket) {
      if (are_isomorphic(standalone, classes[c].representative, limits)) {
        classes[c].members.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) {
      bucket.push_back(classes.size());
      classes.push_back({std::move(standalone), {i}});
    }
  }
  Partition partition;
  for (auto& c : classes) partition.push_back(std::move(c.members));
  return partition;
}

}  // namespace isoposet
