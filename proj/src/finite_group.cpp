#include "isoposet/finite_group.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace isoposet {

namespace {

std::uint64_t generator_hash(std::size_t degree, const std::vector<Permutation>& gens) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(degree);
  mix(gens.size());
  for (const auto& p : gens)
    for (Point x : p.images()) mix(x);
  return h;
}

}  // namespace

FiniteGroup FiniteGroup::closure(std::size_t degree, std::vector<Permutation> generators,
                                 const Limits& limits) {
  for (const auto& p : generators)
    if (p.degree() != degree)
      throw std::invalid_argument("closure: generator degree differs from group degree");

  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->id = generator_hash(degree, generators);

  auto& elements = data->elements;
  auto& index = data->index;
  elements.push_back(Permutation::identity(degree));
  index.emplace(elements.back(), 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : generators) {
      Permutation next = compose(elements[head], gen);
      if (index.contains(next)) continue;
      if (elements.size() >= limits.element_cap)
        throw ResourceError("closure: group exceeds element cap " +
                            std::to_string(limits.element_cap));
      index.emplace(next, static_cast<ElementIndex>(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  for (const auto& gen : generators) data->generator_indices.push_back(index.at(gen));
  data->inverses.resize(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i)
    data->inverses[i] = index.at(elements[i].inverse());

  const std::size_t n = elements.size();
  if (n <= limits.cayley_cap) {
    data->table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        data->table[a * n + b] = index.at(compose(elements[a], elements[b]));
  }
  data->generators = std::move(generators);
  return FiniteGroup(std::move(data));
}

ElementIndex FiniteGroup::multiply(ElementIndex a, ElementIndex b) const {
  if (!data_->table.empty()) return data_->table[std::size_t{a} * order() + b];
  return data_->index.at(compose(data_->elements[a], data_->elements[b]));
}

std::optional<ElementIndex> FiniteGroup::index_of(const Permutation& p) const {
  auto it = data_->index.find(p);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t ElementSet::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<ElementIndex> sorted_members,
                   std::vector<ElementIndex> generators)
    : parent_id_(parent.id()),
      members_(std::move(sorted_members)),
      generators_(std::move(generators)),
      bits_(parent.order()) {
  for (auto m : members_) bits_.insert(m);
}

std::size_t element_order(const FiniteGroup& g, ElementIndex i) {
  std::size_t k = 1;
  for (ElementIndex x = i; x != FiniteGroup::identity_index(); x = g.multiply(x, i)) ++k;
  return k;
}

Subgroup generate(const FiniteGroup& g, std::span<const ElementIndex> generators) {
  ElementSet seen(g.order());
  std::vector<ElementIndex> members{FiniteGroup::identity_index()};
  seen.insert(FiniteGroup::identity_index());
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (auto gen : generators) {
      ElementIndex next = g.multiply(members[head], gen);
      if (seen.insert(next)) members.push_back(next);
    }
  }
  std::sort(members.begin(), members.end());
  std::vector<ElementIndex> gens;
  for (auto gen : generators)
    if (gen != FiniteGroup::identity_index() && std::find(gens.begin(), gens.end(), gen) == gens.end())
      gens.push_back(gen);
  return Subgroup(g, std::move(members), std::move(gens));
}

Subgroup whole_group(const FiniteGroup& g) { return generate(g, g.generator_indices()); }

Subgroup trivial_subgroup(const FiniteGroup& g) {
  return Subgroup(g, {FiniteGroup::identity_index()}, {});
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, ElementIndex x) {
  const ElementIndex xinv = g.inverse(x);
  auto conj = [&](ElementIndex e) { return g.multiply(g.multiply(xinv, e), x); };
  std::vector<ElementIndex> members;
  members.reserve(h.order());
  for (auto m : h.members()) members.push_back(conj(m));
  std::sort(members.begin(), members.end());
  std::vector<ElementIndex> gens;
  for (auto m : h.generators()) gens.push_back(conj(m));
  return Subgroup(g, std::move(members), std::move(gens));
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (auto x : g.generator_indices()) {
    const ElementIndex xinv = g.inverse(x);
    for (auto m : h.generators())
      if (!h.contains(g.multiply(g.multiply(xinv, m), x))) return false;
  }
  return true;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h, const Limits& limits) {
  std::vector<Permutation> gens;
  for (auto i : h.generators()) gens.push_back(g.element(i));
  return FiniteGroup::closure(g.degree(), std::move(gens), limits);
}

FiniteGroup coset_action(const FiniteGroup& g, const Subgroup& n, const Limits& limits) {
  if (!is_normal(g, n)) throw std::invalid_argument("coset_action: subgroup is not normal");
  constexpr ElementIndex kUnassigned = ~ElementIndex{0};
  std::vector<ElementIndex> coset_of(g.order(), kUnassigned);
  std::vector<ElementIndex> representatives;
  for (ElementIndex r = 0; r < g.order(); ++r) {
    if (coset_of[r] != kUnassigned) continue;
    const auto id = static_cast<ElementIndex>(representatives.size());
    representatives.push_back(r);
    for (auto m : n.members()) coset_of[g.multiply(m, r)] = id;
  }
  const std::size_t points = representatives.size();
  std::vector<Permutation> gens;
  for (auto x : g.generator_indices()) {
    std::vector<Point> images(points);
    for (std::size_t k = 0; k < points; ++k) images[k] = coset_of[g.multiply(representatives[k], x)];
    gens.emplace_back(std::move(images));
  }
  return FiniteGroup::closure(points, std::move(gens), limits);
}

std::vector<ElementIndex> greedy_generators(const FiniteGroup& g, const Subgroup& within) {
  std::vector<ElementIndex> chosen;
  Subgroup current = trivial_subgroup(g);
  for (auto m : within.members()) {
    if (current.contains(m)) continue;
    chosen.push_back(m);
    current = generate(g, chosen);
  }
  return chosen;
}

}  // namespace isoposet
