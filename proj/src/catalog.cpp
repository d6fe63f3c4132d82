#include "isoposet/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "catalog_data.hpp"
#include "isoposet/group_iso.hpp"

namespace isoposet {

namespace {

std::vector<Point> iota_points(std::size_t n) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  return v;
}

Permutation cycle_on(std::size_t degree, std::size_t offset, std::size_t length) {
  auto images = iota_points(degree);
  for (std::size_t i = 0; i < length; ++i)
    images[offset + i] = static_cast<Point>(offset + (i + 1) % length);
  return Permutation(std::move(images));
}

std::size_t mod_pow(std::size_t base, std::size_t exp, std::size_t m) {
  std::size_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = r * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return r;
}

std::size_t parse_size(const std::string& s) { return static_cast<std::size_t>(std::stoull(s)); }

}  // namespace

FiniteGroup cyclic(std::size_t n) {
  if (n < 1) throw std::invalid_argument("cyclic: n must be >= 1");
  if (n == 1) return FiniteGroup::closure(1, {});
  return FiniteGroup::closure(n, {cycle_on(n, 0, n)});
}

FiniteGroup dihedral(std::size_t order) {
  if (order % 2 != 0 || order / 2 < 3)
    throw std::invalid_argument("dihedral: order must be 2n with n >= 3");
  const std::size_t n = order / 2;
  std::vector<Point> reflection(n);
  for (std::size_t x = 0; x < n; ++x) reflection[x] = static_cast<Point>((n - x) % n);
  return FiniteGroup::closure(n, {cycle_on(n, 0, n), Permutation(std::move(reflection))});
}

FiniteGroup symmetric(std::size_t n) {
  if (n < 1) throw std::invalid_argument("symmetric: n must be >= 1");
  if (n == 1) return FiniteGroup::closure(1, {});
  if (n == 2) return FiniteGroup::closure(2, {Permutation::from_cycles(2, {{0, 1}})});
  return FiniteGroup::closure(n, {cycle_on(n, 0, n), Permutation::from_cycles(n, {{0, 1}})});
}

FiniteGroup alternating(std::size_t n) {
  if (n < 3) throw std::invalid_argument("alternating: n must be >= 3");
  std::vector<Permutation> gens;
  for (Point k = 2; k < n; ++k) gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
  return FiniteGroup::closure(n, std::move(gens));
}

FiniteGroup klein_four() {
  return FiniteGroup::closure(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                  Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
}

FiniteGroup psl2(std::size_t q) {
  if (q != 5 && q != 7) throw std::invalid_argument("psl2: only q = 5 and q = 7 are supported");
  const auto infinity = static_cast<Point>(q);
  const std::size_t degree = q + 1;
  std::vector<Point> translate(degree), invert(degree);
  for (std::size_t x = 0; x < q; ++x) {
    translate[x] = static_cast<Point>((x + 1) % q);
    if (x == 0) {
      invert[x] = infinity;
    } else {
      std::size_t inv = mod_pow(x, q - 2, q);
      invert[x] = static_cast<Point>((q - inv) % q);
    }
  }
  translate[infinity] = infinity;
  invert[infinity] = 0;
  return FiniteGroup::closure(degree, {Permutation(std::move(translate)), Permutation(std::move(invert))});
}

FiniteGroup linear_group_on_vectors(std::size_t p, const std::vector<std::array<std::size_t, 4>>& matrices) {
  // Row vector (a, b) at index a*p + b - 1; acts by v -> v M.
  const std::size_t degree = p * p - 1;
  std::vector<Permutation> gens;
  for (const auto& m : matrices) {
    std::vector<Point> images(degree);
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t b = 0; b < p; ++b) {
        if (a == 0 && b == 0) continue;
        std::size_t na = (a * m[0] + b * m[2]) % p;
        std::size_t nb = (a * m[1] + b * m[3]) % p;
        if (na == 0 && nb == 0) throw std::invalid_argument("linear_group_on_vectors: singular matrix");
        images[a * p + b - 1] = static_cast<Point>(na * p + nb - 1);
      }
    }
    gens.emplace_back(std::move(images));
  }
  return FiniteGroup::closure(degree, std::move(gens));
}

FiniteGroup sl2_5() { return linear_group_on_vectors(5, {{1, 1, 0, 1}, {0, 1, 4, 0}}); }
FiniteGroup sl2_3() { return linear_group_on_vectors(3, {{1, 1, 0, 1}, {0, 1, 2, 0}}); }
FiniteGroup quaternion8() { return linear_group_on_vectors(3, {{0, 2, 1, 0}, {1, 1, 1, 2}}); }

FiniteGroup affine(std::size_t m, std::size_t u) {
  if (m < 2 || std::gcd(m, u) != 1) throw std::invalid_argument("affine: need m >= 2 and gcd(m, u) = 1");
  std::vector<Point> scale(m);
  for (std::size_t x = 0; x < m; ++x) scale[x] = static_cast<Point>(x * u % m);
  return FiniteGroup::closure(m, {cycle_on(m, 0, m), Permutation(std::move(scale))});
}

FiniteGroup frobenius21() { return affine(7, 2); }

FiniteGroup metacyclic(std::size_t m, std::size_t u, std::size_t k) {
  if (m < 2 || k < 1 || std::gcd(m, u) != 1 || mod_pow(u, k, m) != 1 % m)
    throw std::invalid_argument("metacyclic: need gcd(m, u) = 1 and u^k = 1 mod m");
  const std::size_t degree = m + k;
  std::vector<Point> translate = iota_points(degree);
  for (std::size_t x = 0; x < m; ++x) translate[x] = static_cast<Point>((x + 1) % m);
  std::vector<Point> twist = iota_points(degree);
  for (std::size_t x = 0; x < m; ++x) twist[x] = static_cast<Point>(x * u % m);
  for (std::size_t i = 0; i < k; ++i) twist[m + i] = static_cast<Point>(m + (i + 1) % k);
  return FiniteGroup::closure(degree, {Permutation(std::move(translate)), Permutation(std::move(twist))});
}

FiniteGroup dicyclic(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("dicyclic: only odd n >= 3 is supported");
  return metacyclic(n, n - 1, 4);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits) {
  const std::size_t degree = g.degree() + h.degree();
  if (degree > limits.degree_cap)
    throw ResourceError("direct_product: degree " + std::to_string(degree) + " exceeds cap " +
                        std::to_string(limits.degree_cap));
  std::vector<Permutation> gens;
  for (const auto& p : g.generators()) {
    auto images = iota_points(degree);
    for (std::size_t x = 0; x < g.degree(); ++x) images[x] = p(static_cast<Point>(x));
    gens.emplace_back(std::move(images));
  }
  for (const auto& p : h.generators()) {
    auto images = iota_points(degree);
    for (std::size_t x = 0; x < h.degree(); ++x)
      images[g.degree() + x] = static_cast<Point>(g.degree() + p(static_cast<Point>(x)));
    gens.emplace_back(std::move(images));
  }
  return FiniteGroup::closure(degree, std::move(gens), limits);
}

namespace {

std::vector<std::string> split_factors(std::string_view name) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : name) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == 'x' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

FiniteGroup build_factor(const std::string& name) {
  static const std::regex indexed(R"((Z|D|S|A|Dic)(\d+))");
  static const std::regex psl(R"(PSL\(2,(\d+)\))");
  static const std::regex meta(R"(Meta\((\d+),(\d+),(\d+)\))");
  static const std::regex aff(R"(Aff\((\d+),(\d+)\))");
  std::smatch m;
  if (name == "V4") return klein_four();
  if (name == "Q8") return quaternion8();
  if (name == "F21") return frobenius21();
  if (name == "F20") return affine(5, 2);
  if (name == "SL(2,5)") return sl2_5();
  if (name == "SL(2,3)") return sl2_3();
  if (std::regex_match(name, m, psl)) return psl2(parse_size(m[1]));
  if (std::regex_match(name, m, meta))
    return metacyclic(parse_size(m[1]), parse_size(m[2]), parse_size(m[3]));
  if (std::regex_match(name, m, aff)) return affine(parse_size(m[1]), parse_size(m[2]));
  if (std::regex_match(name, m, indexed)) {
    const std::size_t n = parse_size(m[2]);
    const std::string kind = m[1];
    if (kind == "Z") return cyclic(n);
    if (kind == "D") return dihedral(n);
    if (kind == "S") return symmetric(n);
    if (kind == "A") return alternating(n);
    return dicyclic(n);
  }
  throw std::invalid_argument("build: unknown group name '" + name + "'");
}

struct CatalogTable {
  std::map<std::size_t, CatalogOrder> rows;
};

CatalogTable load_catalog() {
  nlohmann::json doc;
  if (const char* path = std::getenv("ISOPOSET_CATALOG"); path != nullptr && *path != '\0') {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(std::string("catalog: cannot open ") + path);
    doc = nlohmann::json::parse(in);
  } else {
    doc = nlohmann::json::parse(detail::kCatalogJson);
  }
  CatalogTable table;
  for (const auto& row : doc.at("orders")) {
    CatalogOrder entry;
    entry.order = row.at("order").get<std::size_t>();
    entry.curated = true;
    entry.complete = row.value("complete", false);
    if (row.contains("known_count")) entry.known_count = row.at("known_count").get<std::size_t>();
    for (const auto& g : row.at("groups")) entry.groups.push_back({g.get<std::string>(), entry.order});
    table.rows.emplace(entry.order, std::move(entry));
  }
  return table;
}

const CatalogTable& catalog_table() {
  static const CatalogTable table = load_catalog();
  return table;
}

}  // namespace

FiniteGroup build(std::string_view name, const Limits& limits) {
  auto factors = split_factors(name);
  FiniteGroup result = build_factor(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i)
    result = direct_product(result, build_factor(factors[i]), limits);
  return result;
}

CatalogOrder catalog_for_order(std::size_t n) {
  const auto& rows = catalog_table().rows;
  if (auto it = rows.find(n); it != rows.end()) return it->second;
  CatalogOrder missing;
  missing.order = n;
  return missing;
}

std::vector<std::size_t> curated_orders() {
  std::vector<std::size_t> orders;
  for (const auto& [order, row] : catalog_table().rows) orders.push_back(order);
  return orders;
}

std::optional<std::string> identify(const FiniteGroup& g) {
  static std::mutex mutex;
  static std::map<std::string, FiniteGroup> built;

  const auto row = catalog_for_order(g.order());
  const Fingerprint target = fingerprint(g);
  for (const auto& spec : row.groups) {
    FiniteGroup candidate = [&] {
      std::lock_guard lock(mutex);
      auto it = built.find(spec.name);
      if (it == built.end()) it = built.emplace(spec.name, build(spec.name)).first;
      return it->second;
    }();
    if (g.order() > Limits{}.iso_cap) continue;
    if (fingerprint(candidate) != target) continue;
    if (are_isomorphic(g, candidate)) return spec.name;
  }
  if (target.exponent == g.order()) return "Z" + std::to_string(g.order());
  return std::nullopt;
}

}  // namespace isoposet
