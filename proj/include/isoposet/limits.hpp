#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isoposet {

/// Size guards shared by every module. Exceeding one raises ResourceError,
/// never silently truncates.
struct Limits {
  std::size_t element_cap = 10000;   // closure
  std::size_t cayley_cap = 512;      // multiplication table materialized up to this order
  std::size_t enumeration_cap = 400; // full subgroup lattice
  std::size_t iso_cap = 400;         // group isomorphism search
  std::size_t degree_cap = 4096;     // direct products
  std::size_t poset_node_cap = 5000;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace isoposet
