#pragma once

#include <string>
#include <string_view>

namespace isoposet::detail {

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

}  // namespace isoposet::detail
