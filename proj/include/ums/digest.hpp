#pragma once

#include <string>
#include <string_view>

namespace ums {

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

/// First 64 bits of SHA-256 as 16 lowercase hex characters.
std::string short_digest(std::string_view bytes);

inline constexpr std::string_view kGenesisDigest = "0000000000000000";

bool is_short_digest(std::string_view text);

}  // namespace ums
