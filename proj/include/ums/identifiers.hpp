#pragma once

#include <string>
#include <string_view>

namespace ums {

class Metabase;

enum class IdentifierDefect {
  none,
  empty,
  bad_prefix,     // DOI without `10.<registrant>/`
  bad_suffix,     // DOI suffix empty or containing whitespace
  bad_length,     // ISBN not 10/13 digits, PMID longer than 8 digits
  bad_character,  // non-digit where a digit is required
  checksum,       // ISBN check digit mismatch
  bad_format,     // PMID / URN lexical shape
};

struct IdentifierCheck {
  IdentifierDefect defect = IdentifierDefect::none;

  bool valid() const { return defect == IdentifierDefect::none; }
  explicit operator bool() const { return valid(); }
};

std::string_view to_string(IdentifierDefect defect);

/// Offline syntactic check. ISBN-10/13 checksums, DOI `10.<4-9 digits>/<suffix>`, PMID 1-8 digits,
/// URN per RFC 2141; any other system only needs a non-empty id. Resolvability is never checked.
IdentifierCheck check_identifier(std::string_view system, std::string_view id);

/// check_identifier, after confirming the system is registered. Throws CatalogError(unknown_system).
IdentifierCheck validate_identifier(const Metabase& metabase, std::string_view system,
                                    std::string_view id);

bool isbn_checksum_ok(std::string_view digits);

}  // namespace ums
