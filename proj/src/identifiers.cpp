#include "ums/identifiers.hpp"

#include "ums/metabase.hpp"
#include "ums/text.hpp"

namespace ums {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_hex(char c) { return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F'); }

IdentifierCheck defect(IdentifierDefect d) { return IdentifierCheck{d}; }

IdentifierCheck check_isbn(std::string_view id) {
  std::string compact;
  for (char c : id) {
    if (c != '-' && c != ' ') compact += c;
  }
  if (compact.size() != 10 && compact.size() != 13) return defect(IdentifierDefect::bad_length);
  for (std::size_t i = 0; i < compact.size(); ++i) {
    bool last = i + 1 == compact.size();
    bool x_ok = last && compact.size() == 10 && (compact[i] == 'X' || compact[i] == 'x');
    if (!is_digit(compact[i]) && !x_ok) return defect(IdentifierDefect::bad_character);
  }
  return isbn_checksum_ok(compact) ? IdentifierCheck{} : defect(IdentifierDefect::checksum);
}

// 10.<4-9 digits>/<suffix without whitespace>
IdentifierCheck check_doi(std::string_view id) {
  if (id.substr(0, 3) != "10.") return defect(IdentifierDefect::bad_prefix);
  std::size_t i = 3;
  while (i < id.size() && is_digit(id[i])) ++i;
  std::size_t registrant = i - 3;
  if (registrant < 4 || registrant > 9 || i >= id.size() || id[i] != '/') {
    return defect(IdentifierDefect::bad_prefix);
  }
  std::string_view suffix = id.substr(i + 1);
  if (suffix.empty()) return defect(IdentifierDefect::bad_suffix);
  for (char c : suffix) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
      return defect(IdentifierDefect::bad_suffix);
    }
  }
  return {};
}

IdentifierCheck check_pmid(std::string_view id) {
  for (char c : id) {
    if (!is_digit(c)) return defect(IdentifierDefect::bad_character);
  }
  if (id.size() > 8) return defect(IdentifierDefect::bad_length);
  if (id[0] == '0') return defect(IdentifierDefect::bad_format);
  return {};
}

// RFC 2141: "urn:" <NID> ":" <NSS>
IdentifierCheck check_urn(std::string_view id) {
  if (id.size() < 4 || !iequals(id.substr(0, 4), "urn:")) return defect(IdentifierDefect::bad_format);
  std::string_view rest = id.substr(4);
  auto colon = rest.find(':');
  if (colon == std::string_view::npos) return defect(IdentifierDefect::bad_format);
  std::string_view nid = rest.substr(0, colon);
  std::string_view nss = rest.substr(colon + 1);
  if (nid.empty() || nid.size() > 32 || iequals(nid, "urn")) {
    return defect(IdentifierDefect::bad_format);
  }
  if (!is_alpha(nid[0]) && !is_digit(nid[0])) return defect(IdentifierDefect::bad_format);
  for (char c : nid) {
    if (!is_alpha(c) && !is_digit(c) && c != '-') return defect(IdentifierDefect::bad_format);
  }
  if (nss.empty()) return defect(IdentifierDefect::bad_format);
  constexpr std::string_view other = "()+,-.:=@;$_!*'";
  constexpr std::string_view reserved = "/?#";
  for (std::size_t i = 0; i < nss.size(); ++i) {
    char c = nss[i];
    if (c == '%') {
      if (i + 2 >= nss.size() || !is_hex(nss[i + 1]) || !is_hex(nss[i + 2])) {
        return defect(IdentifierDefect::bad_format);
      }
      i += 2;
      continue;
    }
    if (!is_alpha(c) && !is_digit(c) && other.find(c) == std::string_view::npos &&
        reserved.find(c) == std::string_view::npos) {
      return defect(IdentifierDefect::bad_format);
    }
  }
  return {};
}

}  // namespace

std::string_view to_string(IdentifierDefect d) {
  switch (d) {
    case IdentifierDefect::none: return "valid";
    case IdentifierDefect::empty: return "Empty";
    case IdentifierDefect::bad_prefix: return "BadPrefix";
    case IdentifierDefect::bad_suffix: return "BadSuffix";
    case IdentifierDefect::bad_length: return "BadLength";
    case IdentifierDefect::bad_character: return "BadCharacter";
    case IdentifierDefect::checksum: return "Checksum";
    case IdentifierDefect::bad_format: return "BadFormat";
  }
  return "Invalid";
}

bool isbn_checksum_ok(std::string_view digits) {
  auto value = [](char c) { return (c == 'X' || c == 'x') ? 10 : c - '0'; };
  int total = 0;
  if (digits.size() == 13) {
    for (std::size_t i = 0; i < 13; ++i) total += value(digits[i]) * (i % 2 == 0 ? 1 : 3);
    return total % 10 == 0;
  }
  if (digits.size() == 10) {
    for (std::size_t i = 0; i < 10; ++i) total += value(digits[i]) * static_cast<int>(10 - i);
    return total % 11 == 0;
  }
  return false;
}

IdentifierCheck check_identifier(std::string_view system, std::string_view id) {
  id = trim(id);
  if (id.empty()) return defect(IdentifierDefect::empty);
  const std::string token = ascii_upper(system);
  if (token == "ISBN") return check_isbn(id);
  if (token == "DOI") return check_doi(id);
  if (token == "PMID") return check_pmid(id);
  if (token == "URN") return check_urn(id);
  return {};
}

IdentifierCheck validate_identifier(const Metabase& metabase, std::string_view system,
                                    std::string_view id) {
  if (!metabase.has_system(system)) {
    throw CatalogError(CatalogError::Code::unknown_system, 0, std::string(system));
  }
  return check_identifier(system, id);
}

}  // namespace ums
