#pragma once

#include "ums/timestamp.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ums {

enum class DocType { text, image, photo, video, sound };

/// Ordered access gradation; 0 is unrestricted.
enum class AccessLevel : int { open = 0, internal = 1, restricted = 2, secret = 3 };

/// A document's identity number inside one classification system, e.g. (PMID, 21383996).
struct IdentifierBinding {
  std::string system;
  std::string id;

  std::string str() const { return system + "|" + id; }
  auto operator<=>(const IdentifierBinding&) const = default;
};

/// Depicted object or phenomenon. `source` names the catalog it was drawn from (may be empty).
struct Subject {
  std::string text;
  std::string source;

  auto operator<=>(const Subject&) const = default;
};

enum class EventKind { create, rename, reclassify, relocate, reformat, translate };

struct ProvenanceEvent {
  std::uint64_t seq = 0;
  Timestamp timestamp;
  EventKind kind = EventKind::create;
  std::string payload;
  std::string prev;

  bool operator==(const ProvenanceEvent&) const = default;
};

/// Canonical metadata description of one document.
///
/// `name`, the first format, the first location and `date` are the original identification and
/// are never altered by history events. Every list only grows.
struct UmsRecord {
  std::string name;
  std::vector<std::string> synonyms;
  std::vector<std::string> formats;
  std::optional<Timestamp> date;
  std::optional<DocType> doc_type;
  std::optional<std::string> summary;
  std::vector<std::string> languages;
  std::vector<std::string> locations;
  std::vector<std::string> creators;
  std::vector<IdentifierBinding> identifiers;
  std::optional<AccessLevel> access;
  std::vector<Subject> subjects;
  std::vector<std::string> tags;
  std::vector<ProvenanceEvent> history;
  /// Digest of the last history line; empty when there is no history.
  std::string head;

  bool operator==(const UmsRecord&) const = default;
};

std::string_view to_string(DocType type);
std::optional<DocType> parse_doc_type(std::string_view text);
std::string_view to_string(EventKind kind);
std::optional<EventKind> parse_event_kind(std::string_view text);

/// Lowercase token such as `pdf`, `html`, `tar.gz`.
bool is_format_tag(std::string_view text);
/// Uppercase classification-system token such as `DOI`, `PMID`.
bool is_system_token(std::string_view text);

/// NFC-normalizes every text value in place of a copy.
UmsRecord normalized(UmsRecord record);

/// Appends `value` unless already present. Returns true when appended.
template <typename T>
bool append_unique(std::vector<T>& list, const T& value) {
  for (const auto& existing : list) {
    if (existing == value) return false;
  }
  list.push_back(value);
  return true;
}

}  // namespace ums
