#include "ums/record.hpp"

#include "ums/text.hpp"

#include <array>
#include <utility>

namespace ums {

namespace {

constexpr std::array<std::pair<DocType, std::string_view>, 5> kDocTypes{{
    {DocType::text, "text"},
    {DocType::image, "image"},
    {DocType::photo, "photo"},
    {DocType::video, "video"},
    {DocType::sound, "sound"},
}};

constexpr std::array<std::pair<EventKind, std::string_view>, 6> kEventKinds{{
    {EventKind::create, "create"},
    {EventKind::rename, "rename"},
    {EventKind::reclassify, "reclassify"},
    {EventKind::relocate, "relocate"},
    {EventKind::reformat, "reformat"},
    {EventKind::translate, "translate"},
}};

void nfc_all(std::vector<std::string>& values) {
  for (auto& v : values) v = nfc(v);
}

}  // namespace

std::string_view to_string(DocType type) {
  for (const auto& [t, s] : kDocTypes) {
    if (t == type) return s;
  }
  return "text";
}

std::optional<DocType> parse_doc_type(std::string_view text) {
  for (const auto& [t, s] : kDocTypes) {
    if (s == text) return t;
  }
  return std::nullopt;
}

std::string_view to_string(EventKind kind) {
  for (const auto& [k, s] : kEventKinds) {
    if (k == kind) return s;
  }
  return "create";
}

std::optional<EventKind> parse_event_kind(std::string_view text) {
  for (const auto& [k, s] : kEventKinds) {
    if (s == text) return k;
  }
  return std::nullopt;
}

bool is_format_tag(std::string_view text) {
  if (text.empty()) return false;
  auto alnum = [](char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'); };
  if (!alnum(text.front())) return false;
  for (char c : text) {
    if (!alnum(c) && c != '.' && c != '+' && c != '-' && c != '_') return false;
  }
  return true;
}

bool is_system_token(std::string_view text) {
  if (text.empty()) return false;
  auto upnum = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'); };
  if (!upnum(text.front())) return false;
  for (char c : text) {
    if (!upnum(c) && c != '-' && c != '_') return false;
  }
  return true;
}

UmsRecord normalized(UmsRecord r) {
  r.name = nfc(r.name);
  nfc_all(r.synonyms);
  nfc_all(r.formats);
  if (r.summary) r.summary = nfc(*r.summary);
  nfc_all(r.languages);
  nfc_all(r.locations);
  nfc_all(r.creators);
  for (auto& b : r.identifiers) {
    b.system = nfc(b.system);
    b.id = nfc(b.id);
  }
  for (auto& s : r.subjects) {
    s.text = nfc(s.text);
    s.source = nfc(s.source);
  }
  nfc_all(r.tags);
  for (auto& e : r.history) e.payload = nfc(e.payload);
  return r;
}

}  // namespace ums
