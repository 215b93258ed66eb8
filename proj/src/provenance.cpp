#include "ums/provenance.hpp"

#include "ums/digest.hpp"
#include "ums/languages.hpp"
#include "ums/sidecar.hpp"
#include "ums/text.hpp"

#include <charconv>

namespace ums {

namespace {

struct CreateCounts {
  std::size_t synonyms = 0;
  std::size_t formats = 0;
  std::size_t languages = 0;
  std::size_t locations = 0;
  std::size_t identifiers = 0;
  std::string original;
};

std::string create_payload(const UmsRecord& r) {
  return "synonyms=" + std::to_string(r.synonyms.size()) +
         ",formats=" + std::to_string(r.formats.size()) +
         ",languages=" + std::to_string(r.languages.size()) +
         ",locations=" + std::to_string(r.locations.size()) +
         ",identifiers=" + std::to_string(r.identifiers.size()) +
         ",original=" + short_digest(snapshot_serialize(r));
}

std::optional<CreateCounts> parse_create_payload(std::string_view payload) {
  CreateCounts c;
  std::size_t* slots[] = {&c.synonyms, &c.formats, &c.languages, &c.locations, &c.identifiers};
  constexpr std::string_view names[] = {"synonyms", "formats", "languages", "locations",
                                        "identifiers"};
  auto parts = split_unescaped(payload, ',');
  if (parts.size() != 6) return std::nullopt;
  for (std::size_t i = 0; i < 5; ++i) {
    auto part = parts[i];
    if (part.substr(0, names[i].size() + 1) != std::string(names[i]) + "=") return std::nullopt;
    auto digits = part.substr(names[i].size() + 1);
    if (!all_digits(digits) || (digits.size() > 1 && digits[0] == '0')) return std::nullopt;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), *slots[i]);
    if (ec != std::errc{}) return std::nullopt;
  }
  if (parts[5].substr(0, 9) != "original=") return std::nullopt;
  c.original = std::string(parts[5].substr(9));
  if (!is_short_digest(c.original)) return std::nullopt;
  return c;
}

template <typename T>
bool truncate(std::vector<T>& list, std::size_t n) {
  if (n > list.size()) return false;
  list.resize(n);
  return true;
}

// The create-time record, or nullopt if event 0 does not describe this record.
std::optional<UmsRecord> reconstruct_original(const UmsRecord& record) {
  if (record.history.empty()) return std::nullopt;
  const ProvenanceEvent& genesis = record.history.front();
  if (genesis.kind != EventKind::create) return std::nullopt;
  auto counts = parse_create_payload(genesis.payload);
  if (!counts) return std::nullopt;
  // every field but the history, which can be long
  UmsRecord original;
  original.name = record.name;
  original.synonyms = record.synonyms;
  original.formats = record.formats;
  original.date = record.date;
  original.doc_type = record.doc_type;
  original.summary = record.summary;
  original.languages = record.languages;
  original.locations = record.locations;
  original.creators = record.creators;
  original.identifiers = record.identifiers;
  original.access = record.access;
  original.subjects = record.subjects;
  original.tags = record.tags;
  original.history.push_back(genesis);
  if (!truncate(original.synonyms, counts->synonyms) ||
      !truncate(original.formats, counts->formats) ||
      !truncate(original.languages, counts->languages) ||
      !truncate(original.locations, counts->locations) ||
      !truncate(original.identifiers, counts->identifiers)) {
    return std::nullopt;
  }
  try {
    if (short_digest(snapshot_serialize(original)) != counts->original) return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
  original.head = short_digest(history_line(genesis));
  return original;
}

[[noreturn]] void malformed(std::string detail) {
  throw ProvenanceError(ProvenanceError::Code::malformed_payload, std::move(detail));
}

}  // namespace

ProvenanceError::ProvenanceError(Code code, std::string detail)
    : Error(std::string(to_string(code)) + ": " + detail), code_(code) {}

std::string_view to_string(ProvenanceError::Code code) {
  switch (code) {
    case ProvenanceError::Code::malformed_payload: return "MalformedPayload";
    case ProvenanceError::Code::broken_chain: return "BrokenChain";
  }
  return "ProvenanceError";
}

UmsRecord begin_history(UmsRecord record, const Timestamp& timestamp) {
  if (!record.history.empty() || !record.head.empty()) {
    throw ProvenanceError(ProvenanceError::Code::broken_chain, "record already has a history");
  }
  ProvenanceEvent genesis;
  genesis.seq = 0;
  genesis.timestamp = timestamp;
  genesis.kind = EventKind::create;
  genesis.payload = create_payload(record);
  genesis.prev = std::string(kGenesisDigest);
  record.head = short_digest(history_line(genesis));
  record.history.push_back(std::move(genesis));
  return record;
}

HistoryStatus verify_history(const UmsRecord& record) {
  const auto& h = record.history;
  if (h.empty()) return HistoryStatus{record.head.empty(), 0};
  if (!reconstruct_original(record)) return HistoryStatus{false, 0};
  std::string expected_prev(kGenesisDigest);
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& e = h[i];
    bool kind_ok = (i == 0) == (e.kind == EventKind::create);
    if (e.seq != i || !kind_ok || e.prev != expected_prev) return HistoryStatus{false, i};
    expected_prev = short_digest(history_line(e));
  }
  if (record.head != expected_prev) return HistoryStatus{false, h.size()};
  return HistoryStatus{};
}

UmsRecord original_view(const UmsRecord& record) {
  if (record.history.empty()) {
    if (!record.head.empty()) {
      throw ProvenanceError(ProvenanceError::Code::broken_chain, "head without history");
    }
    return record;
  }
  auto status = verify_history(record);
  if (!status) {
    throw ProvenanceError(ProvenanceError::Code::broken_chain,
                          "history broken at seq " + std::to_string(status.broken_at));
  }
  return *reconstruct_original(record);
}

AppliedEvent apply_event(const UmsRecord& record, EventKind kind, std::string_view payload,
                         const Timestamp& timestamp) {
  if (auto status = verify_history(record); !status) {
    throw ProvenanceError(ProvenanceError::Code::broken_chain,
                          "history broken at seq " + std::to_string(status.broken_at));
  }
  if (kind == EventKind::create) malformed("create is recorded when a history begins");
  if (payload.empty()) malformed("empty payload");
  if (!is_valid_utf8(payload)) malformed("payload is not UTF-8");
  std::string value = nfc(payload);

  AppliedEvent out;
  out.record = record.history.empty() ? begin_history(record, timestamp) : record;
  UmsRecord& r = out.record;

  switch (kind) {
    case EventKind::create:
      break;
    case EventKind::rename:
      append_unique(r.synonyms, value);
      break;
    case EventKind::relocate:
      append_unique(r.locations, value);
      break;
    case EventKind::reformat:
      if (!is_format_tag(value)) malformed("'" + value + "' is not a format tag");
      append_unique(r.formats, value);
      break;
    case EventKind::translate:
      if (!is_language_code(value) || is_programming_language(value)) {
        malformed("'" + value + "' is not a language code");
      }
      append_unique(r.languages, value);
      break;
    case EventKind::reclassify: {
      auto bar = value.find('|');
      if (bar == std::string::npos) malformed("reclassify payload must be SYSTEM|id");
      IdentifierBinding id{value.substr(0, bar), value.substr(bar + 1)};
      if (!is_system_token(id.system)) malformed("'" + id.system + "' is not a system token");
      if (id.id.empty() || id.id.find('|') != std::string::npos) malformed("bad identifier");
      append_unique(r.identifiers, id);
      break;
    }
  }

  const ProvenanceEvent& last = r.history.back();
  if (timestamp < last.timestamp) {
    out.warnings.push_back("NonMonotoneTimestamp: " + timestamp.str() + " precedes " +
                           last.timestamp.str());
  }
  ProvenanceEvent e;
  e.seq = r.history.size();
  e.timestamp = timestamp;
  e.kind = kind;
  e.payload = std::move(value);
  e.prev = r.head;
  r.head = short_digest(history_line(e));
  r.history.push_back(std::move(e));
  return out;
}

}  // namespace ums
