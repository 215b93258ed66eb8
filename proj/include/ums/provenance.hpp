#pragma once

#include "ums/error.hpp"
#include "ums/record.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ums {

// History is append-only. Event 0 (create) commits to the original record: its payload lists
// how many synonyms/formats/languages/locations/identifiers existed and the digest of the
// original snapshot. Every later line carries the digest of the line before it, and `head`
// carries the digest of the last line, so editing any byte of any line is detectable.

class ProvenanceError : public Error {
 public:
  enum class Code { malformed_payload, broken_chain };

  ProvenanceError(Code code, std::string detail);
  Code code() const { return code_; }

 private:
  Code code_;
};

std::string_view to_string(ProvenanceError::Code code);

struct HistoryStatus {
  bool ok = true;
  /// First seq at which the chain fails; equals the history length when only `head` is wrong.
  std::uint64_t broken_at = 0;

  explicit operator bool() const { return ok; }
  bool operator==(const HistoryStatus&) const = default;
};

struct AppliedEvent {
  UmsRecord record;
  /// e.g. "NonMonotoneTimestamp: ..."; the event is recorded regardless.
  std::vector<std::string> warnings;
};

/// Starts the history of a record that has none: appends the create event and sets head.
/// Throws ProvenanceError(broken_chain) if a history already exists.
UmsRecord begin_history(UmsRecord record, const Timestamp& timestamp);

/// Appends one event and its derived value. A record without history gets its create event
/// first, stamped with the same timestamp.
///
/// rename appends to synonyms, reclassify (`SYSTEM|id`) to identifiers, relocate to locations,
/// reformat to formats, translate to languages. A value already present is not appended again
/// but the event is still recorded.
///
/// Throws ProvenanceError(broken_chain) when the existing history does not verify and
/// ProvenanceError(malformed_payload) for a payload that does not fit the event kind.
AppliedEvent apply_event(const UmsRecord& record, EventKind kind, std::string_view payload,
                         const Timestamp& timestamp);

HistoryStatus verify_history(const UmsRecord& record);

/// The record exactly as it was when its history began. Throws ProvenanceError(broken_chain).
UmsRecord original_view(const UmsRecord& record);

}  // namespace ums
