#pragma once

#include "ums/error.hpp"
#include "ums/record.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ums {

// Sidecar format v1: UTF-8, LF endings, trailing newline. Line 1 is `ums: 1`, then `key: value`
// lines in the fixed key order
//
//   name, synonym*, format*, date?, type?, summary?, language*, location*, creator*,
//   identifier*, access?, subject*, tag*, history*, head?
//
// Values escape `\`, LF and `|` as `\\`, `\n`, `\|`.

inline constexpr std::string_view kSidecarHeader = "ums: 1";
inline constexpr std::string_view kSidecarExtension = ".ums";

enum class ParseMode { strict, lenient };

class SidecarError : public Error {
 public:
  enum class Code { syntax, unknown_key, duplicate_singleton_key, invariant_violation };

  SidecarError(Code code, std::size_t line, std::string detail);

  Code code() const { return code_; }
  /// 1-based line number; 0 when the error is not tied to a line.
  std::size_t line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  Code code_;
  std::size_t line_;
  std::string detail_;
};

std::string_view to_string(SidecarError::Code code);

struct ParsedRecord {
  UmsRecord record;
  /// Unknown keys skipped in lenient mode.
  std::vector<std::string> warnings;
};

/// Deterministic sidecar bytes. Throws SidecarError(invariant_violation) when the record breaks
/// a structural invariant (empty name, non-NFC text, duplicate list values, bad tokens).
std::string canonical_serialize(const UmsRecord& record);

ParsedRecord parse_record(std::string_view bytes, ParseMode mode = ParseMode::strict);

/// The exact `history: ...` line (without LF) for one event.
std::string history_line(const ProvenanceEvent& event);

/// Canonical serialization of everything except history and head.
std::string snapshot_serialize(const UmsRecord& record);

}  // namespace ums
