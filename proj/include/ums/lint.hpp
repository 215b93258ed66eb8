#pragma once

#include "ums/extract.hpp"
#include "ums/record.hpp"
#include "ums/severity.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ums {

class Metabase;

struct LintFinding {
  std::string code;
  Severity severity = Severity::warning;
  std::string message;
  /// Pairs copied verbatim from the linted input.
  std::vector<RawPair> evidence;

  bool operator==(const LintFinding&) const = default;
};

struct LintConfig {
  /// Values treated as filler, compared case-insensitively after trimming. Empty by default.
  std::vector<std::string> placeholders;
  /// Systems that should appear together; a record holding one but not the other is a gap.
  std::vector<std::pair<std::string, std::string>> related_systems{{"OCLC", "PMID"}};
};

/// FORMAT_REDUNDANCY, AUTHOR_AMBIGUOUS, TIMESTAMP_COINCIDENT, IDENTIFIER_INVALID and
/// PLACEHOLDER_VALUE, in that order. A pair's key names a system when it equals (ignoring case and
/// any ` (n)` suffix) a system registered in `metabase`.
std::vector<LintFinding> lint_raw(const RawMetadata& raw, const Metabase& metabase,
                                  const LintConfig& config = {});

/// MISSING_RECOMMENDED, UNCATALOGED_CREATOR, SYSTEM_GAP and EMPTY_SUBJECTS, in that order.
std::vector<LintFinding> lint_record(const UmsRecord& record, const Metabase& metabase,
                                     const LintConfig& config = {});

bool has_actionable(const std::vector<LintFinding>& findings);

/// One `CODE<TAB>severity<TAB>message` line per finding.
std::string format_findings(const std::vector<LintFinding>& findings);
/// JSON array of {code, severity, message, evidence: [{key, value}]}.
std::string findings_to_json(const std::vector<LintFinding>& findings);

}  // namespace ums
