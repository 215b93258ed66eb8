#pragma once

#include "ums/metabase.hpp"
#include "ums/record.hpp"
#include "ums/severity.hpp"

#include <string>
#include <vector>

namespace ums {

enum class ValidationMode { strict, lenient };

struct Violation {
  std::string code;
  Severity severity = Severity::error;
  std::string field;
  std::string value;
  std::string message;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool empty() const { return violations.empty(); }
  bool has_errors() const;
  bool contains(std::string_view code) const;
};

/// Checks a record against the metabase.
///
/// Required fields (name, format, date) and catalog membership are errors in strict mode and
/// warnings in lenient mode. Missing recommended fields (language, location, creator) are always
/// warnings. Unregistered identifier systems are always errors.
ValidationReport validate_record(const UmsRecord& record, const Metabase& metabase,
                                 ValidationMode mode);

}  // namespace ums
