#pragma once

#include "ums/error.hpp"
#include "ums/extract.hpp"
#include "ums/record.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ums {

enum class UmsField {
  name, synonym, format, date, type, summary, language, location, creator, identifier, access,
  subject, tag
};

std::string_view to_string(UmsField field);
std::optional<UmsField> parse_ums_field(std::string_view text);
bool is_singleton(UmsField field);

/// `carrier.RawKey -> field [unless OtherKey]`. RawKey matches case-insensitively and may end
/// in `*`. Identifier rules name their system: `identifier:PMID`.
struct MappingRule {
  Carrier carrier = Carrier::pdf;
  std::string key;
  UmsField field = UmsField::name;
  std::string system;
  /// Rule is skipped when the raw metadata holds a pair with this key.
  std::string unless;
  std::size_t line = 0;

  std::string str() const;
  bool operator==(const MappingRule&) const = default;
};

struct MappingTable {
  std::vector<MappingRule> rules;

  bool covers(Carrier carrier) const;
};

class MappingError : public Error {
 public:
  enum class Code { syntax, rule_conflict, uncovered_carrier };

  MappingError(Code code, std::size_t line, std::string detail);
  Code code() const { return code_; }
  std::size_t line() const { return line_; }

 private:
  Code code_;
  std::size_t line_;
};

std::string_view to_string(MappingError::Code code);

inline constexpr std::string_view kMappingHeader = "ums-mapping: 1";

/// Line 1 `ums-mapping: 1`, then one rule per line; `#` comments and blank lines are ignored.
MappingTable parse_mapping_table(std::string_view text);
std::string serialize_mapping_table(const MappingTable& table);

/// pdf: Title->name, Author->creator, Creator->creator unless Author, FileType/MIMEType/
/// PDFVersion->format, CreateDate->date. html: Title->name, author->creator,
/// description->summary, ncbi_uidlist->identifier:PMID.
const MappingTable& default_mapping_table();

struct MappedPair {
  RawPair pair;
  std::string rule;
};

struct MappingResult {
  UmsRecord record;
  std::vector<MappedPair> mapped;
  std::vector<RawPair> unmapped;
};

/// First matching rule wins for each pair. Values that do not parse for their field (a date that
/// is not a date, a language that is not a code) are returned unmapped. Format values collapse to
/// one token: a MIME type to its subtype, a bare version number to the carrier, anything else to
/// its first word in lowercase. With no format mapped the carrier itself is the format.
///
/// Throws MappingError(uncovered_carrier) when pairs exist but no rule names the carrier, and
/// MappingError(rule_conflict) when two rules give a singleton field different values.
MappingResult map_raw_to_ums(const RawMetadata& raw, const MappingTable& rules,
                             const std::optional<std::string>& source_location = std::nullopt);

}  // namespace ums
