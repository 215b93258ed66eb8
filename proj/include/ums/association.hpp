#pragma once

#include "ums/error.hpp"
#include "ums/record.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ums {

enum class GroupCriterion { alphabet, date, theme, project, format, location };

std::string_view to_string(GroupCriterion criterion);
std::optional<GroupCriterion> parse_group_criterion(std::string_view text);

/// Group key used for records that lack the grouped field.
inline constexpr std::string_view kUndated = "~undated";
inline constexpr std::string_view kUntagged = "~untagged";
inline constexpr std::string_view kNoProject = "~noproject";
inline constexpr std::string_view kNoFormat = "~noformat";
inline constexpr std::string_view kNoLocation = "~nolocation";

inline constexpr std::string_view kProjectPrefix = "project:";

struct Group {
  std::string key;
  /// Record names, sorted.
  std::vector<std::string> members;

  bool operator==(const Group&) const = default;
};

/// The key one record falls under.
std::string group_key(const UmsRecord& record, GroupCriterion criterion);

/// Every record lands in exactly one group. Groups are sorted by key, members by name, both
/// bytewise.
std::vector<Group> group_by(const std::vector<UmsRecord>& records, GroupCriterion criterion);

class AssociationError : public Error {
 public:
  enum class Code { duplicate_record, unknown_record };

  AssociationError(Code code, std::string detail);
  Code code() const { return code_; }

 private:
  Code code_;
};

/// Immutable snapshot of a corpus. Records are identified by name, which must be unique.
class CorpusIndex {
 public:
  using Postings = std::map<std::string, std::vector<std::string>, std::less<>>;

  /// Throws AssociationError(duplicate_record).
  explicit CorpusIndex(std::vector<UmsRecord> records);

  const std::vector<UmsRecord>& records() const { return records_; }
  /// tag -> sorted names of the records carrying it
  const Postings& tag_index() const { return tags_; }
  /// location -> sorted names of the records stored there
  const Postings& location_index() const { return locations_; }
  const UmsRecord* find(std::string_view name) const;

  bool operator==(const CorpusIndex&) const = default;

 private:
  std::vector<UmsRecord> records_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
  Postings tags_;
  Postings locations_;
};

struct Relation {
  std::string name;
  /// Jaccard similarity of the two tag sets.
  double score = 0.0;

  bool operator==(const Relation&) const = default;
};

/// Records sharing at least one tag with `name`, best score first, ties by name. Throws
/// AssociationError(unknown_record).
std::vector<Relation> related(const CorpusIndex& index, std::string_view name);

}  // namespace ums
