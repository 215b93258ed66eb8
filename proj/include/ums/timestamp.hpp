#pragma once

#include <chrono>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace ums {

/// Broken-down date/time as written in some source, before any zone conversion.
struct DateTimeFields {
  enum class Zone { none, utc, offset };

  int year = 0;
  int month = 0;
  int day = 0;
  bool has_time = false;
  int hour = 0;
  int minute = 0;
  int second = 0;
  Zone zone = Zone::none;
  int offset_minutes = 0;  // east of UTC
};

/// Recognizes ISO 8601 (`2011-03-01T16:35:22Z`, `2011-03-06T19:04:38+01:00`, `2011-03-01`, `1954`),
/// the extractor shape (`2011:03:01 16:35:22Z`) and PDF date strings (`D:20110301163522Z`,
/// `D:20110306190438+01'00'`). Anything else yields nullopt.
std::optional<DateTimeFields> parse_datetime_fields(std::string_view text);

/// Renders fields as `YYYY:MM:DD hh:mm:ss` plus `Z` or `+hh:mm` when the source carried a zone.
std::string exif_style(const DateTimeFields& fields);

/// UTC timestamp in canonical lexical form: `YYYY-MM-DDThh:mm:ssZ` or date-only `YYYY-MM-DD`.
/// Sources without a zone designator are taken as UTC.
class Timestamp {
 public:
  static std::optional<Timestamp> parse(std::string_view text);
  static std::optional<Timestamp> parse_canonical(std::string_view text);
  static std::optional<Timestamp> from_fields(const DateTimeFields& fields);
  static Timestamp from_time_point(std::chrono::sys_seconds tp);

  const std::string& str() const { return text_; }
  bool date_only() const { return date_only_; }
  std::chrono::sys_seconds time_point() const { return tp_; }
  int year() const;

  bool operator==(const Timestamp& other) const { return text_ == other.text_; }
  std::strong_ordering operator<=>(const Timestamp& other) const;

 private:
  std::string text_;
  bool date_only_ = false;
  std::chrono::sys_seconds tp_{};
};

}  // namespace ums
