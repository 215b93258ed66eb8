#include "ums/timestamp.hpp"

#include <algorithm>
#include <cstdio>

namespace ums {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  bool done() const { return pos_ == s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool digits(int n, int& value) {
    if (pos_ + n > s_.size()) return false;
    int v = 0;
    for (int i = 0; i < n; ++i) {
      char c = s_[pos_ + i];
      if (c < '0' || c > '9') return false;
      v = v * 10 + (c - '0');
    }
    pos_ += n;
    value = v;
    return true;
  }
  bool at_digit() const { return peek() >= '0' && peek() <= '9'; }
  std::string_view rest() const { return s_.substr(pos_); }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

bool fields_valid(const DateTimeFields& f) {
  using namespace std::chrono;
  year_month_day ymd{year{f.year}, month{static_cast<unsigned>(f.month)},
                     day{static_cast<unsigned>(f.day)}};
  if (f.year < 1 || f.year > 9999 || !ymd.ok()) return false;
  if (f.hour > 23 || f.minute > 59 || f.second > 59) return false;
  if (f.zone == DateTimeFields::Zone::offset &&
      (f.offset_minutes < -23 * 60 - 59 || f.offset_minutes > 23 * 60 + 59)) {
    return false;
  }
  return true;
}

// Zone suffix after a time: Z, +hh:mm, +hhmm, +hh (ISO / extractor forms).
bool parse_iso_zone(Cursor& c, DateTimeFields& f) {
  if (c.done()) return true;
  if (c.eat('Z')) {
    f.zone = DateTimeFields::Zone::utc;
    return c.done();
  }
  int sign = 0;
  if (c.eat('+')) sign = 1;
  else if (c.eat('-')) sign = -1;
  else return false;
  int hh = 0, mm = 0;
  if (!c.digits(2, hh)) return false;
  if (c.eat(':')) {
    if (!c.digits(2, mm)) return false;
  } else if (!c.done() && !c.digits(2, mm)) {
    return false;
  }
  if (hh > 23 || mm > 59) return false;
  f.zone = DateTimeFields::Zone::offset;
  f.offset_minutes = sign * (hh * 60 + mm);
  return c.done();
}

std::optional<DateTimeFields> parse_pdf(std::string_view text) {
  Cursor c(text.substr(2));
  DateTimeFields f;
  f.month = 1;
  f.day = 1;
  if (!c.digits(4, f.year)) return std::nullopt;
  // PDF allows truncation after any component.
  if (c.at_digit() && !c.digits(2, f.month)) return std::nullopt;
  if (c.at_digit() && !c.digits(2, f.day)) return std::nullopt;
  if (c.at_digit()) {
    f.has_time = true;
    if (!c.digits(2, f.hour)) return std::nullopt;
    if (c.at_digit() && !c.digits(2, f.minute)) return std::nullopt;
    if (c.at_digit() && !c.digits(2, f.second)) return std::nullopt;
  }
  if (!c.done()) {
    if (c.eat('Z')) {
      f.zone = DateTimeFields::Zone::utc;
      // some writers emit Z00'00'
      int ignored = 0;
      if (c.digits(2, ignored)) {
        c.eat('\'');
        c.digits(2, ignored);
        c.eat('\'');
      }
    } else {
      int sign = c.eat('+') ? 1 : (c.eat('-') ? -1 : 0);
      if (sign == 0) return std::nullopt;
      int hh = 0, mm = 0;
      if (!c.digits(2, hh)) return std::nullopt;
      if (c.eat('\'')) {
        if (c.at_digit()) {
          if (!c.digits(2, mm)) return std::nullopt;
          c.eat('\'');
        }
      }
      if (hh > 23 || mm > 59) return std::nullopt;
      f.zone = DateTimeFields::Zone::offset;
      f.offset_minutes = sign * (hh * 60 + mm);
    }
    if (!c.done()) return std::nullopt;
  }
  if (!f.has_time) f.zone = DateTimeFields::Zone::none;
  if (!fields_valid(f)) return std::nullopt;
  return f;
}

// ISO 8601 (sep '-') or extractor shape (sep ':').
std::optional<DateTimeFields> parse_separated(std::string_view text, char sep) {
  Cursor c(text);
  DateTimeFields f;
  if (!c.digits(4, f.year) || !c.eat(sep) || !c.digits(2, f.month) || !c.eat(sep) ||
      !c.digits(2, f.day)) {
    return std::nullopt;
  }
  if (!c.done()) {
    bool ok_sep = sep == '-' ? (c.eat('T') || c.eat(' ')) : c.eat(' ');
    if (!ok_sep) return std::nullopt;
    f.has_time = true;
    if (!c.digits(2, f.hour) || !c.eat(':') || !c.digits(2, f.minute)) return std::nullopt;
    if (c.eat(':')) {
      if (!c.digits(2, f.second)) return std::nullopt;
      if (c.eat('.')) {
        int digit = 0;
        if (!c.digits(1, digit)) return std::nullopt;
        while (c.at_digit()) c.digits(1, digit);
      }
    }
    if (!parse_iso_zone(c, f)) return std::nullopt;
  }
  if (!fields_valid(f)) return std::nullopt;
  return f;
}

}  // namespace

std::optional<DateTimeFields> parse_datetime_fields(std::string_view text) {
  if (text.size() > 2 && text[0] == 'D' && text[1] == ':') return parse_pdf(text);
  if (text.size() >= 10 && text[4] == '-') return parse_separated(text, '-');
  if (text.size() >= 10 && text[4] == ':') return parse_separated(text, ':');
  // bare year, as in birth or founding dates; read as January 1
  if (text.size() == 4 && std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    DateTimeFields f;
    f.year = (text[0] - '0') * 1000 + (text[1] - '0') * 100 + (text[2] - '0') * 10 + (text[3] - '0');
    f.month = 1;
    f.day = 1;
    return f;
  }
  return std::nullopt;
}

std::string exif_style(const DateTimeFields& f) {
  char buf[64];
  if (!f.has_time) {
    std::snprintf(buf, sizeof buf, "%04d:%02d:%02d", f.year, f.month, f.day);
    return buf;
  }
  std::snprintf(buf, sizeof buf, "%04d:%02d:%02d %02d:%02d:%02d", f.year, f.month, f.day, f.hour,
                f.minute, f.second);
  std::string out = buf;
  if (f.zone == DateTimeFields::Zone::utc) {
    out += 'Z';
  } else if (f.zone == DateTimeFields::Zone::offset) {
    int off = f.offset_minutes;
    char sign = off < 0 ? '-' : '+';
    if (off < 0) off = -off;
    std::snprintf(buf, sizeof buf, "%c%02d:%02d", sign, off / 60, off % 60);
    out += buf;
  }
  return out;
}

std::optional<Timestamp> Timestamp::from_fields(const DateTimeFields& f) {
  using namespace std::chrono;
  if (!fields_valid(f)) return std::nullopt;
  const year_month_day ymd{std::chrono::year{f.year}, month{static_cast<unsigned>(f.month)},
                           day{static_cast<unsigned>(f.day)}};
  const sys_days day_point{ymd};
  Timestamp ts;
  if (!f.has_time) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", f.year, f.month, f.day);
    ts.text_ = buf;
    ts.date_only_ = true;
    ts.tp_ = sys_seconds{day_point.time_since_epoch()};
    return ts;
  }
  sys_seconds tp = sys_seconds{day_point.time_since_epoch()} + hours{f.hour} + minutes{f.minute} +
                   seconds{f.second};
  if (f.zone == DateTimeFields::Zone::offset) tp -= minutes{f.offset_minutes};
  auto back = year_month_day{floor<days>(tp)};
  if (static_cast<int>(back.year()) < 1 || static_cast<int>(back.year()) > 9999) {
    return std::nullopt;
  }
  return from_time_point(tp);
}

Timestamp Timestamp::from_time_point(std::chrono::sys_seconds tp) {
  using namespace std::chrono;
  auto day_point = floor<days>(tp);
  year_month_day ymd{day_point};
  hh_mm_ss hms{tp - day_point};
  // hand-rolled; snprintf showed up when verifying long histories
  char buf[20];
  auto put = [&buf](int at, int width, int value) {
    for (int i = width - 1; i >= 0; --i, value /= 10) buf[at + i] = static_cast<char>('0' + value % 10);
  };
  put(0, 4, static_cast<int>(ymd.year()));
  buf[4] = '-';
  put(5, 2, static_cast<int>(static_cast<unsigned>(ymd.month())));
  buf[7] = '-';
  put(8, 2, static_cast<int>(static_cast<unsigned>(ymd.day())));
  buf[10] = 'T';
  put(11, 2, static_cast<int>(hms.hours().count()));
  buf[13] = ':';
  put(14, 2, static_cast<int>(hms.minutes().count()));
  buf[16] = ':';
  put(17, 2, static_cast<int>(hms.seconds().count()));
  buf[19] = 'Z';
  Timestamp ts;
  ts.text_.assign(buf, sizeof buf);
  ts.tp_ = tp;
  return ts;
}

std::optional<Timestamp> Timestamp::parse(std::string_view text) {
  auto fields = parse_datetime_fields(text);
  if (!fields) return std::nullopt;
  return from_fields(*fields);
}

std::optional<Timestamp> Timestamp::parse_canonical(std::string_view text) {
  if (text.size() != 10 && text.size() != 20) return std::nullopt;
  auto ts = parse(text);
  if (!ts || ts->str() != text) return std::nullopt;
  return ts;
}

int Timestamp::year() const {
  using namespace std::chrono;
  return static_cast<int>(year_month_day{floor<days>(tp_)}.year());
}

std::strong_ordering Timestamp::operator<=>(const Timestamp& other) const {
  if (auto c = tp_ <=> other.tp_; c != 0) return c;
  return text_ <=> other.text_;
}

}  // namespace ums
