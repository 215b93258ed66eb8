#include "ums/sidecar.hpp"

#include "ums/digest.hpp"
#include "ums/text.hpp"

#include <array>
#include <charconv>
#include <set>

namespace ums {

SidecarError::SidecarError(Code code, std::size_t line, std::string detail)
    : Error(std::string(to_string(code)) + (line ? " at line " + std::to_string(line) : "") +
            ": " + detail),
      code_(code),
      line_(line),
      detail_(std::move(detail)) {}

std::string_view to_string(SidecarError::Code code) {
  switch (code) {
    case SidecarError::Code::syntax: return "SyntaxError";
    case SidecarError::Code::unknown_key: return "UnknownKey";
    case SidecarError::Code::duplicate_singleton_key: return "DuplicateSingletonKey";
    case SidecarError::Code::invariant_violation: return "InvariantViolation";
  }
  return "SidecarError";
}

namespace {

enum class Key {
  name, synonym, format, date, type, summary, language, location, creator, identifier, access,
  subject, tag, history, head
};

struct KeyInfo {
  Key key;
  std::string_view text;
  bool singleton;
};

constexpr std::array<KeyInfo, 15> kKeys{{
    {Key::name, "name", true},
    {Key::synonym, "synonym", false},
    {Key::format, "format", false},
    {Key::date, "date", true},
    {Key::type, "type", true},
    {Key::summary, "summary", true},
    {Key::language, "language", false},
    {Key::location, "location", false},
    {Key::creator, "creator", false},
    {Key::identifier, "identifier", false},
    {Key::access, "access", true},
    {Key::subject, "subject", false},
    {Key::tag, "tag", false},
    {Key::history, "history", false},
    {Key::head, "head", true},
}};

const KeyInfo* find_key(std::string_view text) {
  for (const auto& k : kKeys) {
    if (k.text == text) return &k;
  }
  return nullptr;
}

[[noreturn]] void invariant(std::string detail) {
  throw SidecarError(SidecarError::Code::invariant_violation, 0, std::move(detail));
}

void check_text(std::string_view field, std::string_view value) {
  if (value.empty()) invariant(std::string(field) + " value is empty");
  if (value.find('\r') != std::string_view::npos) {
    invariant(std::string(field) + " value contains a carriage return");
  }
  if (!is_valid_utf8(value)) invariant(std::string(field) + " value is not valid UTF-8");
  if (nfc(value) != value) invariant(std::string(field) + " value is not NFC-normalized");
}

template <typename T>
void check_unique(std::string_view field, const std::vector<T>& values) {
  std::set<T> seen;
  for (const auto& v : values) {
    if (!seen.insert(v).second) invariant("duplicate " + std::string(field) + " value");
  }
}

class Writer {
 public:
  void line(std::string_view key, std::string_view escaped_value) {
    out_.append(key);
    out_.append(": ");
    out_.append(escaped_value);
    out_.push_back('\n');
  }
  void text(std::string_view key, std::string_view value) {
    check_text(key, value);
    line(key, escape_value(value));
  }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

void write_body(Writer& w, const UmsRecord& r) {
  w.text("name", r.name);
  check_unique("synonym", r.synonyms);
  for (const auto& s : r.synonyms) w.text("synonym", s);
  check_unique("format", r.formats);
  for (const auto& f : r.formats) {
    if (!is_format_tag(f)) invariant("format '" + f + "' is not a lowercase token");
    w.text("format", f);
  }
  if (r.date) w.line("date", r.date->str());
  if (r.doc_type) w.line("type", to_string(*r.doc_type));
  if (r.summary) w.text("summary", *r.summary);
  check_unique("language", r.languages);
  for (const auto& l : r.languages) w.text("language", l);
  check_unique("location", r.locations);
  for (const auto& l : r.locations) w.text("location", l);
  check_unique("creator", r.creators);
  for (const auto& c : r.creators) w.text("creator", c);
  check_unique("identifier", r.identifiers);
  for (const auto& b : r.identifiers) {
    if (!is_system_token(b.system)) invariant("identifier system '" + b.system + "' is not a token");
    check_text("identifier", b.id);
    w.line("identifier", b.system + "|" + escape_value(b.id));
  }
  if (r.access) w.line("access", std::to_string(static_cast<int>(*r.access)));
  check_unique("subject", r.subjects);
  for (const auto& s : r.subjects) {
    check_text("subject", s.text);
    if (s.source.empty()) {
      w.line("subject", escape_value(s.text));
    } else {
      check_text("subject source", s.source);
      w.line("subject", escape_value(s.source) + "|" + escape_value(s.text));
    }
  }
  check_unique("tag", r.tags);
  for (const auto& t : r.tags) w.text("tag", t);
}

std::string history_value(const ProvenanceEvent& e) {
  std::string v = std::to_string(e.seq);
  v += '|';
  v += e.timestamp.str();
  v += '|';
  v += to_string(e.kind);
  v += '|';
  v += escape_value(e.payload);
  v += '|';
  v += e.prev;
  return v;
}

// ---- parsing ----

[[noreturn]] void syntax(std::size_t line, std::string detail) {
  throw SidecarError(SidecarError::Code::syntax, line, std::move(detail));
}

std::string unescape_or_throw(std::string_view escaped, std::size_t line) {
  for (std::size_t i = 0; i < escaped.size(); ++i) {
    if (escaped[i] == '\\') ++i;
    else if (escaped[i] == '|') syntax(line, "unescaped '|' in value");
  }
  std::string out;
  if (!unescape_value(escaped, out)) syntax(line, "invalid escape sequence");
  if (out.empty()) syntax(line, "empty value");
  return nfc(out);
}

std::optional<std::uint64_t> parse_seq(std::string_view text) {
  if (!all_digits(text) || (text.size() > 1 && text[0] == '0')) return std::nullopt;
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || p != text.data() + text.size()) return std::nullopt;
  return v;
}

ProvenanceEvent parse_history(std::string_view value, std::size_t line) {
  auto fields = split_unescaped(value);
  if (fields.size() != 5) syntax(line, "history value needs 5 fields");
  ProvenanceEvent e;
  auto seq = parse_seq(fields[0]);
  if (!seq) syntax(line, "bad history sequence number");
  e.seq = *seq;
  auto ts = Timestamp::parse_canonical(fields[1]);
  if (!ts) syntax(line, "bad history timestamp");
  e.timestamp = *ts;
  auto kind = parse_event_kind(fields[2]);
  if (!kind) syntax(line, "unknown history event");
  e.kind = *kind;
  e.payload = unescape_or_throw(fields[3], line);
  if (!is_short_digest(fields[4])) syntax(line, "bad history prev digest");
  e.prev = std::string(fields[4]);
  return e;
}

template <typename T>
void push_unique(std::vector<T>& list, T value, std::size_t line, std::string_view key) {
  if (!append_unique(list, value)) {
    throw SidecarError(SidecarError::Code::invariant_violation, line,
                       "duplicate " + std::string(key) + " value");
  }
}

}  // namespace

std::string history_line(const ProvenanceEvent& event) {
  return "history: " + history_value(event);
}

std::string snapshot_serialize(const UmsRecord& record) {
  Writer w;
  w.line("ums", "1");
  write_body(w, record);
  return w.take();
}

std::string canonical_serialize(const UmsRecord& record) {
  std::string out = snapshot_serialize(record);
  for (std::size_t i = 0; i < record.history.size(); ++i) {
    const auto& e = record.history[i];
    if (e.seq != i) invariant("history sequence numbers are not consecutive");
    check_text("history payload", e.payload);
    if (!is_short_digest(e.prev)) invariant("history prev digest malformed");
    out += history_line(e);
    out += '\n';
  }
  if (!record.head.empty()) {
    if (!is_short_digest(record.head)) invariant("head digest malformed");
    out += "head: " + record.head + "\n";
  }
  return out;
}

ParsedRecord parse_record(std::string_view bytes, ParseMode mode) {
  if (bytes.empty()) syntax(1, "empty input");

  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < bytes.size()) {
    auto nl = bytes.find('\n', start);
    if (nl == std::string_view::npos) {
      syntax(lines.size() + 1, "missing trailing newline");
    }
    lines.push_back(bytes.substr(start, nl - start));
    if (!is_valid_utf8(lines.back())) syntax(lines.size(), "invalid UTF-8");
    start = nl + 1;
  }
  if (lines.front() != kSidecarHeader) syntax(1, "expected 'ums: 1' header");

  ParsedRecord parsed;
  UmsRecord& r = parsed.record;
  std::set<Key> seen_singletons;
  int last_rank = -1;
  bool has_name = false;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    std::string_view line = lines[i];
    auto colon = line.find(':');
    if (colon == std::string_view::npos || colon == 0) syntax(lineno, "expected 'key: value'");
    std::string_view key_text = line.substr(0, colon);
    for (char c : key_text) {
      if (c < 'a' || c > 'z') syntax(lineno, "malformed key");
    }
    if (colon + 1 >= line.size() || line[colon + 1] != ' ') {
      syntax(lineno, "expected single space after colon");
    }
    std::string_view value = line.substr(colon + 2);
    if (value.empty()) syntax(lineno, "empty value");
    if (value.find('\r') != std::string_view::npos) syntax(lineno, "carriage return in value");

    const KeyInfo* info = find_key(key_text);
    if (!info) {
      if (mode == ParseMode::strict) {
        throw SidecarError(SidecarError::Code::unknown_key, lineno, std::string(key_text));
      }
      parsed.warnings.push_back("line " + std::to_string(lineno) + ": unknown key '" +
                                std::string(key_text) + "' ignored");
      continue;
    }
    if (info->singleton && !seen_singletons.insert(info->key).second) {
      throw SidecarError(SidecarError::Code::duplicate_singleton_key, lineno,
                         std::string(key_text));
    }
    int rank = static_cast<int>(info->key);
    if (rank < last_rank) syntax(lineno, "key '" + std::string(key_text) + "' out of order");
    last_rank = rank;

    switch (info->key) {
      case Key::name:
        r.name = unescape_or_throw(value, lineno);
        has_name = true;
        break;
      case Key::synonym:
        push_unique(r.synonyms, unescape_or_throw(value, lineno), lineno, key_text);
        break;
      case Key::format: {
        auto f = unescape_or_throw(value, lineno);
        if (!is_format_tag(f)) syntax(lineno, "format is not a lowercase token");
        push_unique(r.formats, f, lineno, key_text);
        break;
      }
      case Key::date: {
        auto ts = Timestamp::parse_canonical(value);
        if (!ts) syntax(lineno, "date is not canonical ISO 8601 UTC");
        r.date = *ts;
        break;
      }
      case Key::type: {
        auto t = parse_doc_type(value);
        if (!t) syntax(lineno, "unknown document type");
        r.doc_type = *t;
        break;
      }
      case Key::summary:
        r.summary = unescape_or_throw(value, lineno);
        break;
      case Key::language:
        push_unique(r.languages, unescape_or_throw(value, lineno), lineno, key_text);
        break;
      case Key::location:
        push_unique(r.locations, unescape_or_throw(value, lineno), lineno, key_text);
        break;
      case Key::creator:
        push_unique(r.creators, unescape_or_throw(value, lineno), lineno, key_text);
        break;
      case Key::identifier: {
        auto bar = split_unescaped(value);
        if (bar.size() != 2) syntax(lineno, "identifier must be SYSTEM|id");
        std::string_view system = bar[0];
        if (!is_system_token(system)) syntax(lineno, "identifier system is not a token");
        auto id = unescape_or_throw(bar[1], lineno);
        push_unique(r.identifiers, IdentifierBinding{std::string(system), id}, lineno, key_text);
        break;
      }
      case Key::access: {
        if (value.size() != 1 || value[0] < '0' || value[0] > '3') {
          syntax(lineno, "access must be 0..3");
        }
        r.access = static_cast<AccessLevel>(value[0] - '0');
        break;
      }
      case Key::subject: {
        auto parts = split_unescaped(value);
        Subject s;
        if (parts.size() == 1) {
          s.text = unescape_or_throw(value, lineno);
        } else if (parts.size() == 2) {
          s.source = unescape_or_throw(parts[0], lineno);
          s.text = unescape_or_throw(parts[1], lineno);
        } else {
          syntax(lineno, "subject must be text or source|text");
        }
        push_unique(r.subjects, std::move(s), lineno, key_text);
        break;
      }
      case Key::tag:
        push_unique(r.tags, unescape_or_throw(value, lineno), lineno, key_text);
        break;
      case Key::history: {
        auto e = parse_history(value, lineno);
        if (e.seq != r.history.size()) {
          throw SidecarError(SidecarError::Code::invariant_violation, lineno,
                             "history sequence numbers are not consecutive");
        }
        // History lines are machine-written; a line that would not re-serialize to the same
        // bytes has been edited by hand.
        if (history_line(e) != line) syntax(lineno, "history line is not in canonical form");
        r.history.push_back(std::move(e));
        break;
      }
      case Key::head:
        if (!is_short_digest(value)) syntax(lineno, "bad head digest");
        r.head = std::string(value);
        break;
    }
  }
  if (!has_name) syntax(lines.size(), "missing 'name' line");
  return parsed;
}

}  // namespace ums
