#include "ums/systematic_name.hpp"

#include "ums/text.hpp"
#include "ums/timestamp.hpp"

namespace ums {

namespace {

std::string_view code_name(NameError::Code code) {
  switch (code) {
    case NameError::Code::missing_component: return "MissingComponent";
    case NameError::Code::invalid_timestamp: return "InvalidTimestamp";
    case NameError::Code::invalid_qualifier: return "InvalidQualifier";
    case NameError::Code::syntax: return "SyntaxError";
  }
  return "NameError";
}

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; };
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  for (const auto& token : split_whitespace(text)) {
    if (!out.empty()) out += ' ';
    out += token;
  }
  return out;
}

[[noreturn]] void fail(NameError::Code code, std::string detail) {
  throw NameError(code, std::move(detail));
}

}  // namespace

NameError::NameError(Code code, std::string detail)
    : Error(std::string(code_name(code)) + ": " + detail), code_(code) {}

std::string_view to_string(NameKind kind) {
  switch (kind) {
    case NameKind::person: return "person";
    case NameKind::organization: return "organization";
    case NameKind::document: return "document";
    case NameKind::other: return "other";
  }
  return "other";
}

std::optional<NameKind> parse_name_kind(std::string_view text) {
  for (auto k : {NameKind::person, NameKind::organization, NameKind::document, NameKind::other}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

std::string SystematicName::who_text() const {
  std::string out;
  for (const auto& w : who_) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

void SystematicName::build_canonical() {
  canonical_ = std::string(to_string(kind_));
  canonical_ += ':';
  canonical_ += escape_value(who_text());
  canonical_ += '|';
  canonical_ += when_;
  canonical_ += '|';
  canonical_ += escape_value(where_);
  if (!qualifier_.empty()) {
    canonical_ += '|';
    canonical_ += qualifier_;
  }
}

SystematicName make_systematic_name(NameKind kind, const NameComponents& components,
                                    NameScope scope) {
  SystematicName name;
  name.kind_ = kind;
  for (const auto& part : components.who) {
    for (auto& token : split_whitespace(nfc(part))) name.who_.push_back(std::move(token));
  }
  if (name.who_.empty()) fail(NameError::Code::missing_component, "who part is empty");

  if (components.when && !trim(*components.when).empty()) {
    auto ts = Timestamp::parse(trim(*components.when));
    if (!ts) fail(NameError::Code::invalid_timestamp, "cannot read '" + *components.when + "'");
    name.when_ = ts->str();
  }
  if (components.where) name.where_ = collapse_whitespace(nfc(*components.where));
  if (components.qualifier && !components.qualifier->empty()) {
    if (!all_digits(*components.qualifier)) {
      fail(NameError::Code::invalid_qualifier, "qualifier must be a digit sequence");
    }
    name.qualifier_ = *components.qualifier;
  }

  if (scope == NameScope::strict &&
      (kind == NameKind::person || kind == NameKind::organization)) {
    if (kind == NameKind::person && name.who_.size() < 2) {
      fail(NameError::Code::missing_component, "person needs given and family name");
    }
    if (name.when_.empty()) fail(NameError::Code::missing_component, "when part is missing");
    if (name.where_.empty()) fail(NameError::Code::missing_component, "where part is missing");
  }
  name.build_canonical();
  return name;
}

SystematicName SystematicName::parse(std::string_view canonical) {
  auto colon = canonical.find(':');
  if (colon == std::string_view::npos) fail(NameError::Code::syntax, "missing kind prefix");
  auto kind = parse_name_kind(canonical.substr(0, colon));
  if (!kind) fail(NameError::Code::syntax, "unknown kind");
  auto parts = split_unescaped(canonical.substr(colon + 1));
  if (parts.size() != 3 && parts.size() != 4) {
    fail(NameError::Code::syntax, "expected who|when|where[|qualifier]");
  }
  NameComponents c;
  std::string who;
  if (!unescape_value(parts[0], who)) fail(NameError::Code::syntax, "bad escape in who");
  c.who.push_back(who);
  if (!parts[1].empty()) c.when = std::string(parts[1]);
  std::string where;
  if (!unescape_value(parts[2], where)) fail(NameError::Code::syntax, "bad escape in where");
  if (!where.empty()) c.where = where;
  if (parts.size() == 4) {
    if (parts[3].empty()) fail(NameError::Code::syntax, "empty qualifier");
    c.qualifier = std::string(parts[3]);
  }
  SystematicName name = make_systematic_name(*kind, c, NameScope::lenient);
  if (name.canonical() != canonical) {
    fail(NameError::Code::syntax, "not in canonical form: " + std::string(canonical));
  }
  return name;
}

}  // namespace ums
