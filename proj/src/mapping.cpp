#include "ums/mapping.hpp"

#include "ums/languages.hpp"
#include "ums/text.hpp"

#include <array>
#include <map>

namespace ums {

namespace {

constexpr std::array<std::pair<UmsField, std::string_view>, 13> kFieldNames{{
    {UmsField::name, "name"},
    {UmsField::synonym, "synonym"},
    {UmsField::format, "format"},
    {UmsField::date, "date"},
    {UmsField::type, "type"},
    {UmsField::summary, "summary"},
    {UmsField::language, "language"},
    {UmsField::location, "location"},
    {UmsField::creator, "creator"},
    {UmsField::identifier, "identifier"},
    {UmsField::access, "access"},
    {UmsField::subject, "subject"},
    {UmsField::tag, "tag"},
}};

[[noreturn]] void syntax(std::size_t line, std::string detail) {
  throw MappingError(MappingError::Code::syntax, line, std::move(detail));
}

bool key_matches(std::string_view pattern, std::string_view key) {
  if (!pattern.empty() && pattern.back() == '*') {
    pattern.remove_suffix(1);
    return key.size() >= pattern.size() && iequals(key.substr(0, pattern.size()), pattern);
  }
  return iequals(pattern, key);
}

bool has_key(const RawMetadata& raw, std::string_view key) {
  for (const auto& p : raw.pairs) {
    if (key_matches(key, p.key)) return true;
  }
  return false;
}

bool is_version_number(std::string_view v) {
  if (v.empty() || v.front() == '.' || v.back() == '.') return false;
  for (char c : v) {
    if (!(c == '.' || (c >= '0' && c <= '9'))) return false;
  }
  return true;
}

std::optional<std::string> format_token(std::string_view value, Carrier carrier) {
  if (is_version_number(value)) return std::string(to_string(carrier));
  std::string token;
  if (auto slash = value.find('/'); slash != std::string_view::npos) {
    token = ascii_lower(trim(value.substr(slash + 1)));
    if (auto semi = token.find(';'); semi != std::string::npos) token = std::string(trim(token.substr(0, semi)));
    if (token.rfind("x-", 0) == 0) token.erase(0, 2);
  } else {
    auto end = value.find_first_of(" \t,;");
    token = ascii_lower(value.substr(0, end));
  }
  if (!is_format_tag(token)) return std::nullopt;
  return token;
}

std::optional<AccessLevel> parse_access(std::string_view v) {
  constexpr std::array<std::string_view, 4> names{"open", "internal", "restricted", "secret"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (iequals(v, names[i]) || v == std::to_string(i)) return static_cast<AccessLevel>(i);
  }
  return std::nullopt;
}


class Builder {
 public:
  Builder(const RawMetadata& raw, MappingResult& out) : raw_(raw), out_(out) {}

  // Returns false when the value does not fit the rule's field.
  bool apply(const MappingRule& rule, std::string_view raw_value) {
    std::string_view trimmed = trim(raw_value);
    if (trimmed.empty() || !is_valid_utf8(trimmed)) return false;
    std::string v = nfc(trimmed);
    UmsRecord& r = out_.record;
    switch (rule.field) {
      case UmsField::name:
        return singleton(rule, r.name.empty() ? nullptr : &r.name, v, [&] { r.name = v; });
      case UmsField::summary: {
        std::string* cur = r.summary ? &*r.summary : nullptr;
        return singleton(rule, cur, v, [&] { r.summary = v; });
      }
      case UmsField::date: {
        auto ts = Timestamp::parse(v);
        if (!ts) return false;
        std::string current = r.date ? r.date->str() : std::string();
        return singleton(rule, r.date ? &current : nullptr, ts->str(), [&] { r.date = ts; });
      }
      case UmsField::type: {
        auto t = parse_doc_type(ascii_lower(v));
        if (!t) return false;
        std::string current = r.doc_type ? std::string(to_string(*r.doc_type)) : std::string();
        return singleton(rule, r.doc_type ? &current : nullptr, std::string(to_string(*t)),
                         [&] { r.doc_type = t; });
      }
      case UmsField::access: {
        auto a = parse_access(v);
        if (!a) return false;
        std::string current = r.access ? std::to_string(static_cast<int>(*r.access)) : std::string();
        return singleton(rule, r.access ? &current : nullptr, std::to_string(static_cast<int>(*a)),
                         [&] { r.access = a; });
      }
      case UmsField::format: {
        auto token = format_token(v, raw_.carrier);
        if (!token) return false;
        append_unique(r.formats, *token);
        return true;
      }
      case UmsField::language: {
        std::string code = ascii_lower(v);
        if (!is_language_code(code) || is_programming_language(code)) return false;
        append_unique(r.languages, code);
        return true;
      }
      case UmsField::identifier:
        if (v.find('|') != std::string::npos) return false;
        append_unique(r.identifiers, IdentifierBinding{rule.system, v});
        return true;
      case UmsField::subject:
        append_unique(r.subjects, Subject{v, ""});
        return true;
      case UmsField::synonym:
        append_unique(r.synonyms, v);
        return true;
      case UmsField::location:
        append_unique(r.locations, v);
        return true;
      case UmsField::creator:
        append_unique(r.creators, v);
        return true;
      case UmsField::tag:
        append_unique(r.tags, v);
        return true;
    }
    return false;
  }

 private:
  template <typename Set>
  bool singleton(const MappingRule& rule, const std::string* current, const std::string& value,
                 Set set) {
    auto field = rule.field;
    if (!current) {
      set();
      owner_[field] = &rule;
      return true;
    }
    if (*current == value) return true;
    const MappingRule* first = owner_[field];
    if (first && !(*first == rule)) {
      throw MappingError(MappingError::Code::rule_conflict, rule.line,
                         "rules '" + first->str() + "' and '" + rule.str() + "' give " +
                             std::string(to_string(field)) + " different values");
    }
    // Same rule matched again with another value: the first one stands.
    return false;
  }

  const RawMetadata& raw_;
  MappingResult& out_;
  std::map<UmsField, const MappingRule*> owner_;
};

}  // namespace

std::string_view to_string(UmsField field) {
  for (const auto& [f, name] : kFieldNames) {
    if (f == field) return name;
  }
  return "name";
}

std::optional<UmsField> parse_ums_field(std::string_view text) {
  for (const auto& [f, name] : kFieldNames) {
    if (name == text) return f;
  }
  return std::nullopt;
}

bool is_singleton(UmsField field) {
  return field == UmsField::name || field == UmsField::date || field == UmsField::type ||
         field == UmsField::summary || field == UmsField::access;
}

std::string MappingRule::str() const {
  std::string s = std::string(to_string(carrier)) + "." + key + " -> " + std::string(to_string(field));
  if (field == UmsField::identifier) s += ":" + system;
  if (!unless.empty()) s += " unless " + unless;
  return s;
}

bool MappingTable::covers(Carrier carrier) const {
  for (const auto& r : rules) {
    if (r.carrier == carrier) return true;
  }
  return false;
}

MappingError::MappingError(Code code, std::size_t line, std::string detail)
    : Error(std::string(to_string(code)) + (line ? " (line " + std::to_string(line) + ")" : "") +
            ": " + detail),
      code_(code),
      line_(line) {}

std::string_view to_string(MappingError::Code code) {
  switch (code) {
    case MappingError::Code::syntax: return "SyntaxError";
    case MappingError::Code::rule_conflict: return "RuleConflict";
    case MappingError::Code::uncovered_carrier: return "UncoveredCarrier";
  }
  return "MappingError";
}

MappingTable parse_mapping_table(std::string_view text) {
  MappingTable table;
  std::size_t lineno = 0;
  std::size_t start = 0;
  bool header = false;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(start, nl - start));
    start = nl + 1;
    ++lineno;
    if (!header) {
      if (line != kMappingHeader) syntax(lineno, "expected 'ums-mapping: 1' header");
      header = true;
      continue;
    }
    if (line.empty() || line.front() == '#') continue;

    auto arrow = line.find("->");
    if (arrow == std::string_view::npos) syntax(lineno, "expected 'carrier.Key -> field'");
    std::string_view lhs = trim(line.substr(0, arrow));
    std::string_view rhs = trim(line.substr(arrow + 2));

    MappingRule rule;
    rule.line = lineno;
    auto dot = lhs.find('.');
    if (dot == std::string_view::npos) syntax(lineno, "expected 'carrier.Key'");
    auto carrier = parse_carrier(lhs.substr(0, dot));
    if (!carrier) syntax(lineno, "unknown carrier '" + std::string(lhs.substr(0, dot)) + "'");
    rule.carrier = *carrier;
    rule.key = std::string(lhs.substr(dot + 1));
    if (rule.key.empty() || rule.key.find('*') < rule.key.size() - 1) {
      syntax(lineno, "bad raw key pattern");
    }

    if (auto u = rhs.find(" unless "); u != std::string_view::npos) {
      rule.unless = std::string(trim(rhs.substr(u + 8)));
      rhs = trim(rhs.substr(0, u));
      if (rule.unless.empty()) syntax(lineno, "'unless' needs a key");
    }
    std::string_view field_text = rhs;
    if (auto colon = rhs.find(':'); colon != std::string_view::npos) {
      field_text = rhs.substr(0, colon);
      rule.system = std::string(rhs.substr(colon + 1));
    }
    auto field = parse_ums_field(field_text);
    if (!field) syntax(lineno, "unknown field '" + std::string(field_text) + "'");
    rule.field = *field;
    if (rule.field == UmsField::identifier) {
      if (!is_system_token(rule.system)) syntax(lineno, "identifier rules need ':SYSTEM'");
    } else if (!rule.system.empty()) {
      syntax(lineno, "only identifier rules take ':SYSTEM'");
    }
    table.rules.push_back(std::move(rule));
  }
  if (!header) syntax(1, "expected 'ums-mapping: 1' header");
  return table;
}

std::string serialize_mapping_table(const MappingTable& table) {
  std::string out(kMappingHeader);
  out += '\n';
  for (const auto& r : table.rules) out += r.str() + "\n";
  return out;
}

const MappingTable& default_mapping_table() {
  static const MappingTable table = parse_mapping_table(
      "ums-mapping: 1\n"
      "pdf.Title -> name\n"
      "pdf.Author -> creator\n"
      "pdf.Creator -> creator unless Author\n"
      "pdf.FileType -> format\n"
      "pdf.MIMEType -> format\n"
      "pdf.PDFVersion -> format\n"
      "pdf.CreateDate -> date\n"
      "html.Title -> name\n"
      "html.author -> creator\n"
      "html.description -> summary\n"
      "html.ncbi_uidlist -> identifier:PMID\n");
  return table;
}

MappingResult map_raw_to_ums(const RawMetadata& raw, const MappingTable& rules,
                             const std::optional<std::string>& source_location) {
  MappingResult out;
  if (!raw.pairs.empty() && !rules.covers(raw.carrier)) {
    throw MappingError(MappingError::Code::uncovered_carrier, 0,
                       "no rules for carrier " + std::string(to_string(raw.carrier)));
  }
  Builder builder(raw, out);
  for (const auto& pair : raw.pairs) {
    const MappingRule* used = nullptr;
    for (const auto& rule : rules.rules) {
      if (rule.carrier != raw.carrier || !key_matches(rule.key, pair.key)) continue;
      if (!rule.unless.empty() && has_key(raw, rule.unless)) continue;
      used = &rule;
      break;
    }
    if (used && builder.apply(*used, pair.value)) {
      out.mapped.push_back(MappedPair{pair, used->str()});
    } else {
      out.unmapped.push_back(pair);
    }
  }
  if (source_location && !trim(*source_location).empty() && is_valid_utf8(*source_location)) {
    append_unique(out.record.locations, nfc(trim(*source_location)));
  }
  if (out.record.formats.empty() && !raw.pairs.empty() && raw.carrier != Carrier::sidecar) {
    out.record.formats.push_back(std::string(to_string(raw.carrier)));
  }
  return out;
}

}  // namespace ums
