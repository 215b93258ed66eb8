#include "ums/lint.hpp"

#include "ums/identifiers.hpp"
#include "ums/metabase.hpp"
#include "ums/text.hpp"
#include "ums/timestamp.hpp"

#include "json.hpp"

namespace ums {

namespace {

// "PDFVersion (1)" -> "PDFVersion"
std::string_view base_key(std::string_view key) {
  if (key.size() > 4 && key.back() == ')') {
    auto open = key.rfind(" (");
    if (open != std::string_view::npos &&
        all_digits(key.substr(open + 2, key.size() - open - 3))) {
      return key.substr(0, open);
    }
  }
  return key;
}

const RawPair* first_pair(const RawMetadata& raw, std::string_view key) {
  for (const auto& p : raw.pairs) {
    if (p.key == key) return &p;
  }
  return nullptr;
}

void format_redundancy(const RawMetadata& raw, std::vector<LintFinding>& out) {
  const std::string token(to_string(raw.carrier));
  const std::string version_key = ascii_upper(token) + "Version";
  LintFinding f{"FORMAT_REDUNDANCY", Severity::warning, {}, {}};
  for (const auto& p : raw.pairs) {
    bool counted = p.key.find("FileType") != std::string::npos ||
                   p.key.find("MIMEType") != std::string::npos ||
                   p.key.find(version_key) != std::string::npos || icontains(p.value, token);
    if (counted) f.evidence.push_back(p);
  }
  if (f.evidence.size() > 1) {
    f.message = "format '" + token + "' is stated " + std::to_string(f.evidence.size()) + " times";
    out.push_back(std::move(f));
  }
}

void author_ambiguous(const RawMetadata& raw, std::vector<LintFinding>& out) {
  const RawPair* author = first_pair(raw, "Author");
  const RawPair* creator = first_pair(raw, "Creator");
  if (!author || !creator || trim(author->value) == trim(creator->value)) return;
  out.push_back(LintFinding{"AUTHOR_AMBIGUOUS", Severity::warning,
                            "Author '" + author->value + "' and Creator '" + creator->value +
                                "' disagree",
                            {*author, *creator}});
}

void timestamp_coincident(const RawMetadata& raw, std::vector<LintFinding>& out) {
  const RawPair* created = first_pair(raw, "CreateDate");
  const RawPair* modified = first_pair(raw, "ModifyDate");
  if (!created || !modified) return;
  auto a = Timestamp::parse(created->value);
  auto b = Timestamp::parse(modified->value);
  bool same = (a && b) ? a->time_point() == b->time_point() : created->value == modified->value;
  if (!same) return;
  out.push_back(LintFinding{"TIMESTAMP_COINCIDENT", Severity::warning,
                            "creation and modification time are both " + created->value,
                            {*created, *modified}});
}

void identifier_invalid(const RawMetadata& raw, const Metabase& metabase,
                        std::vector<LintFinding>& out) {
  for (const auto& p : raw.pairs) {
    std::string system = ascii_upper(base_key(p.key));
    if (!is_system_token(system) || !metabase.has_system(system)) continue;
    auto check = check_identifier(system, trim(p.value));
    if (check) continue;
    out.push_back(LintFinding{"IDENTIFIER_INVALID", Severity::error,
                              "'" + p.value + "' is not a valid " + system + " (" +
                                  std::string(to_string(check.defect)) + ")",
                              {p}});
  }
}

void placeholder_value(const RawMetadata& raw, const LintConfig& config,
                       std::vector<LintFinding>& out) {
  for (const auto& p : raw.pairs) {
    for (const auto& ph : config.placeholders) {
      if (iequals(trim(p.value), trim(ph))) {
        out.push_back(LintFinding{"PLACEHOLDER_VALUE", Severity::warning,
                                  p.key + " holds the placeholder '" + p.value + "'", {p}});
        break;
      }
    }
  }
}

bool holds_system(const UmsRecord& r, std::string_view system) {
  for (const auto& id : r.identifiers) {
    if (iequals(id.system, system)) return true;
  }
  return false;
}

}  // namespace

std::vector<LintFinding> lint_raw(const RawMetadata& raw, const Metabase& metabase,
                                  const LintConfig& config) {
  std::vector<LintFinding> out;
  format_redundancy(raw, out);
  author_ambiguous(raw, out);
  timestamp_coincident(raw, out);
  identifier_invalid(raw, metabase, out);
  placeholder_value(raw, config, out);
  return out;
}

std::vector<LintFinding> lint_record(const UmsRecord& r, const Metabase& metabase,
                                     const LintConfig& config) {
  std::vector<LintFinding> out;
  auto missing = [&](bool empty, std::string_view field) {
    if (!empty) return;
    out.push_back(LintFinding{"MISSING_RECOMMENDED", Severity::warning,
                              "no " + std::string(field) + " recorded", {}});
  };
  missing(r.languages.empty(), "language");
  missing(r.locations.empty(), "location");
  missing(r.creators.empty(), "creator");

  for (const auto& c : r.creators) {
    if (metabase.knows_agent(c)) continue;
    out.push_back(LintFinding{"UNCATALOGED_CREATOR", Severity::warning,
                              "creator '" + c + "' is not in the authors or organizations catalog",
                              {RawPair{"creator", c}}});
  }

  for (const auto& [a, b] : config.related_systems) {
    bool has_a = holds_system(r, a);
    bool has_b = holds_system(r, b);
    if (has_a == has_b) continue;
    const std::string& held = has_a ? a : b;
    const std::string& lacking = has_a ? b : a;
    LintFinding f{"SYSTEM_GAP", Severity::warning,
                  "identified in " + held + " but not in the related system " + lacking, {}};
    for (const auto& id : r.identifiers) {
      if (iequals(id.system, held)) f.evidence.push_back(RawPair{"identifier", id.str()});
    }
    out.push_back(std::move(f));
  }

  if (r.subjects.empty()) {
    out.push_back(LintFinding{"EMPTY_SUBJECTS", Severity::info, "no depicted objects listed", {}});
  }
  return out;
}

bool has_actionable(const std::vector<LintFinding>& findings) {
  for (const auto& f : findings) {
    if (at_least_warning(f.severity)) return true;
  }
  return false;
}

std::string format_findings(const std::vector<LintFinding>& findings) {
  std::string out;
  for (const auto& f : findings) {
    out += f.code;
    out += '\t';
    out += to_string(f.severity);
    out += '\t';
    for (char c : f.message) out += (c == '\n' || c == '\t' || c == '\r') ? ' ' : c;
    out += '\n';
  }
  return out;
}

std::string findings_to_json(const std::vector<LintFinding>& findings) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& f : findings) {
    nlohmann::ordered_json evidence = nlohmann::ordered_json::array();
    for (const auto& p : f.evidence) evidence.push_back({{"key", p.key}, {"value", p.value}});
    arr.push_back({{"code", f.code},
                   {"severity", std::string(to_string(f.severity))},
                   {"message", f.message},
                   {"evidence", evidence}});
  }
  return arr.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

}  // namespace ums
