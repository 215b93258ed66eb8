#include "ums/validation.hpp"

#include "ums/identifiers.hpp"
#include "ums/languages.hpp"

#include <algorithm>

namespace ums {

bool ValidationReport::has_errors() const {
  return std::any_of(violations.begin(), violations.end(),
                     [](const Violation& v) { return v.severity == Severity::error; });
}

bool ValidationReport::contains(std::string_view code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

ValidationReport validate_record(const UmsRecord& r, const Metabase& metabase,
                                 ValidationMode mode) {
  ValidationReport report;
  const Severity gate = mode == ValidationMode::strict ? Severity::error : Severity::warning;
  auto add = [&](std::string code, Severity sev, std::string field, std::string value,
                 std::string message) {
    report.violations.push_back(
        Violation{std::move(code), sev, std::move(field), std::move(value), std::move(message)});
  };

  if (r.name.empty()) add("MissingRequiredField", gate, "name", "", "name is required");
  if (r.formats.empty()) add("MissingRequiredField", gate, "format", "", "format is required");
  if (!r.date) add("MissingRequiredField", gate, "date", "", "date is required");

  if (r.languages.empty()) {
    add("MissingRecommendedField", Severity::warning, "language", "", "no language given");
  }
  if (r.locations.empty()) {
    add("MissingRecommendedField", Severity::warning, "location", "", "no location given");
  }
  if (r.creators.empty()) {
    add("MissingRecommendedField", Severity::warning, "creator", "", "no creator given");
  }

  for (const auto& lang : r.languages) {
    if (is_programming_language(lang)) {
      add("InvalidLanguage", gate, "language", lang,
          "'" + lang + "' is a programming language, not a natural language");
    } else if (!is_language_code(lang)) {
      add("InvalidLanguage", gate, "language", lang, "'" + lang + "' is not an ISO 639 code");
    }
  }

  for (const auto& creator : r.creators) {
    if (!metabase.knows_agent(creator)) {
      add("CreatorNotInCatalog", gate, "creator", creator,
          "'" + creator + "' is not in the authors or organizations catalog");
    }
  }

  for (const auto& binding : r.identifiers) {
    if (!metabase.has_system(binding.system)) {
      add("UnregisteredSystem", Severity::error, "identifier", binding.str(),
          "classification system '" + binding.system + "' is not registered");
      continue;
    }
    auto check = check_identifier(binding.system, binding.id);
    if (!check) {
      add("InvalidIdentifier", gate, "identifier", binding.str(),
          binding.system + " '" + binding.id + "' is invalid: " +
              std::string(to_string(check.defect)));
    }
  }

  for (const auto& subject : r.subjects) {
    if (!subject.source.empty() && !metabase.has_subject_source(subject.source)) {
      add("UnknownSubjectSource", gate, "subject", subject.source + "|" + subject.text,
          "no catalog 'subjects:" + subject.source + "'");
    }
  }
  return report;
}

}  // namespace ums
