#pragma once

#include <optional>
#include <string_view>

namespace ums {

enum class Severity { error, warning, info };

constexpr std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::error: return "error";
    case Severity::warning: return "warning";
    case Severity::info: return "info";
  }
  return "info";
}

/// error and warning count as actionable; info does not.
constexpr bool at_least_warning(Severity s) { return s != Severity::info; }

}  // namespace ums
