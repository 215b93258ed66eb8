#pragma once

#include "ums/error.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ums {

enum class NameKind { person, organization, document, other };

/// Strict scope requires who/when/where for persons and organizations and a family name for
/// persons. Lenient scope only requires the who part.
enum class NameScope { strict, lenient };

class NameError : public Error {
 public:
  enum class Code { missing_component, invalid_timestamp, invalid_qualifier, syntax };

  NameError(Code code, std::string detail);
  Code code() const { return code_; }

 private:
  Code code_;
};

/// Raw inputs for a systematic designation: who or what, when, where.
struct NameComponents {
  std::vector<std::string> who;
  std::optional<std::string> when;
  std::optional<std::string> where;
  std::optional<std::string> qualifier;
};

/// A who/what + when + where designation with a canonical string
/// `kind:who|when|where[|qualifier]`.
///
/// `who` is stored as whitespace-free tokens joined by single spaces; `when` is a canonical
/// timestamp; `|` and `\` inside parts are escaped.
class SystematicName {
 public:
  NameKind kind() const { return kind_; }
  const std::vector<std::string>& who() const { return who_; }
  /// Who tokens joined by a single space.
  std::string who_text() const;
  const std::string& when() const { return when_; }
  const std::string& where() const { return where_; }
  const std::string& qualifier() const { return qualifier_; }

  const std::string& canonical() const { return canonical_; }

  /// Inverse of canonical(). Throws NameError(syntax) on malformed input.
  static SystematicName parse(std::string_view canonical);

  bool operator==(const SystematicName& other) const { return canonical_ == other.canonical_; }

 private:
  friend SystematicName make_systematic_name(NameKind, const NameComponents&, NameScope);
  void build_canonical();

  NameKind kind_ = NameKind::other;
  std::vector<std::string> who_;
  std::string when_;
  std::string where_;
  std::string qualifier_;
  std::string canonical_;
};

SystematicName make_systematic_name(NameKind kind, const NameComponents& components,
                                    NameScope scope = NameScope::strict);

std::string_view to_string(NameKind kind);
std::optional<NameKind> parse_name_kind(std::string_view text);

}  // namespace ums
