#pragma once

#include "ums/error.hpp"
#include "ums/systematic_name.hpp"

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ums {

class CatalogError : public Error {
 public:
  enum class Code { syntax, duplicate_entry, unknown_system, io };

  CatalogError(Code code, std::size_t line, std::string detail);
  Code code() const { return code_; }
  std::size_t line() const { return line_; }

 private:
  Code code_;
  std::size_t line_;
};

struct CatalogEntry {
  SystematicName name;
  std::vector<std::string> synonyms;

  bool operator==(const CatalogEntry&) const = default;
};

/// Immutable snapshot of admissible values. register_entry returns a grown copy.
class Catalog {
 public:
  explicit Catalog(std::string name);

  const std::string& name() const { return name_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<CatalogEntry>& entries() const { return entries_; }

  /// Throws CatalogError(duplicate_entry) when the canonical string is already used, or when a
  /// synonym of the new entry collides with an existing canonical string (or vice versa).
  [[nodiscard]] Catalog register_entry(CatalogEntry entry) const;

 private:
  std::string name_;
  std::vector<CatalogEntry> entries_;
};

/// `authors`, `organizations`, `systems`, or `subjects:<source>`.
bool is_catalog_name(std::string_view name);

struct Resolution {
  enum class Kind { exact, candidates, none };

  Kind kind = Kind::none;
  /// One entry for exact; candidates ordered by canonical string.
  std::vector<CatalogEntry> entries;
};

/// Exact match on a canonical string or synonym wins. Otherwise every entry whose who part
/// contains all query tokens is a candidate.
Resolution resolve(const Catalog& catalog, std::string_view query);

/// Catalog file: `metabase-catalog: 1`, `catalog: <name>`, then `entry: <canonical>` lines each
/// optionally followed by two-space-indented `  synonym: <text>` lines.
Catalog load_catalog(std::istream& in);
Catalog parse_catalog(std::string_view text);
std::string serialize_catalog(const Catalog& catalog);

/// Classification systems known out of the box: DOI, ISBN, PMID, URN, PURL, ISNI, OCLC.
Catalog builtin_systems_catalog();

/// The set of named catalogs used for validation.
class Metabase {
 public:
  /// Holds the built-in systems catalog only.
  Metabase();

  /// Loads every `*.catalog` file of a directory, in path order, on top of the built-ins.
  static Metabase load_directory(const std::filesystem::path& dir);

  /// Adds a catalog, merging entry by entry when one of the same name exists.
  [[nodiscard]] Metabase with_catalog(const Catalog& catalog) const;

  const Catalog* find(std::string_view name) const;
  const std::map<std::string, Catalog, std::less<>>& catalogs() const { return catalogs_; }

  bool has_system(std::string_view token) const;
  /// True when the name resolves exactly in the authors or organizations catalog, or equals the
  /// who part of one of their entries.
  bool knows_agent(std::string_view name) const;
  bool has_subject_source(std::string_view source) const;

 private:
  std::map<std::string, Catalog, std::less<>> catalogs_;
};

}  // namespace ums
