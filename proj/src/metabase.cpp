#include "ums/metabase.hpp"

#include "ums/text.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

namespace ums {

namespace {

std::string_view code_name(CatalogError::Code code) {
  switch (code) {
    case CatalogError::Code::syntax: return "SyntaxError";
    case CatalogError::Code::duplicate_entry: return "DuplicateEntry";
    case CatalogError::Code::unknown_system: return "UnknownSystem";
    case CatalogError::Code::io: return "IoError";
  }
  return "CatalogError";
}

[[noreturn]] void syntax(std::size_t line, std::string detail) {
  throw CatalogError(CatalogError::Code::syntax, line, std::move(detail));
}

std::vector<std::string> tokens_of(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

}  // namespace

CatalogError::CatalogError(Code code, std::size_t line, std::string detail)
    : Error(std::string(code_name(code)) + (line ? " at line " + std::to_string(line) : "") +
            ": " + detail),
      code_(code),
      line_(line) {}

Catalog::Catalog(std::string name) : name_(std::move(name)) {}

Catalog Catalog::register_entry(CatalogEntry entry) const {
  for (auto& s : entry.synonyms) s = nfc(s);
  const std::string& canonical = entry.name.canonical();
  for (const auto& existing : entries_) {
    if (existing.name.canonical() == canonical) {
      throw CatalogError(CatalogError::Code::duplicate_entry, 0, canonical);
    }
    for (const auto& s : existing.synonyms) {
      if (s == canonical) {
        throw CatalogError(CatalogError::Code::duplicate_entry, 0,
                           canonical + " is a synonym of " + existing.name.canonical());
      }
    }
    for (const auto& s : entry.synonyms) {
      if (s == existing.name.canonical()) {
        throw CatalogError(CatalogError::Code::duplicate_entry, 0,
                           "synonym '" + s + "' collides with an entry");
      }
    }
  }
  Catalog next = *this;
  next.entries_.push_back(std::move(entry));
  return next;
}

bool is_catalog_name(std::string_view name) {
  if (name == "authors" || name == "organizations" || name == "systems") return true;
  constexpr std::string_view prefix = "subjects:";
  return name.size() > prefix.size() && name.substr(0, prefix.size()) == prefix &&
         name.find_first_of(" \t|") == std::string_view::npos;
}

Resolution resolve(const Catalog& catalog, std::string_view query) {
  const std::string q = nfc(trim(query));
  Resolution result;
  auto by_canonical = [](const CatalogEntry& a, const CatalogEntry& b) {
    return a.name.canonical() < b.name.canonical();
  };

  for (const auto& e : catalog.entries()) {
    bool hit = e.name.canonical() == q ||
               std::find(e.synonyms.begin(), e.synonyms.end(), q) != e.synonyms.end();
    if (hit) result.entries.push_back(e);
  }
  if (result.entries.size() == 1) {
    result.kind = Resolution::Kind::exact;
    return result;
  }
  if (result.entries.empty()) {
    auto wanted = tokens_of(q);
    if (!wanted.empty()) {
      for (const auto& e : catalog.entries()) {
        const auto& who = e.name.who();
        bool all = std::all_of(wanted.begin(), wanted.end(), [&](const std::string& t) {
          return std::find(who.begin(), who.end(), t) != who.end();
        });
        if (all) result.entries.push_back(e);
      }
    }
  }
  std::sort(result.entries.begin(), result.entries.end(), by_canonical);
  result.kind = result.entries.empty() ? Resolution::Kind::none : Resolution::Kind::candidates;
  return result;
}

Catalog parse_catalog(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (lines.empty() || lines[0] != "metabase-catalog: 1") {
    syntax(1, "expected 'metabase-catalog: 1' header");
  }
  constexpr std::string_view catalog_prefix = "catalog: ";
  if (lines.size() < 2 || lines[1].substr(0, catalog_prefix.size()) != catalog_prefix) {
    syntax(2, "expected 'catalog: <name>'");
  }
  std::string name(lines[1].substr(catalog_prefix.size()));
  if (!is_catalog_name(name)) syntax(2, "invalid catalog name '" + name + "'");

  Catalog catalog(name);
  std::optional<CatalogEntry> pending;
  std::size_t pending_line = 0;
  auto flush = [&] {
    if (!pending) return;
    try {
      catalog = catalog.register_entry(std::move(*pending));
    } catch (const CatalogError& e) {
      throw CatalogError(CatalogError::Code::duplicate_entry, pending_line, e.what());
    }
    pending.reset();
  };

  constexpr std::string_view entry_prefix = "entry: ";
  constexpr std::string_view synonym_prefix = "  synonym: ";
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    std::string_view line = lines[i];
    if (trim(line).empty()) continue;
    if (!is_valid_utf8(line)) syntax(lineno, "invalid UTF-8");
    if (line.substr(0, entry_prefix.size()) == entry_prefix) {
      flush();
      try {
        pending = CatalogEntry{SystematicName::parse(nfc(line.substr(entry_prefix.size()))), {}};
      } catch (const NameError& e) {
        syntax(lineno, e.what());
      }
      pending_line = lineno;
    } else if (line.substr(0, synonym_prefix.size()) == synonym_prefix) {
      if (!pending) syntax(lineno, "synonym without entry");
      std::string synonym;
      if (!unescape_value(line.substr(synonym_prefix.size()), synonym) || synonym.empty()) {
        syntax(lineno, "bad synonym value");
      }
      pending->synonyms.push_back(nfc(synonym));
    } else {
      syntax(lineno, "expected 'entry:' or '  synonym:' line");
    }
  }
  flush();
  return catalog;
}

Catalog load_catalog(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_catalog(text);
}

std::string serialize_catalog(const Catalog& catalog) {
  std::string out = "metabase-catalog: 1\ncatalog: " + catalog.name() + "\n";
  for (const auto& e : catalog.entries()) {
    out += "entry: " + e.name.canonical() + "\n";
    for (const auto& s : e.synonyms) out += "  synonym: " + escape_value(s) + "\n";
  }
  return out;
}

Catalog builtin_systems_catalog() {
  Catalog systems("systems");
  for (const char* token : {"DOI", "ISBN", "PMID", "URN", "PURL", "ISNI", "OCLC"}) {
    systems = systems.register_entry(CatalogEntry{
        make_systematic_name(NameKind::other, NameComponents{{token}, {}, {}, {}},
                             NameScope::lenient),
        {}});
  }
  return systems;
}

Metabase::Metabase() { catalogs_.emplace("systems", builtin_systems_catalog()); }

Metabase Metabase::load_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw CatalogError(CatalogError::Code::io, 0, "not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& item : std::filesystem::directory_iterator(dir)) {
    if (item.is_regular_file() && item.path().extension() == ".catalog") {
      files.push_back(item.path());
    }
  }
  std::sort(files.begin(), files.end());
  Metabase metabase;
  for (const auto& file : files) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw CatalogError(CatalogError::Code::io, 0, "cannot read " + file.string());
    try {
      metabase = metabase.with_catalog(load_catalog(in));
    } catch (const CatalogError& e) {
      throw CatalogError(e.code(), e.line(), file.filename().string() + ": " + e.what());
    }
  }
  return metabase;
}

Metabase Metabase::with_catalog(const Catalog& catalog) const {
  Metabase next = *this;
  auto it = next.catalogs_.find(catalog.name());
  if (it == next.catalogs_.end()) {
    next.catalogs_.emplace(catalog.name(), catalog);
    return next;
  }
  Catalog merged = it->second;
  for (const auto& entry : catalog.entries()) {
    const auto& existing = merged.entries();
    if (std::find(existing.begin(), existing.end(), entry) != existing.end()) continue;
    merged = merged.register_entry(entry);
  }
  it->second = std::move(merged);
  return next;
}

const Catalog* Metabase::find(std::string_view name) const {
  auto it = catalogs_.find(name);
  return it == catalogs_.end() ? nullptr : &it->second;
}

bool Metabase::has_system(std::string_view token) const {
  const Catalog* systems = find("systems");
  if (!systems) return false;
  const std::string wanted = ascii_upper(token);
  for (const auto& e : systems->entries()) {
    if (ascii_upper(e.name.who_text()) == wanted) return true;
    for (const auto& s : e.synonyms) {
      if (ascii_upper(s) == wanted) return true;
    }
  }
  return false;
}

bool Metabase::knows_agent(std::string_view name) const {
  for (const char* catalog : {"authors", "organizations"}) {
    const Catalog* c = find(catalog);
    if (!c) continue;
    auto r = resolve(*c, name);
    if (r.kind == Resolution::Kind::exact) return true;
    // A bare display name counts when it is exactly some entry's who part.
    const std::string wanted = nfc(trim(name));
    for (const auto& e : r.entries) {
      if (e.name.who_text() == wanted) return true;
    }
  }
  return false;
}

bool Metabase::has_subject_source(std::string_view source) const {
  return find("subjects:" + std::string(source)) != nullptr;
}

}  // namespace ums
