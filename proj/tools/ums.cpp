// ums: inspect, lint and annotate document metadata.
//
// Exit status: 0 clean, 1 findings / violations / broken history, 2 operational error.

#include "CLI11.hpp"

#include "ums/association.hpp"
#include "ums/extract.hpp"
#include "ums/lint.hpp"
#include "ums/mapping.hpp"
#include "ums/metabase.hpp"
#include "ums/provenance.hpp"
#include "ums/sidecar.hpp"
#include "ums/text.hpp"
#include "ums/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <system_error>

namespace fs = std::filesystem;

namespace {

constexpr int kClean = 0;
constexpr int kFindings = 1;
constexpr int kFailure = 2;

// Operational failure: message to stderr, exit 2.
struct Failure {
  std::string message;
};

struct Globals {
  std::string metabase_dir;
  std::string mapping_file;
  bool strict = false;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot read " + path.string()};
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Failure{"cannot read " + path.string()};
  return std::move(buf).str();
}

// Write to a sibling temp file, then rename over the target.
void write_file_atomically(const fs::path& path, std::string_view bytes) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Failure{"cannot write " + tmp.string()};
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw Failure{"cannot write " + tmp.string()};
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Failure{"cannot replace " + path.string()};
  }
}

ums::Metabase load_metabase(const Globals& g) {
  std::string dir = g.metabase_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("UMS_METABASE")) dir = env;
  }
  if (dir.empty()) return ums::Metabase{};
  return ums::Metabase::load_directory(dir);
}

ums::MappingTable load_mapping(const Globals& g) {
  if (g.mapping_file.empty()) return ums::default_mapping_table();
  return ums::parse_mapping_table(read_file(g.mapping_file));
}

ums::Carrier pick_carrier(const std::string& flag, std::string_view bytes, const fs::path& path) {
  if (flag != "auto") {
    auto c = ums::parse_carrier(flag);
    if (!c) throw Failure{"unknown carrier '" + flag + "'"};
    return *c;
  }
  auto c = ums::detect_carrier(bytes, path.filename().string());
  if (!c) throw Failure{"cannot tell the carrier of " + path.string() + "; use --carrier"};
  return *c;
}

ums::UmsRecord read_sidecar(const fs::path& path, const Globals& g, bool strict_parse) {
  auto mode = (strict_parse || g.strict) ? ums::ParseMode::strict : ums::ParseMode::lenient;
  auto parsed = ums::parse_record(read_file(path), mode);
  for (const auto& w : parsed.warnings) std::cerr << path.string() << ": " << w << "\n";
  return std::move(parsed.record);
}

void report_issues(const fs::path& path, const ums::Extraction& ex) {
  for (const auto& issue : ex.issues) {
    std::cerr << path.string() << ": offset " << issue.offset << ": " << issue.message << "\n";
  }
}

int cmd_extract(const Globals& g, const fs::path& path, const std::string& carrier_flag, bool raw,
                const std::string& location) {
  std::string bytes = read_file(path);
  auto carrier = pick_carrier(carrier_flag, bytes, path);
  if (carrier == ums::Carrier::sidecar && !raw) {
    std::cout << ums::canonical_serialize(read_sidecar(path, g, false));
    return kClean;
  }
  auto ex = ums::extract(carrier, bytes);
  report_issues(path, ex);
  if (raw) {
    for (const auto& p : ex.raw.pairs) std::cout << p.key << " = " << p.value << "\n";
    return kClean;
  }
  std::optional<std::string> source;
  if (!location.empty()) source = location;
  auto mapped = ums::map_raw_to_ums(ex.raw, load_mapping(g), source);
  if (mapped.record.name.empty()) mapped.record.name = ums::nfc(path.stem().string());
  std::cout << ums::canonical_serialize(mapped.record);
  return kClean;
}

int cmd_lint(const Globals& g, const fs::path& path, const std::string& carrier_flag, bool json) {
  std::string bytes = read_file(path);
  auto carrier = pick_carrier(carrier_flag, bytes, path);
  auto metabase = load_metabase(g);
  std::vector<ums::LintFinding> findings;
  if (carrier == ums::Carrier::sidecar) {
    findings = ums::lint_record(read_sidecar(path, g, false), metabase);
  } else {
    auto ex = ums::extract(carrier, bytes);
    report_issues(path, ex);
    findings = ums::lint_raw(ex.raw, metabase);
  }
  std::cout << (json ? ums::findings_to_json(findings) : ums::format_findings(findings));
  return ums::has_actionable(findings) ? kFindings : kClean;
}

int cmd_validate(const Globals& g, const fs::path& path) {
  auto record = read_sidecar(path, g, false);
  auto mode = g.strict ? ums::ValidationMode::strict : ums::ValidationMode::lenient;
  auto report = ums::validate_record(record, load_metabase(g), mode);
  for (const auto& v : report.violations) {
    std::cout << v.code << '\t' << ums::to_string(v.severity) << '\t' << v.field << '\t'
              << v.message << "\n";
  }
  return report.has_errors() ? kFindings : kClean;
}

ums::Timestamp now_utc() {
  using namespace std::chrono;
  return ums::Timestamp::from_time_point(floor<seconds>(system_clock::now()));
}

int cmd_annotate(const fs::path& path, const std::string& event, const std::string& payload,
                 const std::string& when) {
  auto kind = ums::parse_event_kind(event);
  if (!kind || *kind == ums::EventKind::create) throw Failure{"unknown event '" + event + "'"};
  ums::Timestamp ts = now_utc();
  if (!when.empty()) {
    auto parsed = ums::Timestamp::parse(when);
    if (!parsed) throw Failure{"bad --timestamp '" + when + "'"};
    ts = *parsed;
  }
  // Annotation rewrites the file, so nothing unknown may be dropped: always parse strictly.
  auto record = ums::parse_record(read_file(path), ums::ParseMode::strict).record;
  auto applied = ums::apply_event(record, *kind, payload, ts);
  for (const auto& w : applied.warnings) std::cerr << path.string() << ": " << w << "\n";
  write_file_atomically(path, ums::canonical_serialize(applied.record));
  return kClean;
}

int cmd_history(const Globals& g, const fs::path& path, bool verify) {
  auto record = read_sidecar(path, g, true);
  if (verify) {
    auto status = ums::verify_history(record);
    if (!status) {
      std::cout << "broken at seq " << status.broken_at << "\n";
      return kFindings;
    }
    std::cout << "ok: " << record.history.size() << " events\n";
    return kClean;
  }
  for (const auto& e : record.history) {
    std::cout << e.seq << '\t' << e.timestamp.str() << '\t' << ums::to_string(e.kind) << '\t'
              << e.payload << "\n";
  }
  return kClean;
}

std::vector<ums::UmsRecord> load_corpus(const Globals& g, const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Failure{dir.string() + " is not a directory"};
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ums::kSidecarExtension) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<ums::UmsRecord> records;
  for (const auto& f : files) records.push_back(read_sidecar(f, g, false));
  return records;
}

int cmd_group(const Globals& g, const fs::path& dir, const std::string& by) {
  auto criterion = ums::parse_group_criterion(by);
  if (!criterion) throw Failure{"unknown criterion '" + by + "'"};
  for (const auto& group : ums::group_by(load_corpus(g, dir), *criterion)) {
    std::cout << "# " << group.key << "\n";
    for (const auto& m : group.members) std::cout << "  " << m << "\n";
  }
  return kClean;
}

int cmd_related(const Globals& g, const fs::path& dir, const std::string& name) {
  ums::CorpusIndex index(load_corpus(g, dir));
  for (const auto& rel : ums::related(index, name)) {
    char score[16];
    std::snprintf(score, sizeof score, "%.4f", rel.score);
    std::cout << score << '\t' << rel.name << "\n";
  }
  return kClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inspect, lint and annotate document metadata"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--metabase", g.metabase_dir, "Catalog directory (default $UMS_METABASE)");
  app.add_option("--mapping", g.mapping_file, "Mapping table file");
  app.add_flag("--strict", g.strict, "Strict parsing and validation");

  std::string path, carrier = "auto", location, event, payload, when, by, name;
  bool raw = false, json = false, verify = false;

  auto* extract = app.add_subcommand("extract", "Print raw or mapped metadata of a file");
  extract->add_option("path", path)->required();
  extract->add_option("--carrier", carrier)->check(CLI::IsMember({"auto", "pdf", "html", "sidecar"}));
  extract->add_flag("--raw", raw, "Print `key = value` pairs as found");
  extract->add_option("--location", location, "Source address recorded as a location");

  auto* lint = app.add_subcommand("lint", "Report metadata defects");
  lint->add_option("path", path)->required();
  lint->add_option("--carrier", carrier)->check(CLI::IsMember({"auto", "pdf", "html", "sidecar"}));
  lint->add_flag("--json", json, "Structured output");

  auto* validate = app.add_subcommand("validate", "Check a sidecar against the metabase");
  validate->add_option("sidecar", path)->required();

  auto* annotate = app.add_subcommand("annotate", "Append a history event to a sidecar");
  annotate->add_option("sidecar", path)->required();
  annotate->add_option("--event", event)->required();
  annotate->add_option("--payload", payload)->required();
  annotate->add_option("--timestamp", when, "Event time (default now)");

  auto* history = app.add_subcommand("history", "Show or verify a sidecar's history");
  history->add_option("sidecar", path)->required();
  history->add_flag("--verify", verify);

  auto* group = app.add_subcommand("group", "Group the sidecars in a directory");
  group->add_option("dir", path)->required();
  group->add_option("--by", by)->required();

  auto* related = app.add_subcommand("related", "Rank sidecars sharing tags with one record");
  related->add_option("dir", path)->required();
  related->add_option("name", name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kClean : kFailure;
  }

  try {
    if (*extract) return cmd_extract(g, path, carrier, raw, location);
    if (*lint) return cmd_lint(g, path, carrier, json);
    if (*validate) return cmd_validate(g, path);
    if (*annotate) return cmd_annotate(path, event, payload, when);
    if (*history) return cmd_history(g, path, verify);
    if (*group) return cmd_group(g, path, by);
    if (*related) return cmd_related(g, path, name);
  } catch (const Failure& f) {
    std::cerr << "ums: " << f.message << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "ums: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
