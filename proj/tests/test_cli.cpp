#include "doctest.h"

#include "ums/provenance.hpp"
#include "ums/sidecar.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = UMS_FIXTURE_DIR;

struct Run {
  int status = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'') q += "'\\''";
    else q += c;
  }
  return q + "'";
}

Run ums_cli(const std::string& args) {
  std::string command = quote(UMS_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string fixture(const char* name) { return quote((kFixtures / name).string()); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Copy of a fixture in a scratch directory the test may modify.
fs::path scratch_copy(const char* name) {
  fs::path dir = fs::temp_directory_path() / ("ums_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  fs::path to = dir / name;
  fs::copy_file(kFixtures / name, to, fs::copy_options::overwrite_existing);
  return to;
}

const std::string kMetabase = "--metabase " + fixture("metabase");

}  // namespace

TEST_CASE("extract --raw prints the carrier pairs") {
  auto r = ums_cli("extract --raw " + fixture("octology.pdf"));
  CHECK(r.status == 0);
  CHECK(r.out.find("Author = Max Madman\n") != std::string::npos);
  CHECK(r.out.find("PageCount = 76\n") != std::string::npos);
}

TEST_CASE("extract without --raw prints a parseable sidecar") {
  auto r = ums_cli("extract " + fixture("pubmed.html"));
  REQUIRE(r.status == 0);
  auto rec = ums::parse_record(r.out).record;
  CHECK(rec.name.rfind("Was the serine protease cathepsin G", 0) == 0);
  REQUIRE(rec.identifiers.size() == 1);
  CHECK(rec.identifiers[0] == ums::IdentifierBinding{"PMID", "21383996"});
}

TEST_CASE("missing input is an operational error") {
  CHECK(ums_cli("extract /nonexistent/file.pdf").status == 2);
  CHECK(ums_cli("frobnicate").status == 2);
}

TEST_CASE("lint exit codes") {
  auto r = ums_cli("lint " + fixture("octology.pdf"));
  CHECK(r.status == 1);
  CHECK(r.out.find("FORMAT_REDUNDANCY\twarning\t") != std::string::npos);
  CHECK(r.out.find("AUTHOR_AMBIGUOUS") != std::string::npos);

  auto indesign = ums_cli("lint " + fixture("indesign.pdf"));
  CHECK(indesign.out.find("TIMESTAMP_COINCIDENT") == std::string::npos);

  auto clean = ums_cli(kMetabase + " lint " + fixture("clean.ums"));
  CHECK(clean.status == 0);

  auto json = ums_cli("lint --json " + fixture("octology.pdf"));
  CHECK(json.out.find("\"code\": \"FORMAT_REDUNDANCY\"") != std::string::npos);
}

TEST_CASE("validate") {
  CHECK(ums_cli(kMetabase + " --strict validate " + fixture("clean.ums")).status == 0);
  CHECK(ums_cli(kMetabase + " --strict validate " + fixture("undated.ums")).status == 1);
  CHECK(ums_cli(kMetabase + " validate " + fixture("undated.ums")).status == 0);
}

TEST_CASE("annotate appends history and history --verify checks it") {
  auto path = scratch_copy("clean.ums");
  std::string p = quote(path.string());
  CHECK(ums_cli("annotate " + p + " --event rename --payload Octology --timestamp 2011-03-07T10:00:00Z").status == 0);
  CHECK(ums_cli("annotate " + p + " --event rename --payload Octology --timestamp 2011-03-08T10:00:00Z").status == 0);
  auto rec = ums::parse_record(slurp(path)).record;
  CHECK(rec.synonyms == std::vector<std::string>{"Octology"});
  CHECK(rec.history.size() == 3);

  auto ok = ums_cli("history --verify " + p);
  CHECK(ok.status == 0);
  CHECK(ok.out == "ok: 3 events\n");

  CHECK(ums_cli("annotate " + p + " --event reformat --payload 'PDF doc' --timestamp 2011-03-09").status == 2);

  // rewrite one history payload by hand and recompute nothing
  std::string bytes = slurp(path);
  auto at = bytes.find("|Octology|");
  REQUIRE(at != std::string::npos);
  bytes.replace(at, 10, "|Octopus!|");
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << bytes;
  }
  auto broken = ums_cli("history --verify " + p);
  CHECK(broken.status == 1);
  CHECK(broken.out.rfind("broken at seq ", 0) == 0);
  CHECK(ums_cli("annotate " + p + " --event rename --payload X --timestamp 2011-03-10").status == 2);
  fs::remove_all(path.parent_path());
}

TEST_CASE("group and related over a directory") {
  auto g = ums_cli("group --by format " + fixture("corpus"));
  CHECK(g.status == 0);
  CHECK(g.out == "# html\n  pubmed\n# pdf\n  appendix\n  octology\n");

  auto r = ums_cli("related " + fixture("corpus") + " octology");
  CHECK(r.status == 0);
  CHECK(r.out == "0.3333\tpubmed\n");
  CHECK(ums_cli("related " + fixture("corpus") + " nobody").status == 2);
  CHECK(ums_cli("group --by colour " + fixture("corpus")).status == 2);
}
