// Writes the carrier files, sidecars and catalog used by the CLI tests into one directory.

#include "fixtures.hpp"
#include "ums/metabase.hpp"
#include "ums/sidecar.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;

namespace {

void write(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

ums::UmsRecord record(std::string name, std::string format, std::vector<std::string> tags) {
  ums::UmsRecord r;
  r.name = std::move(name);
  r.formats = {std::move(format)};
  r.date = ums::Timestamp::parse("2011-03-01T16:35:22Z");
  r.languages = {"en"};
  r.locations = {"/srv/docs/" + r.name};
  r.creators = {"Max Madman"};
  r.identifiers = {{"ISBN", "9781608454310"}};
  r.subjects = {{"enzymes", ""}};
  r.tags = std::move(tags);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <dir>\n";
    return 2;
  }
  try {
    fs::path dir = argv[1];
    fs::remove_all(dir);
    fs::create_directories(dir / "corpus");
    fs::create_directories(dir / "metabase");

    write(dir / "octology.pdf", testkit::octology_pdf());
    write(dir / "indesign.pdf", testkit::indesign_pdf());
    write(dir / "pubmed.html", testkit::pubmed_html());

    ums::Catalog authors("authors");
    authors = authors.register_entry(ums::CatalogEntry{
        ums::make_systematic_name(ums::NameKind::person, {{"Max", "Madman"}, {"1970-05-04"}, {"Wien"}}),
        {}});
    write(dir / "metabase" / "authors.catalog", ums::serialize_catalog(authors));

    auto clean = record("octology", "pdf", {"enzymes", "project:ums"});
    write(dir / "clean.ums", ums::canonical_serialize(clean));

    auto undated = clean;
    undated.date.reset();
    write(dir / "undated.ums", ums::canonical_serialize(undated));

    write(dir / "corpus" / "octology.ums", ums::canonical_serialize(clean));
    write(dir / "corpus" / "pubmed.ums",
          ums::canonical_serialize(record("pubmed", "html", {"enzymes", "pubmed"})));
    write(dir / "corpus" / "appendix.ums",
          ums::canonical_serialize(record("appendix", "pdf", {"tables"})));
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 0;
}
