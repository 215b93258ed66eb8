#include "doctest.h"

#include "ums/validation.hpp"

using namespace ums;

namespace {

Metabase cataloged() {
  Catalog authors("authors");
  authors = authors.register_entry(CatalogEntry{
      make_systematic_name(NameKind::person, {{"Max", "Madman"}, {"1970-05-04"}, {"Wien"}}),
      {}});
  Catalog eol("subjects:eol");
  eol = eol.register_entry(CatalogEntry{
      make_systematic_name(NameKind::other, {{"Bos", "taurus"}, {}, {}}, NameScope::lenient), {}});
  return Metabase{}.with_catalog(authors).with_catalog(eol);
}

UmsRecord complete() {
  UmsRecord r;
  r.name = "octology";
  r.formats = {"pdf"};
  r.date = Timestamp::parse("2011-03-01T16:35:22Z");
  r.languages = {"en"};
  r.locations = {"http://www.enzymes.at/download/octology.pdf"};
  r.creators = {"Max Madman"};
  r.identifiers = {{"ISBN", "9781608454310"}};
  r.subjects = {{"Bos taurus", "eol"}};
  return r;
}

}  // namespace

TEST_CASE("fully cataloged record is clean") {
  CHECK(validate_record(complete(), cataloged(), ValidationMode::strict).empty());
}

TEST_CASE("creator missing from the author catalog") {
  auto report = validate_record(complete(), Metabase{}, ValidationMode::strict);
  CHECK(report.contains("CreatorNotInCatalog"));
  CHECK(report.has_errors());
  auto lenient = validate_record(complete(), Metabase{}, ValidationMode::lenient);
  CHECK(lenient.contains("CreatorNotInCatalog"));
  CHECK_FALSE(lenient.has_errors());
}

TEST_CASE("missing date in strict mode") {
  auto r = complete();
  r.date.reset();
  auto report = validate_record(r, cataloged(), ValidationMode::strict);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].code == "MissingRequiredField");
  CHECK(report.violations[0].field == "date");
  CHECK(report.has_errors());
}

TEST_CASE("recommended fields, languages, systems, subjects") {
  UmsRecord r;
  r.name = "x";
  r.formats = {"txt"};
  r.date = Timestamp::parse("2020-01-01");
  r.languages = {"python", "xx"};
  r.identifiers = {{"ARXIV", "1"}, {"DOI", "details/Octology"}};
  r.subjects = {{"Orion", "messier"}};
  auto report = validate_record(r, cataloged(), ValidationMode::strict);
  CHECK(report.contains("MissingRecommendedField"));
  CHECK(report.contains("InvalidLanguage"));
  CHECK(report.contains("UnregisteredSystem"));
  CHECK(report.contains("InvalidIdentifier"));
  CHECK(report.contains("UnknownSubjectSource"));
  CHECK(validate_record(r, cataloged(), ValidationMode::strict).violations == report.violations);
}
