// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "ums/association.hpp"
#include "ums/extract.hpp"
#include "ums/identifiers.hpp"
#include "ums/lint.hpp"
#include "ums/mapping.hpp"
#include "ums/metabase.hpp"
#include "ums/provenance.hpp"
#include "ums/sidecar.hpp"
#include "ums/text.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

namespace {

using Clock = std::chrono::steady_clock;

// A check collects the first failure reason; empty means pass.
struct Outcome {
  std::string failure;
  void expect(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_s > 0 && secs >= budget_s) {
    std::ostringstream s;
    s << "took " << secs << " s, budget " << budget_s << " s";
    o.expect(false, s.str());
  }
  bool ok = o.failure.empty();
  if (!ok) ++failures;
  std::printf("%s  %d  %-58s %8.3f s%s%s\n", ok ? "PASS" : "FAIL", id, title, secs,
              ok ? "" : "  -- ", o.failure.c_str());
  std::fflush(stdout);
}

std::set<std::string> actionable_codes(const std::vector<ums::LintFinding>& findings) {
  std::set<std::string> out;
  for (const auto& f : findings) {
    if (f.severity != ums::Severity::info) out.insert(f.code);
  }
  return out;
}

bool holds(const std::vector<std::string>& list, const std::string& v) {
  return std::find(list.begin(), list.end(), v) != list.end();
}

// Every list value of `before` is still in `after`, and name/date are untouched.
bool keeps_everything(const ums::UmsRecord& before, const ums::UmsRecord& after) {
  auto contains_all = [](const auto& a, const auto& b) {
    return std::all_of(a.begin(), a.end(), [&](const auto& x) {
      return std::find(b.begin(), b.end(), x) != b.end();
    });
  };
  return before.name == after.name && before.date == after.date &&
         contains_all(before.synonyms, after.synonyms) && contains_all(before.formats, after.formats) &&
         contains_all(before.languages, after.languages) &&
         contains_all(before.locations, after.locations) &&
         contains_all(before.identifiers, after.identifiers) &&
         after.history.size() == before.history.size() + 1 &&
         std::equal(before.history.begin(), before.history.end(), after.history.begin());
}

bool value_landed(const ums::UmsRecord& r, ums::EventKind kind, const std::string& payload) {
  std::string v = ums::nfc(payload);
  switch (kind) {
    case ums::EventKind::rename: return holds(r.synonyms, v);
    case ums::EventKind::relocate: return holds(r.locations, v);
    case ums::EventKind::reformat: return holds(r.formats, v);
    case ums::EventKind::translate: return holds(r.languages, v);
    case ums::EventKind::reclassify: {
      auto bar = v.find('|');
      ums::IdentifierBinding b{v.substr(0, bar), v.substr(bar + 1)};
      return std::find(r.identifiers.begin(), r.identifiers.end(), b) != r.identifiers.end();
    }
    default: return false;
  }
}

bool tamper_detected(const std::string& bytes) {
  try {
    return !ums::verify_history(ums::parse_record(bytes).record);
  } catch (const ums::Error&) {
    return true;
  }
}

std::string isbn_candidate(testkit::Rng& rng) {
  std::uniform_int_distribution<int> digit(0, 9);
  std::uniform_int_distribution<int> shape(0, 9);
  int s = shape(rng);
  std::size_t len = s < 5 ? 13 : (s < 9 ? 10 : std::uniform_int_distribution<std::size_t>(0, 15)(rng));
  std::string body;
  if (len == 13) body = (digit(rng) < 5) ? "978" : "979";
  while (body.size() + 1 < len) body += static_cast<char>('0' + digit(rng));
  if (len == 0) return body;
  const std::string checks = "0123456789X";
  std::string c;
  if (digit(rng) < 5) {
    // aim for a valid one half of the time
    for (char ch : checks) {
      if (oracle::isbn_valid(body + ch)) c = std::string(1, ch);
    }
  }
  if (c.empty()) c = std::string(1, checks[std::uniform_int_distribution<std::size_t>(0, 10)(rng)]);
  std::string out = body + c;
  if (digit(rng) == 0 && out.size() > 4) out.insert(3, "-");
  if (digit(rng) == 0) out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)] = 'A';
  return out;
}

}  // namespace

int main() {
  const ums::Metabase metabase;

  criterion(1, "octology PDF info extraction", 1.0, [](Outcome& o) {
    const std::string pdf = testkit::octology_pdf();
    auto raw = ums::extract_pdf_info(pdf).raw;
    auto is = [&](const char* key, const std::string& want) {
      const std::string* got = raw.find(key);
      o.expect(got && *got == want, std::string(key) + " = " + (got ? *got : "<absent>"));
    };
    is("Title", "octology");
    is("Author", "Max Madman");
    is("Creator", "Pages");
    is("Producer", "Mac OS X 10.5.2 Quartz PDFContext");
    is("PageCount", "76");
    is("CreateDate", "2011:03:01 16:35:22Z");
    is("ModifyDate", "2011:03:01 16:35:22Z");
    is("FileType", "PDF");
    is("MIMEType", "application/pdf");
    o.expect(raw.find("PDFVersion") != nullptr, "PDFVersion missing");
  });

  criterion(2, "lint findings on the octology PDF", 0, [&](Outcome& o) {
    auto raw = ums::extract_pdf_info(testkit::octology_pdf()).raw;
    auto findings = ums::lint_raw(raw, metabase);
    std::set<std::string> want = {"FORMAT_REDUNDANCY", "AUTHOR_AMBIGUOUS", "TIMESTAMP_COINCIDENT"};
    o.expect(actionable_codes(findings) == want, "unexpected finding set:\n" + ums::format_findings(findings));
    for (const auto& f : findings) {
      if (f.code == "FORMAT_REDUNDANCY") {
        o.expect(f.evidence.size() == 6, "FORMAT_REDUNDANCY evidence count " + std::to_string(f.evidence.size()));
      }
    }
    raw.pairs.push_back({"DOI", "details/Octology"});
    auto more = actionable_codes(ums::lint_raw(raw, metabase));
    want.insert("IDENTIFIER_INVALID");
    o.expect(more == want, "DOI pair did not add exactly IDENTIFIER_INVALID");
  });

  criterion(3, "PubMed HTML meta extraction and mapping", 0, [](Outcome& o) {
    auto raw = ums::extract_html_meta(testkit::pubmed_html()).raw;
    for (auto [k, v] : {std::pair{"author", "pubmeddev"}, std::pair{"ncbi_uidlist", "21383996"},
                        std::pair{"ncbi_db", "pubmed"}}) {
      const std::string* got = raw.find(k);
      o.expect(got && *got == v, std::string(k) + " = " + (got ? *got : "<absent>"));
    }
    auto mapped = ums::map_raw_to_ums(raw, ums::default_mapping_table()).record;
    ums::IdentifierBinding pmid{"PMID", "21383996"};
    o.expect(std::find(mapped.identifiers.begin(), mapped.identifiers.end(), pmid) != mapped.identifiers.end(),
             "mapped record lacks (PMID, 21383996)");
  });

  criterion(4, "sidecar round-trip on 1000 random records", 10.0, [](Outcome& o) {
    testkit::Rng rng(20110301);
    for (int i = 0; i < 1000 && o.failure.empty(); ++i) {
      auto r = testkit::random_record(rng);
      std::string bytes = ums::canonical_serialize(r);
      auto back = ums::parse_record(bytes).record;
      o.expect(back == r, "parse(serialize(r)) != r for record " + std::to_string(i));
      o.expect(ums::canonical_serialize(back) == bytes, "serialization not idempotent at " + std::to_string(i));
    }
  });

  criterion(5, "provenance on 1000 random event sequences", 30.0, [](Outcome& o) {
    testkit::Rng rng(21383996);
    std::size_t tampers = 0;
    for (int i = 0; i < 1000 && o.failure.empty(); ++i) {
      auto start = testkit::random_record(rng);
      auto events = testkit::random_events(rng, 20);
      auto cur = start;
      for (const auto& e : events) {
        auto next = ums::apply_event(cur, e.kind, e.payload, e.timestamp).record;
        if (cur.history.empty()) {
          o.expect(next.history.size() == 2, "implicit genesis missing");
          cur.history = {next.history[0]};
        }
        o.expect(keeps_everything(cur, next), "value lost at sequence " + std::to_string(i));
        o.expect(value_landed(next, e.kind, e.payload), "payload not applied at sequence " + std::to_string(i));
        cur = std::move(next);
      }
      if (cur.history.empty()) continue;
      o.expect(bool(ums::verify_history(cur)), "fresh chain does not verify");

      // replay from the original view reproduces the record
      auto replay = ums::original_view(cur);
      o.expect(ums::canonical_serialize(replay) == ums::canonical_serialize(ums::begin_history(start, cur.history[0].timestamp)),
               "original view differs from the starting record");
      for (std::size_t k = 1; k < cur.history.size(); ++k) {
        const auto& h = cur.history[k];
        replay = ums::apply_event(replay, h.kind, h.payload, h.timestamp).record;
      }
      o.expect(replay == cur, "replay differs at sequence " + std::to_string(i));

      std::string bytes = ums::canonical_serialize(cur);
      std::size_t pos = bytes.find("\nhistory: ") + 1;
      std::size_t end = bytes.find("\nhead: ", pos);
      for (; pos < end && o.failure.empty(); ++pos) {
        if (bytes[pos] == '\n') continue;
        // one altered byte per position; the mask rotates so case, bit-0 and high-bit flips all occur
        static constexpr unsigned char kMasks[] = {0x01, 0x20, 0x80, 0x0F};
        std::string copy = bytes;
        copy[pos] = static_cast<char>(static_cast<unsigned char>(copy[pos]) ^ kMasks[pos % 4]);
        ++tampers;
        o.expect(tamper_detected(copy), "undetected tamper at byte " + std::to_string(pos) +
                                            " of sequence " + std::to_string(i));
      }
    }
    o.expect(tampers > 10000, "too few tampers exercised");
  });

  criterion(6, "identifier checks against brute force", 0, [&](Outcome& o) {
    testkit::Rng rng(9781608454310ULL);
    int valid = 0;
    for (int i = 0; i < 10000 && o.failure.empty(); ++i) {
      std::string c = isbn_candidate(rng);
      bool want = oracle::isbn_valid(c);
      bool got = ums::validate_identifier(metabase, "ISBN", c).valid();
      valid += want;
      o.expect(got == want, "ISBN '" + c + "' library " + (got ? "accepts" : "rejects"));
    }
    o.expect(valid > 1000 && valid < 9000, "candidate mix is lopsided");
    o.expect(ums::validate_identifier(metabase, "ISBN", "9781608454310").valid(), "ISBN 9781608454310");
    o.expect(ums::validate_identifier(metabase, "PMID", "21383996").valid(), "PMID 21383996");
    o.expect(!ums::validate_identifier(metabase, "DOI", "details/Octology").valid(), "DOI details/Octology");
  });

  criterion(7, "grouping and related() against naive oracles", 5.0, [](Outcome& o) {
    testkit::Rng rng(7);
    for (int round = 0; round < 300 && o.failure.empty(); ++round) {
      auto corpus = testkit::random_corpus(rng, 50);
      for (auto c : {ums::GroupCriterion::alphabet, ums::GroupCriterion::date, ums::GroupCriterion::theme,
                     ums::GroupCriterion::project, ums::GroupCriterion::format, ums::GroupCriterion::location}) {
        auto want = oracle::partition(corpus, std::string(ums::to_string(c)));
        std::map<std::string, std::vector<std::string>> got;
        for (auto& g : ums::group_by(corpus, c)) got.emplace(g.key, g.members);
        o.expect(got == want, "group_by " + std::string(ums::to_string(c)) + " round " + std::to_string(round));
      }
      ums::CorpusIndex index(corpus);
      for (const auto& r : corpus) {
        std::vector<std::pair<std::string, double>> got;
        for (auto& rel : ums::related(index, r.name)) got.emplace_back(rel.name, rel.score);
        o.expect(got == oracle::related(corpus, r.name), "related(" + r.name + ") round " + std::to_string(round));
      }
    }
  });

  return failures == 0 ? 0 : 1;
}
