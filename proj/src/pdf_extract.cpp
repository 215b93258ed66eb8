#include "ums/extract.hpp"

#include "pdf_lexer.hpp"
#include "ums/text.hpp"
#include "ums/timestamp.hpp"
#include "xmp_scan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ums {

namespace {

using pdf::Dict;
using pdf::Lexer;
using pdf::Object;
using pdf::ParseFailure;
using pdf::Ref;

struct XrefEntry {
  std::size_t offset = 0;
  int gen = 0;
};

struct Document {
  std::string_view data;
  std::map<int, XrefEntry> objects;
  Dict trailer;
  std::vector<ExtractIssue> issues;
};

// PDFDocEncoding 0x80..0xA0 differ from Latin-1.
constexpr char32_t kPdfDocHigh[33] = {
    0x2022, 0x2020, 0x2021, 0x2026, 0x2014, 0x2013, 0x0192, 0x2044, 0x2039, 0x203A, 0x2212,
    0x2030, 0x201E, 0x201C, 0x201D, 0x2018, 0x2019, 0x201A, 0x2122, 0xFB01, 0xFB02, 0x0141,
    0x0152, 0x0160, 0x0178, 0x017D, 0x0131, 0x0142, 0x0153, 0x0161, 0x017E, 0xFFFD, 0x20AC};

std::string decode_text_string(const std::string& bytes) {
  std::string out;
  if (bytes.size() >= 2 && static_cast<unsigned char>(bytes[0]) == 0xFE &&
      static_cast<unsigned char>(bytes[1]) == 0xFF) {
    for (std::size_t i = 2; i + 1 < bytes.size(); i += 2) {
      char32_t unit = (static_cast<unsigned char>(bytes[i]) << 8) |
                      static_cast<unsigned char>(bytes[i + 1]);
      if (unit >= 0xD800 && unit <= 0xDBFF && i + 3 < bytes.size()) {
        char32_t low = (static_cast<unsigned char>(bytes[i + 2]) << 8) |
                       static_cast<unsigned char>(bytes[i + 3]);
        if (low >= 0xDC00 && low <= 0xDFFF) {
          append_utf8(out, 0x10000 + ((unit - 0xD800) << 10) + (low - 0xDC00));
          i += 2;
          continue;
        }
      }
      append_utf8(out, (unit >= 0xD800 && unit <= 0xDFFF) ? 0xFFFD : unit);
    }
    return out;
  }
  if (bytes.size() >= 3 && bytes.compare(0, 3, "\xEF\xBB\xBF") == 0) {
    out = bytes.substr(3);
    return is_valid_utf8(out) ? out : std::string{};
  }
  for (char ch : bytes) {
    auto b = static_cast<unsigned char>(ch);
    if (b < 0x80) {
      out += ch;
    } else if (b <= 0xA0) {
      append_utf8(out, kPdfDocHigh[b - 0x80]);
    } else {
      append_utf8(out, b);
    }
  }
  return out;
}

std::optional<Object> read_object(Document& doc, int num) {
  auto it = doc.objects.find(num);
  if (it == doc.objects.end()) return std::nullopt;
  try {
    Lexer lex(doc.data, it->second.offset);
    auto [ref, obj] = lex.indirect_object();
    if (ref.num != num) {
      doc.issues.push_back(ExtractIssue{it->second.offset, "xref points at object " +
                                                               std::to_string(ref.num) +
                                                               " instead of " + std::to_string(num)});
      return std::nullopt;
    }
    return obj;
  } catch (const ParseFailure& f) {
    doc.issues.push_back(ExtractIssue{f.offset, "object " + std::to_string(num) + ": " + f.message});
    return std::nullopt;
  }
}

std::optional<Object> resolve(Document& doc, const Object& obj) {
  if (const Ref* ref = obj.as<Ref>()) return read_object(doc, ref->num);
  return obj;
}

bool is_xref_stream_at(std::string_view data, std::size_t offset) {
  try {
    Lexer lex(data, offset);
    auto [ref, obj] = lex.indirect_object();
    if (const Dict* d = obj.as<Dict>()) {
      const Object* type = pdf::lookup(*d, "Type");
      return type && type->as<pdf::Name>() && type->as<pdf::Name>()->value == "XRef";
    }
  } catch (const ParseFailure&) {
  }
  return false;
}

// Reads one `xref ... trailer <<>>` section. Returns false if the offset holds something else.
bool read_xref_section(Document& doc, std::size_t offset, Dict& trailer) {
  Lexer lex(doc.data, offset);
  if (!lex.keyword("xref")) return false;
  while (true) {
    if (lex.keyword("trailer")) break;
    auto start = lex.integer();
    auto count = lex.integer();
    if (!start || !count || *start < 0 || *count < 0) lex.fail("bad xref subsection header");
    for (std::int64_t i = 0; i < *count; ++i) {
      auto off = lex.integer();
      auto gen = lex.integer();
      lex.skip_ws();
      bool in_use = lex.keyword("n");
      if (!in_use && !lex.keyword("f")) lex.fail("bad xref entry type");
      if (!off || !gen) lex.fail("bad xref entry");
      int num = static_cast<int>(*start + i);
      // Newer sections are read first and win.
      if (in_use && !doc.objects.count(num) && *off > 0 &&
          static_cast<std::size_t>(*off) < doc.data.size()) {
        doc.objects[num] = XrefEntry{static_cast<std::size_t>(*off), static_cast<int>(*gen)};
      } else if (!in_use && !doc.objects.count(num)) {
        doc.objects[num] = XrefEntry{0, -1};  // free: shadows older definitions
      }
    }
  }
  Object t = lex.object();
  const Dict* d = t.as<Dict>();
  if (!d) lex.fail("trailer is not a dictionary");
  trailer = *d;
  return true;
}

// Fallback when the xref table is unusable: find every `N G obj` header in the file.
void scan_objects(Document& doc) {
  doc.objects.clear();
  std::string_view data = doc.data;
  std::size_t pos = 0;
  while ((pos = data.find("obj", pos)) != std::string_view::npos) {
    std::size_t at = pos;
    pos += 3;
    if (at == 0 || !pdf::is_pdf_whitespace(data[at - 1])) continue;
    if (pos < data.size() && !pdf::is_pdf_whitespace(data[pos]) && !pdf::is_pdf_delimiter(data[pos])) {
      continue;
    }
    std::size_t i = at;
    auto back_ws = [&] {
      while (i > 0 && pdf::is_pdf_whitespace(data[i - 1])) --i;
    };
    auto back_digits = [&] {
      std::size_t end = i;
      while (i > 0 && data[i - 1] >= '0' && data[i - 1] <= '9') --i;
      return end - i;
    };
    back_ws();
    if (back_digits() == 0) continue;
    back_ws();
    std::size_t num_end = i;
    if (back_digits() == 0) continue;
    if (i > 0 && !pdf::is_pdf_whitespace(data[i - 1]) && !pdf::is_pdf_delimiter(data[i - 1])) continue;
    int num = std::stoi(std::string(data.substr(i, num_end - i)));
    doc.objects[num] = XrefEntry{i, 0};
  }
  auto t = data.rfind("trailer");
  if (t != std::string_view::npos) {
    try {
      Lexer lex(data, t + 7);
      Object obj = lex.object();
      if (const Dict* d = obj.as<Dict>()) doc.trailer = *d;
    } catch (const ParseFailure& f) {
      doc.issues.push_back(ExtractIssue{f.offset, "trailer: " + f.message});
    }
  }
  if (doc.trailer.empty()) {
    // No trailer at all: recover Info and Root by their contents.
    for (const auto& [num, entry] : doc.objects) {
      auto obj = read_object(doc, num);
      if (!obj) continue;
      const Dict* d = obj->as<Dict>();
      if (!d) continue;
      const Object* type = pdf::lookup(*d, "Type");
      const pdf::Name* tn = type ? type->as<pdf::Name>() : nullptr;
      if (tn && tn->value == "Catalog" && !pdf::lookup(doc.trailer, "Root")) {
        doc.trailer.emplace_back("Root", Object{Ref{num, 0}});
      } else if (!type && (pdf::lookup(*d, "Producer") || pdf::lookup(*d, "CreationDate") ||
                           pdf::lookup(*d, "Title")) &&
                 !pdf::lookup(doc.trailer, "Info")) {
        doc.trailer.emplace_back("Info", Object{Ref{num, 0}});
      }
    }
  }
}

void load_structure(Document& doc) {
  std::string_view data = doc.data;
  auto sx = data.rfind("startxref");
  if (sx == std::string_view::npos) {
    doc.issues.push_back(ExtractIssue{data.size(), "no startxref; scanning for objects"});
    scan_objects(doc);
    return;
  }
  Lexer lex(data, sx + 9);
  auto first = lex.integer();
  if (!first || *first < 0 || static_cast<std::size_t>(*first) >= data.size()) {
    doc.issues.push_back(ExtractIssue{sx, "startxref offset out of range; scanning for objects"});
    scan_objects(doc);
    return;
  }

  std::set<std::size_t> visited;
  std::optional<std::size_t> next = static_cast<std::size_t>(*first);
  while (next) {
    std::size_t offset = *next;
    next.reset();
    if (!visited.insert(offset).second) {
      doc.issues.push_back(ExtractIssue{offset, "cross-reference /Prev loop"});
      break;
    }
    Dict trailer;
    bool ok = false;
    try {
      ok = read_xref_section(doc, offset, trailer);
    } catch (const ParseFailure& f) {
      doc.issues.push_back(ExtractIssue{f.offset, "xref: " + f.message + "; scanning for objects"});
      scan_objects(doc);
      return;
    }
    if (!ok) {
      if (is_xref_stream_at(data, offset)) {
        throw ExtractError(ExtractError::Code::not_supported,
                           "cross-reference streams are not supported");
      }
      doc.issues.push_back(ExtractIssue{offset, "no xref table at startxref; scanning for objects"});
      scan_objects(doc);
      return;
    }
    for (auto& [key, value] : trailer) {
      if (!pdf::lookup(doc.trailer, key)) doc.trailer.emplace_back(key, value);
    }
    if (const Object* prev = pdf::lookup(trailer, "Prev")) {
      if (const double* p = prev->as<double>(); p && *p >= 0 && *p < static_cast<double>(data.size())) {
        next = static_cast<std::size_t>(*p);
      }
    }
  }
  for (auto it = doc.objects.begin(); it != doc.objects.end();) {
    it = it->second.gen < 0 ? doc.objects.erase(it) : std::next(it);
  }
}

std::string info_key(const std::string& key) {
  if (key == "CreationDate") return "CreateDate";
  if (key == "ModDate") return "ModifyDate";
  return key;
}

std::string header_version(std::string_view data) {
  std::size_t end = 5;
  while (end < data.size() && end < 16 && !pdf::is_pdf_whitespace(data[end])) ++end;
  return std::string(data.substr(5, end - 5));
}

}  // namespace

Extraction extract_pdf_info(std::string_view bytes) {
  if (bytes.substr(0, 5) != "%PDF-") {
    throw ExtractError(ExtractError::Code::not_pdf, "missing %PDF- header");
  }
  Document doc;
  doc.data = bytes;
  load_structure(doc);
  if (pdf::lookup(doc.trailer, "Encrypt")) {
    throw ExtractError(ExtractError::Code::not_supported, "encrypted PDF");
  }

  PairCollector pairs;
  const std::string version = header_version(bytes);
  pairs.add("FileSize", std::to_string(bytes.size()));
  pairs.add("FileType", "PDF");
  pairs.add("FileType(guessed)", "PDF document, version " + version);
  pairs.add("MIMEType", "application/pdf");
  pairs.add("PDFVersion", version);

  if (const Object* info_ref = pdf::lookup(doc.trailer, "Info")) {
    auto info = resolve(doc, *info_ref);
    if (const Dict* d = info ? info->as<Dict>() : nullptr) {
      for (const auto& [key, raw_value] : *d) {
        auto value = resolve(doc, raw_value);
        if (!value) continue;
        std::string text;
        if (const pdf::String* s = value->as<pdf::String>()) {
          text = decode_text_string(s->bytes);
        } else if (const pdf::Name* n = value->as<pdf::Name>()) {
          text = n->value;
        } else {
          continue;
        }
        if (key == "CreationDate" || key == "ModDate") {
          if (auto fields = parse_datetime_fields(trim(text))) text = exif_style(*fields);
        }
        pairs.add(info_key(key), std::move(text));
      }
    } else if (info_ref) {
      doc.issues.push_back(ExtractIssue{0, "Info entry does not resolve to a dictionary"});
    }
  }

  if (const Object* root_ref = pdf::lookup(doc.trailer, "Root")) {
    auto root = resolve(doc, *root_ref);
    if (const Dict* d = root ? root->as<Dict>() : nullptr) {
      if (const Object* v = pdf::lookup(*d, "Version")) {
        if (const pdf::Name* n = v->as<pdf::Name>()) pairs.add("PDFVersion", n->value);
      }
    }
  }

  std::size_t pages = 0;
  for (const auto& [num, entry] : doc.objects) {
    auto obj = read_object(doc, num);
    const Dict* d = obj ? obj->as<Dict>() : nullptr;
    if (!d) continue;
    const Object* type = pdf::lookup(*d, "Type");
    const pdf::Name* n = type ? type->as<pdf::Name>() : nullptr;
    if (n && n->value == "Page") ++pages;
  }
  pairs.add("PageCount", std::to_string(pages));

  for (auto& [key, value] : scan_xmp(bytes)) pairs.add(std::move(key), std::move(value));

  Extraction out;
  out.raw.carrier = Carrier::pdf;
  out.raw.byte_size = bytes.size();
  out.raw.pairs = pairs.take();
  out.issues = std::move(doc.issues);
  return out;
}

}  // namespace ums
