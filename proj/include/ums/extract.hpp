#pragma once

#include "ums/error.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ums {

enum class Carrier { pdf, html, sidecar };

std::string_view to_string(Carrier carrier);
std::optional<Carrier> parse_carrier(std::string_view text);

struct RawPair {
  std::string key;
  std::string value;

  bool operator==(const RawPair&) const = default;
};

/// Carrier-level key/value pairs in order of appearance. Repeated keys are kept apart by a
/// ` (n)` suffix, e.g. `PDFVersion` then `PDFVersion (1)`.
struct RawMetadata {
  Carrier carrier = Carrier::pdf;
  std::vector<RawPair> pairs;
  std::size_t byte_size = 0;

  /// First value stored under exactly this key.
  const std::string* find(std::string_view key) const;
  bool operator==(const RawMetadata&) const = default;
};

class ExtractError : public Error {
 public:
  enum class Code { not_pdf, not_supported, unsupported_carrier };

  ExtractError(Code code, std::string detail);
  Code code() const { return code_; }

 private:
  Code code_;
};

/// Non-fatal damage found while extracting; the pairs gathered so far are still returned.
struct ExtractIssue {
  std::size_t offset = 0;
  std::string message;

  bool operator==(const ExtractIssue&) const = default;
};

struct Extraction {
  RawMetadata raw;
  std::vector<ExtractIssue> issues;
};

/// Appends pairs, numbering repeated keys.
class PairCollector {
 public:
  void add(std::string key, std::string value);
  std::vector<RawPair> take() { return std::move(pairs_); }

 private:
  std::vector<RawPair> pairs_;
  std::map<std::string, int, std::less<>> seen_;
};

/// Reads a PDF with a classic cross-reference table. Emits FileSize, FileType,
/// FileType(guessed), MIMEType, PDFVersion (header), the Info dictionary entries (CreationDate
/// and ModDate renamed CreateDate/ModifyDate and shown as `YYYY:MM:DD hh:mm:ss`), the catalog
/// /Version, PageCount and simple XMP properties.
///
/// Throws ExtractError(not_pdf) without a `%PDF-` header and ExtractError(not_supported) for
/// cross-reference streams or encrypted files.
Extraction extract_pdf_info(std::string_view bytes);

/// Tolerant scan for `<title>` (as Title) and `<meta name=... content=...>`. Never throws.
Extraction extract_html_meta(std::string_view bytes);

/// Sidecar lines as raw pairs, values kept escaped.
Extraction extract_sidecar_raw(std::string_view bytes);

/// Guesses the carrier from magic bytes, then from the file extension.
std::optional<Carrier> detect_carrier(std::string_view bytes, std::string_view filename);

Extraction extract(Carrier carrier, std::string_view bytes);

}  // namespace ums
