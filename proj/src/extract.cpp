#include "ums/extract.hpp"

#include "ums/sidecar.hpp"
#include "ums/text.hpp"

namespace ums {

std::string_view to_string(Carrier carrier) {
  switch (carrier) {
    case Carrier::pdf: return "pdf";
    case Carrier::html: return "html";
    case Carrier::sidecar: return "sidecar";
  }
  return "pdf";
}

std::optional<Carrier> parse_carrier(std::string_view text) {
  for (auto c : {Carrier::pdf, Carrier::html, Carrier::sidecar}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

const std::string* RawMetadata::find(std::string_view key) const {
  for (const auto& p : pairs) {
    if (p.key == key) return &p.value;
  }
  return nullptr;
}

namespace {
std::string_view code_name(ExtractError::Code code) {
  switch (code) {
    case ExtractError::Code::not_pdf: return "NotPdf";
    case ExtractError::Code::not_supported: return "NotSupported";
    case ExtractError::Code::unsupported_carrier: return "UnsupportedCarrier";
  }
  return "ExtractError";
}
}  // namespace

ExtractError::ExtractError(Code code, std::string detail)
    : Error(std::string(code_name(code)) + ": " + detail), code_(code) {}

void PairCollector::add(std::string key, std::string value) {
  int& n = seen_[key];
  if (n > 0) key += " (" + std::to_string(n) + ")";
  ++n;
  pairs_.push_back(RawPair{std::move(key), std::move(value)});
}

Extraction extract_sidecar_raw(std::string_view bytes) {
  Extraction out;
  out.raw.carrier = Carrier::sidecar;
  out.raw.byte_size = bytes.size();
  PairCollector pairs;
  std::size_t start = 0;
  bool first = true;
  while (start < bytes.size()) {
    auto nl = bytes.find('\n', start);
    if (nl == std::string_view::npos) nl = bytes.size();
    std::string_view line = bytes.substr(start, nl - start);
    auto sep = line.find(": ");
    if (sep == std::string_view::npos) {
      out.issues.push_back(ExtractIssue{start, "line without 'key: value'"});
    } else if (!first) {
      pairs.add(std::string(line.substr(0, sep)), std::string(line.substr(sep + 2)));
    }
    first = false;
    start = nl + 1;
  }
  out.raw.pairs = pairs.take();
  return out;
}

std::optional<Carrier> detect_carrier(std::string_view bytes, std::string_view filename) {
  if (bytes.substr(0, 5) == "%PDF-") return Carrier::pdf;
  if (bytes.substr(0, kSidecarHeader.size() + 1) == std::string(kSidecarHeader) + "\n") {
    return Carrier::sidecar;
  }
  auto dot = filename.rfind('.');
  std::string ext = dot == std::string_view::npos ? "" : ascii_lower(filename.substr(dot));
  if (ext == ".pdf") return Carrier::pdf;
  if (ext == ".html" || ext == ".htm" || ext == ".xhtml") return Carrier::html;
  if (ext == ".ums") return Carrier::sidecar;
  std::string_view head = bytes.substr(0, 4096);
  if (icontains(head, "<html") || icontains(head, "<!doctype html") || icontains(head, "<meta")) {
    return Carrier::html;
  }
  return std::nullopt;
}

Extraction extract(Carrier carrier, std::string_view bytes) {
  switch (carrier) {
    case Carrier::pdf: return extract_pdf_info(bytes);
    case Carrier::html: return extract_html_meta(bytes);
    case Carrier::sidecar: return extract_sidecar_raw(bytes);
  }
  throw ExtractError(ExtractError::Code::unsupported_carrier, "unknown carrier");
}

}  // namespace ums
