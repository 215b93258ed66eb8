#pragma once

// Writes small uncompressed PDFs with a correct classic xref table.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

namespace testkit {

class PdfBuilder {
 public:
  explicit PdfBuilder(std::string version = "1.4") : version_(std::move(version)) {}

  // Reserves the next object number; fill it later with set().
  int reserve() { bodies_.emplace_back(); return static_cast<int>(bodies_.size()); }
  int add(std::string body) {
    bodies_.push_back(std::move(body));
    return static_cast<int>(bodies_.size());
  }
  void set(int num, std::string body) { bodies_[num - 1] = std::move(body); }

  static std::string stream(const std::string& dict_entries, const std::string& data) {
    return "<< " + dict_entries + " /Length " + std::to_string(data.size()) + " >>\nstream\n" +
           data + "\nendstream";
  }

  // Offsets of each object after build(), by object number.
  const std::map<int, std::size_t>& offsets() const { return offsets_; }
  std::size_t xref_offset() const { return xref_offset_; }

  std::string build(const std::string& trailer_entries) {
    std::string out = "%PDF-" + version_ + "\n%\xE2\xE3\xCF\xD3\n";
    offsets_.clear();
    for (std::size_t i = 0; i < bodies_.size(); ++i) {
      int num = static_cast<int>(i + 1);
      offsets_[num] = out.size();
      out += std::to_string(num) + " 0 obj\n" + bodies_[i] + "\nendobj\n";
    }
    xref_offset_ = out.size();
    out += "xref\n0 " + std::to_string(bodies_.size() + 1) + "\n";
    out += "0000000000 65535 f \n";
    char entry[32];
    for (std::size_t i = 0; i < bodies_.size(); ++i) {
      std::snprintf(entry, sizeof entry, "%010zu 00000 n \n", offsets_[static_cast<int>(i + 1)]);
      out += entry;
    }
    out += "trailer\n<< /Size " + std::to_string(bodies_.size() + 1) + " " + trailer_entries +
           " >>\nstartxref\n" + std::to_string(xref_offset_) + "\n%%EOF\n";
    return out;
  }

 private:
  std::string version_;
  std::vector<std::string> bodies_;
  std::map<int, std::size_t> offsets_;
  std::size_t xref_offset_ = 0;
};

}  // namespace testkit
