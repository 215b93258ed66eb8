#pragma once

// Minimal PDF object reader: enough of the COS syntax to walk classic cross-reference tables,
// trailers and dictionaries. Streams are skipped, never decoded.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ums::pdf {

struct Ref {
  int num = 0;
  int gen = 0;
};

struct Name {
  std::string value;
};

struct String {
  std::string bytes;
  /// Span of the string token in the file, delimiters excluded.
  std::size_t offset = 0;
  std::size_t length = 0;
};

struct Object;
using Array = std::vector<Object>;
using Dict = std::vector<std::pair<std::string, Object>>;

struct Object {
  std::variant<std::monostate, bool, double, Name, String, Array, Dict, Ref> value;

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&value);
  }
};

const Object* lookup(const Dict& dict, std::string_view key);

struct ParseFailure {
  std::size_t offset;
  std::string message;
};

class Lexer {
 public:
  explicit Lexer(std::string_view data, std::size_t pos = 0) : data_(data), pos_(pos) {}

  std::size_t pos() const { return pos_; }
  void seek(std::size_t pos) { pos_ = pos; }
  bool at_end() const { return pos_ >= data_.size(); }

  void skip_ws();
  /// Consumes `word` if it is the next token.
  bool keyword(std::string_view word);
  std::optional<std::int64_t> integer();
  Object object(int depth = 0);
  /// Reads `N G obj <object>` at the current position.
  std::pair<Ref, Object> indirect_object();

  [[noreturn]] void fail(std::string message) const;

 private:
  String literal_string();
  String hex_string();
  Name name();
  Object number_or_ref();

  std::string_view data_;
  std::size_t pos_;
};

bool is_pdf_whitespace(char c);
bool is_pdf_delimiter(char c);

}  // namespace ums::pdf
