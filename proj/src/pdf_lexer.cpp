#include "pdf_lexer.hpp"

#include <charconv>
#include <cstdlib>

namespace ums::pdf {

namespace {
constexpr int kMaxDepth = 64;

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

bool is_pdf_whitespace(char c) {
  return c == '\0' || c == '\t' || c == '\n' || c == '\f' || c == '\r' || c == ' ';
}

bool is_pdf_delimiter(char c) {
  return c == '(' || c == ')' || c == '<' || c == '>' || c == '[' || c == ']' || c == '{' ||
         c == '}' || c == '/' || c == '%';
}

const Object* lookup(const Dict& dict, std::string_view key) {
  for (const auto& [k, v] : dict) {
    if (k == key) return &v;
  }
  return nullptr;
}

void Lexer::fail(std::string message) const { throw ParseFailure{pos_, std::move(message)}; }

void Lexer::skip_ws() {
  while (pos_ < data_.size()) {
    char c = data_[pos_];
    if (is_pdf_whitespace(c)) {
      ++pos_;
    } else if (c == '%') {
      while (pos_ < data_.size() && data_[pos_] != '\n' && data_[pos_] != '\r') ++pos_;
    } else {
      break;
    }
  }
}

bool Lexer::keyword(std::string_view word) {
  skip_ws();
  if (data_.substr(pos_, word.size()) != word) return false;
  std::size_t end = pos_ + word.size();
  if (end < data_.size() && !is_pdf_whitespace(data_[end]) && !is_pdf_delimiter(data_[end])) {
    return false;
  }
  pos_ = end;
  return true;
}

std::optional<std::int64_t> Lexer::integer() {
  skip_ws();
  std::size_t start = pos_;
  if (pos_ < data_.size() && (data_[pos_] == '+' || data_[pos_] == '-')) ++pos_;
  std::size_t digits = pos_;
  while (pos_ < data_.size() && data_[pos_] >= '0' && data_[pos_] <= '9') ++pos_;
  if (pos_ == digits || (pos_ < data_.size() && data_[pos_] == '.')) {
    pos_ = start;
    return std::nullopt;
  }
  std::int64_t value = 0;
  const char* first = data_.data() + (data_[start] == '+' ? start + 1 : start);
  auto [p, ec] = std::from_chars(first, data_.data() + pos_, value);
  if (ec != std::errc{}) {
    pos_ = start;
    return std::nullopt;
  }
  return value;
}

Name Lexer::name() {
  ++pos_;  // '/'
  Name n;
  while (pos_ < data_.size() && !is_pdf_whitespace(data_[pos_]) &&
         !is_pdf_delimiter(data_[pos_])) {
    char c = data_[pos_];
    if (c == '#' && pos_ + 2 < data_.size() && hex_value(data_[pos_ + 1]) >= 0 &&
        hex_value(data_[pos_ + 2]) >= 0) {
      n.value += static_cast<char>(hex_value(data_[pos_ + 1]) * 16 + hex_value(data_[pos_ + 2]));
      pos_ += 3;
    } else {
      n.value += c;
      ++pos_;
    }
  }
  return n;
}

String Lexer::literal_string() {
  String s;
  ++pos_;  // '('
  s.offset = pos_;
  int depth = 1;
  while (pos_ < data_.size()) {
    char c = data_[pos_++];
    if (c == '\\') {
      if (pos_ >= data_.size()) break;
      char e = data_[pos_++];
      switch (e) {
        case 'n': s.bytes += '\n'; break;
        case 'r': s.bytes += '\r'; break;
        case 't': s.bytes += '\t'; break;
        case 'b': s.bytes += '\b'; break;
        case 'f': s.bytes += '\f'; break;
        case '(': s.bytes += '('; break;
        case ')': s.bytes += ')'; break;
        case '\\': s.bytes += '\\'; break;
        case '\r':
          if (pos_ < data_.size() && data_[pos_] == '\n') ++pos_;
          break;
        case '\n': break;
        default:
          if (e >= '0' && e <= '7') {
            int v = e - '0';
            for (int k = 0; k < 2 && pos_ < data_.size() && data_[pos_] >= '0' && data_[pos_] <= '7'; ++k) {
              v = v * 8 + (data_[pos_++] - '0');
            }
            s.bytes += static_cast<char>(v & 0xFF);
          } else {
            s.bytes += e;
          }
      }
    } else if (c == '(') {
      ++depth;
      s.bytes += c;
    } else if (c == ')') {
      if (--depth == 0) {
        s.length = pos_ - 1 - s.offset;
        return s;
      }
      s.bytes += c;
    } else {
      s.bytes += c;
    }
  }
  fail("unterminated string");
}

String Lexer::hex_string() {
  String s;
  ++pos_;  // '<'
  s.offset = pos_;
  int high = -1;
  while (pos_ < data_.size()) {
    char c = data_[pos_++];
    if (c == '>') {
      if (high >= 0) s.bytes += static_cast<char>(high * 16);
      s.length = pos_ - 1 - s.offset;
      return s;
    }
    if (is_pdf_whitespace(c)) continue;
    int v = hex_value(c);
    if (v < 0) fail("bad hex string digit");
    if (high < 0) {
      high = v;
    } else {
      s.bytes += static_cast<char>(high * 16 + v);
      high = -1;
    }
  }
  fail("unterminated hex string");
}

Object Lexer::number_or_ref() {
  std::size_t start = pos_;
  if (auto n = integer()) {
    std::size_t after_first = pos_;
    if (*n >= 0) {
      if (auto gen = integer(); gen && *gen >= 0 && keyword("R")) {
        return Object{Ref{static_cast<int>(*n), static_cast<int>(*gen)}};
      }
    }
    pos_ = after_first;
    return Object{static_cast<double>(*n)};
  }
  pos_ = start;
  std::size_t end = pos_;
  while (end < data_.size() && (data_[end] == '+' || data_[end] == '-' || data_[end] == '.' ||
                                (data_[end] >= '0' && data_[end] <= '9'))) {
    ++end;
  }
  if (end == pos_) fail("expected a number");
  std::string text(data_.substr(pos_, end - pos_));
  pos_ = end;
  return Object{std::strtod(text.c_str(), nullptr)};
}

Object Lexer::object(int depth) {
  if (depth > kMaxDepth) fail("objects nested too deeply");
  skip_ws();
  if (at_end()) fail("unexpected end of data");
  char c = data_[pos_];
  if (c == '/') return Object{name()};
  if (c == '(') return Object{literal_string()};
  if (c == '<') {
    if (pos_ + 1 < data_.size() && data_[pos_ + 1] == '<') {
      pos_ += 2;
      Dict dict;
      while (true) {
        skip_ws();
        if (at_end()) fail("unterminated dictionary");
        if (data_.substr(pos_, 2) == ">>") {
          pos_ += 2;
          return Object{std::move(dict)};
        }
        if (data_[pos_] != '/') fail("dictionary key is not a name");
        std::string key = name().value;
        Object value = object(depth + 1);
        dict.emplace_back(std::move(key), std::move(value));
      }
    }
    return Object{hex_string()};
  }
  if (c == '[') {
    ++pos_;
    Array array;
    while (true) {
      skip_ws();
      if (at_end()) fail("unterminated array");
      if (data_[pos_] == ']') {
        ++pos_;
        return Object{std::move(array)};
      }
      array.push_back(object(depth + 1));
    }
  }
  if (c == '+' || c == '-' || c == '.' || (c >= '0' && c <= '9')) return number_or_ref();
  if (keyword("true")) return Object{true};
  if (keyword("false")) return Object{false};
  if (keyword("null")) return Object{};
  fail("unexpected token");
}

std::pair<Ref, Object> Lexer::indirect_object() {
  auto num = integer();
  auto gen = integer();
  if (!num || !gen || *num < 0 || *gen < 0 || !keyword("obj")) fail("expected 'N G obj'");
  Object obj = object();
  return {Ref{static_cast<int>(*num), static_cast<int>(*gen)}, std::move(obj)};
}

}  // namespace ums::pdf
