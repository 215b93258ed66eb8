#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ums {

/// Unicode NFC normalization of a UTF-8 string. Pure ASCII input is returned unchanged.
std::string nfc(std::string_view utf8);

bool is_valid_utf8(std::string_view bytes);
bool is_ascii(std::string_view bytes);

/// Escapes `\`, LF and `|` as `\\`, `\n`, `\|`.
std::string escape_value(std::string_view raw);

/// Inverse of escape_value. Returns false on a dangling or unknown escape.
bool unescape_value(std::string_view escaped, std::string& out);

/// Splits on `|` characters that are not escaped. Fields stay escaped.
std::vector<std::string_view> split_unescaped(std::string_view escaped, char sep = '|');

std::string ascii_lower(std::string_view s);
std::string ascii_upper(std::string_view s);
bool iequals(std::string_view a, std::string_view b);
bool icontains(std::string_view haystack, std::string_view needle);
std::size_t ifind(std::string_view haystack, std::string_view needle, std::size_t from = 0);
std::string_view trim(std::string_view s);
bool all_digits(std::string_view s);

/// First Unicode code point of a UTF-8 string, as UTF-8 bytes.
std::string first_code_point(std::string_view utf8);

/// Encodes one code point as UTF-8.
void append_utf8(std::string& out, char32_t cp);

}  // namespace ums
