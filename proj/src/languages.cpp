#include "ums/languages.hpp"

#include "ums/text.hpp"

#include <algorithm>
#include <array>
#include <string_view>

namespace ums {

namespace {

// ISO 639-1, sorted.
constexpr std::array<std::string_view, 183> kIso6391{
    "aa", "ab", "ae", "af", "ak", "am", "an", "ar", "as", "av", "ay", "az", "ba", "be", "bg",
    "bi", "bm", "bn", "bo", "br", "bs", "ca", "ce", "ch", "co", "cr", "cs", "cu", "cv", "cy",
    "da", "de", "dv", "dz", "ee", "el", "en", "eo", "es", "et", "eu", "fa", "ff", "fi", "fj",
    "fo", "fr", "fy", "ga", "gd", "gl", "gn", "gu", "gv", "ha", "he", "hi", "ho", "hr", "ht",
    "hu", "hy", "hz", "ia", "id", "ie", "ig", "ii", "ik", "io", "is", "it", "iu", "ja", "jv",
    "ka", "kg", "ki", "kj", "kk", "kl", "km", "kn", "ko", "kr", "ks", "ku", "kv", "kw", "ky",
    "la", "lb", "lg", "li", "ln", "lo", "lt", "lu", "lv", "mg", "mh", "mi", "mk", "ml", "mn",
    "mr", "ms", "mt", "my", "na", "nb", "nd", "ne", "ng", "nl", "nn", "no", "nr", "nv", "ny",
    "oc", "oj", "om", "or", "os", "pa", "pi", "pl", "ps", "pt", "qu", "rm", "rn", "ro", "ru",
    "rw", "sa", "sc", "sd", "se", "sg", "si", "sk", "sl", "sm", "sn", "so", "sq", "sr", "ss",
    "st", "su", "sv", "sw", "ta", "te", "tg", "th", "ti", "tk", "tl", "tn", "to", "tr", "ts",
    "tt", "tw", "ty", "ug", "uk", "ur", "uz", "ve", "vi", "vo", "wa", "wo", "xh", "yi", "yo",
    "za", "zh", "zu"};

// ISO 639-2 (bibliographic and terminologic forms) for widely catalogued languages, sorted.
constexpr std::array<std::string_view, 96> kIso6392{
    "afr", "alb", "amh", "ara", "arm", "aze", "baq", "bel", "ben", "bos", "bre", "bul", "bur",
    "cat", "ces", "chi", "cym", "cze", "dan", "deu", "dut", "ell", "eng", "epo", "est", "eus",
    "fas", "fin", "fra", "fre", "geo", "ger", "gla", "gle", "glg", "grc", "gre", "guj", "heb",
    "hin", "hrv", "hun", "hye", "ice", "ind", "isl", "ita", "jpn", "kat", "kaz", "khm", "kir",
    "kor", "kur", "lao", "lat", "lav", "lit", "ltz", "mac", "mal", "mar", "may", "mkd", "mon",
    "msa", "mya", "nep", "nld", "nno", "nob", "nor", "pan", "per", "pol", "por", "pus", "ron",
    "rum", "rus", "san", "slk", "slo", "slv", "spa", "sqi", "srp", "swa", "swe", "tam", "tel",
    "tgk", "tha", "tur", "ukr", "urd"};

constexpr std::array<std::string_view, 40> kProgramming{
    "asm", "bash", "basic", "c", "c#", "c++", "clojure", "cobol", "cpp", "csharp", "css",
    "dart", "elixir", "erlang", "fortran", "go", "golang", "haskell", "html", "java",
    "javascript", "js", "julia", "kotlin", "lisp", "lua", "matlab", "ocaml", "pascal", "perl",
    "php", "prolog", "python", "ruby", "rust", "scala", "sql", "swift", "ts", "typescript"};

template <std::size_t N>
bool contains_sorted(const std::array<std::string_view, N>& table, std::string_view key) {
  return std::binary_search(table.begin(), table.end(), key);
}

}  // namespace

bool is_language_code(std::string_view code) {
  if (code.size() == 2) return contains_sorted(kIso6391, code);
  if (code.size() == 3) return contains_sorted(kIso6392, code);
  return false;
}

bool is_programming_language(std::string_view code) {
  auto lower = ascii_lower(code);
  return std::find(kProgramming.begin(), kProgramming.end(), lower) != kProgramming.end();
}

}  // namespace ums
