#pragma once

#include <string_view>

namespace ums {

/// Built-in ISO 639 subset: every two-letter 639-1 code plus common three-letter 639-2 codes.
bool is_language_code(std::string_view code);

/// Names of programming languages, which are never admissible as a document language.
bool is_programming_language(std::string_view code);

}  // namespace ums
