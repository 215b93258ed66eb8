#pragma once

// Deliberately naive reference implementations. They share no code with the library beyond
// Unicode normalization.

#include "ums/record.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Strips '-' and ' ', then tries every possible check character and accepts the candidate
// only if its last character is the one that works.
bool isbn_valid(const std::string& candidate);

// criterion is one of alphabet, date, theme, project, format, location.
std::map<std::string, std::vector<std::string>> partition(const std::vector<ums::UmsRecord>& records,
                                                          const std::string& criterion);

// Every other record sharing a tag, scored by |A∩B| / |A∪B|, sorted best first then by name.
std::vector<std::pair<std::string, double>> related(const std::vector<ums::UmsRecord>& records,
                                                    const std::string& name);

}  // namespace oracle
