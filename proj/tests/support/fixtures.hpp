#pragma once

#include <string>
#include <utility>
#include <vector>

namespace testkit {

// The octology document: Pages-made, Quartz-produced, 76 pages, identical creation and
// modification times, header version 1.4 and catalog version 1.3.
std::string octology_pdf();

// An InDesign export carrying an XMP packet with a 57-step edit history.
std::string indesign_pdf();
inline constexpr int kIndesignHistoryLength = 57;

// One page, empty Info dictionary.
std::string minimal_pdf();

// The PubMed abstract page for PMID 21383996.
std::string pubmed_html();

// Expected octology pairs in extraction order.
std::vector<std::pair<std::string, std::string>> octology_expected_pairs(std::size_t file_size);

}  // namespace testkit
