#pragma once

// Random inputs for property tests. Every generator is driven by the caller's engine so a failing
// seed can be replayed.

#include "ums/record.hpp"

#include <random>
#include <string>
#include <vector>

namespace testkit {

using Rng = std::mt19937_64;

// Non-empty NFC text mixing ASCII, separators that need escaping, Cyrillic, CJK and emoji.
std::string random_text(Rng& rng, std::size_t max_len = 12);
ums::Timestamp random_timestamp(Rng& rng);
ums::UmsRecord random_record(Rng& rng);

struct RandomEvent {
  ums::EventKind kind;
  std::string payload;
  ums::Timestamp timestamp;
};
// Well-formed events; values are drawn from small pools so duplicates happen.
std::vector<RandomEvent> random_events(Rng& rng, std::size_t max_len);

// Record for association tests: name unique within the corpus, tags/formats/locations from
// small pools.
std::vector<ums::UmsRecord> random_corpus(Rng& rng, std::size_t max_records);

}  // namespace testkit
