#include "ums/association.hpp"

#include "ums/text.hpp"

#include <algorithm>
#include <cstdio>
#include <array>
#include <set>

namespace ums {

namespace {

constexpr std::array<std::pair<GroupCriterion, std::string_view>, 6> kCriteria{{
    {GroupCriterion::alphabet, "alphabet"},
    {GroupCriterion::date, "date"},
    {GroupCriterion::theme, "theme"},
    {GroupCriterion::project, "project"},
    {GroupCriterion::format, "format"},
    {GroupCriterion::location, "location"},
}};

template <typename List>
std::string first_or(const List& list, std::string_view fallback) {
  return list.empty() ? std::string(fallback) : list.front();
}

}  // namespace

std::string_view to_string(GroupCriterion criterion) {
  for (const auto& [c, name] : kCriteria) {
    if (c == criterion) return name;
  }
  return "alphabet";
}

std::optional<GroupCriterion> parse_group_criterion(std::string_view text) {
  for (const auto& [c, name] : kCriteria) {
    if (name == text) return c;
  }
  return std::nullopt;
}

std::string group_key(const UmsRecord& r, GroupCriterion criterion) {
  switch (criterion) {
    case GroupCriterion::alphabet:
      return first_code_point(nfc(r.name));
    case GroupCriterion::date: {
      if (!r.date) return std::string(kUndated);
      char buf[8];
      std::snprintf(buf, sizeof buf, "%04d", r.date->year());
      return buf;
    }
    case GroupCriterion::theme:
      return first_or(r.tags, kUntagged);
    case GroupCriterion::project:
      for (const auto& t : r.tags) {
        if (t.size() > kProjectPrefix.size() && t.compare(0, kProjectPrefix.size(), kProjectPrefix) == 0) {
          return t.substr(kProjectPrefix.size());
        }
      }
      return std::string(kNoProject);
    case GroupCriterion::format:
      return first_or(r.formats, kNoFormat);
    case GroupCriterion::location:
      return first_or(r.locations, kNoLocation);
  }
  return {};
}

std::vector<Group> group_by(const std::vector<UmsRecord>& records, GroupCriterion criterion) {
  std::map<std::string, std::vector<std::string>> buckets;
  for (const auto& r : records) buckets[group_key(r, criterion)].push_back(r.name);
  std::vector<Group> out;
  out.reserve(buckets.size());
  for (auto& [key, members] : buckets) {
    std::sort(members.begin(), members.end());
    out.push_back(Group{key, std::move(members)});
  }
  return out;
}

AssociationError::AssociationError(Code code, std::string detail)
    : Error(std::string(code == Code::duplicate_record ? "DuplicateRecord" : "UnknownRecord") +
            ": " + detail),
      code_(code) {}

CorpusIndex::CorpusIndex(std::vector<UmsRecord> records) : records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& r = records_[i];
    if (!by_name_.emplace(r.name, i).second) {
      throw AssociationError(AssociationError::Code::duplicate_record, r.name);
    }
    for (const auto& t : r.tags) tags_[t].push_back(r.name);
    for (const auto& l : r.locations) locations_[l].push_back(r.name);
  }
  for (auto* postings : {&tags_, &locations_}) {
    for (auto& [key, names] : *postings) {
      std::sort(names.begin(), names.end());
      names.erase(std::unique(names.begin(), names.end()), names.end());
    }
  }
}

const UmsRecord* CorpusIndex::find(std::string_view name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &records_[it->second];
}

std::vector<Relation> related(const CorpusIndex& index, std::string_view name) {
  const UmsRecord* self = index.find(name);
  if (!self) throw AssociationError(AssociationError::Code::unknown_record, std::string(name));
  const std::set<std::string> mine(self->tags.begin(), self->tags.end());

  std::set<std::string> candidates;
  for (const auto& t : mine) {
    auto it = index.tag_index().find(t);
    if (it == index.tag_index().end()) continue;
    candidates.insert(it->second.begin(), it->second.end());
  }
  candidates.erase(self->name);

  std::vector<Relation> out;
  for (const auto& other_name : candidates) {
    const UmsRecord* other = index.find(other_name);
    const std::set<std::string> theirs(other->tags.begin(), other->tags.end());
    std::size_t shared = 0;
    for (const auto& t : theirs) shared += mine.count(t);
    std::size_t all = mine.size() + theirs.size() - shared;
    out.push_back(Relation{other_name, static_cast<double>(shared) / static_cast<double>(all)});
  }
  std::sort(out.begin(), out.end(), [](const Relation& a, const Relation& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.name < b.name;
  });
  return out;
}

}  // namespace ums
