#include "xmp_scan.hpp"

#include "ums/text.hpp"
#include "ums/timestamp.hpp"

#include <map>

namespace ums {

namespace {

struct Element {
  std::string prefix;
  std::string local;
  bool had_child = false;
  std::string text;
};

bool structural_prefix(std::string_view prefix) {
  return prefix == "rdf" || prefix == "x" || prefix == "xmlns" || prefix == "xml" ||
         prefix.empty();
}

std::string capitalize(std::string_view s) {
  std::string out(s);
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') out[0] = static_cast<char>(out[0] - 'a' + 'A');
  return out;
}

std::pair<std::string, std::string> split_qname(std::string_view qname) {
  auto colon = qname.find(':');
  if (colon == std::string_view::npos) return {"", std::string(qname)};
  return {std::string(qname.substr(0, colon)), std::string(qname.substr(colon + 1))};
}

std::string display_value(std::string_view raw) {
  std::string_view v = trim(raw);
  if (v.size() >= 10 && v[4] == '-' && v[7] == '-') {
    if (auto fields = parse_datetime_fields(v)) return exif_style(*fields);
  }
  return std::string(v);
}

class Collector {
 public:
  void add(const std::vector<Element>& stack, std::string_view leaf, std::string_view value,
           bool leaf_is_element) {
    std::string key;
    bool in_container = false;
    std::size_t n = leaf_is_element ? stack.size() - 1 : stack.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& e = stack[i];
      if (e.prefix == "rdf" && (e.local == "Seq" || e.local == "Bag" || e.local == "Alt")) {
        in_container = true;
      }
      if (!structural_prefix(e.prefix)) key += capitalize(e.local);
    }
    key += capitalize(leaf);
    std::string text = display_value(value);
    if (text.empty()) return;
    if (in_container) {
      auto it = aggregate_index_.find(key);
      if (it != aggregate_index_.end()) {
        out_[it->second].second += ", " + text;
        return;
      }
      aggregate_index_[key] = out_.size();
    }
    out_.emplace_back(std::move(key), std::move(text));
  }

  std::vector<std::pair<std::string, std::string>> take() { return std::move(out_); }

 private:
  std::vector<std::pair<std::string, std::string>> out_;
  std::map<std::string, std::size_t> aggregate_index_;
};

// Parses `name="v" name2='v'` attribute lists.
std::vector<std::pair<std::string, std::string>> attributes(std::string_view body) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t i = 0;
  auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < body.size()) {
    while (i < body.size() && ws(body[i])) ++i;
    std::size_t start = i;
    while (i < body.size() && !ws(body[i]) && body[i] != '=') ++i;
    std::string name(body.substr(start, i - start));
    while (i < body.size() && ws(body[i])) ++i;
    if (i >= body.size() || body[i] != '=') {
      if (i == start) ++i;
      continue;
    }
    ++i;
    while (i < body.size() && ws(body[i])) ++i;
    if (i >= body.size()) break;
    char quote = body[i];
    if (quote != '"' && quote != '\'') continue;
    auto end = body.find(quote, i + 1);
    if (end == std::string_view::npos) break;
    out.emplace_back(std::move(name), std::string(body.substr(i + 1, end - i - 1)));
    i = end + 1;
  }
  return out;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> scan_xmp(std::string_view bytes) {
  auto begin = bytes.find("<?xpacket begin");
  if (begin == std::string_view::npos) return {};
  auto end = bytes.find("<?xpacket end", begin);
  if (end == std::string_view::npos) return {};
  std::string_view packet = bytes.substr(begin, end - begin);

  Collector collector;
  std::vector<Element> stack;
  std::size_t pos = 0;
  while (pos < packet.size()) {
    auto lt = packet.find('<', pos);
    if (lt == std::string_view::npos) break;
    if (!stack.empty()) stack.back().text.append(packet.substr(pos, lt - pos));
    if (packet.substr(lt, 4) == "<!--") {
      auto close = packet.find("-->", lt);
      pos = close == std::string_view::npos ? packet.size() : close + 3;
      continue;
    }
    auto gt = packet.find('>', lt);
    if (gt == std::string_view::npos) break;
    std::string_view tag = packet.substr(lt + 1, gt - lt - 1);
    pos = gt + 1;
    if (tag.empty() || tag[0] == '?' || tag[0] == '!') continue;

    if (tag[0] == '/') {
      if (stack.empty()) continue;
      Element done = std::move(stack.back());
      if (!done.had_child && !structural_prefix(done.prefix)) {
        stack.back() = done;
        collector.add(stack, done.local, done.text, true);
      } else if (!done.had_child && done.prefix == "rdf" && done.local == "li") {
        // rdf:li text belongs to the enclosing property
        collector.add(stack, "", done.text, true);
      }
      stack.pop_back();
      continue;
    }

    bool self_closing = tag.back() == '/';
    if (self_closing) tag.remove_suffix(1);
    auto name_end = tag.find_first_of(" \t\r\n");
    std::string_view qname = tag.substr(0, name_end);
    auto [prefix, local] = split_qname(qname);
    if (!stack.empty()) stack.back().had_child = true;
    stack.push_back(Element{prefix, local, false, {}});
    if (name_end != std::string_view::npos) {
      for (const auto& [attr, value] : attributes(tag.substr(name_end))) {
        auto [aprefix, alocal] = split_qname(attr);
        if (structural_prefix(aprefix)) continue;
        collector.add(stack, alocal, value, false);
      }
    }
    if (self_closing) stack.pop_back();
  }
  return collector.take();
}

}  // namespace ums
