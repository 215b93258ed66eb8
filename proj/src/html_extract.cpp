#include "ums/extract.hpp"

#include "ums/text.hpp"

namespace ums {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'; }

bool name_char(char c) { return !is_space(c) && c != '>' && c != '/' && c != '=' && c != '"' && c != '\''; }

struct Attribute {
  std::string name;  // lowercased
  std::string value;
};

// Reads attributes from just after the tag name up to the closing '>'. Returns the position
// after '>'.
std::size_t read_attributes(std::string_view html, std::size_t pos, std::vector<Attribute>& out) {
  while (pos < html.size()) {
    while (pos < html.size() && (is_space(html[pos]) || html[pos] == '/')) ++pos;
    if (pos >= html.size()) break;
    if (html[pos] == '>') return pos + 1;
    std::size_t start = pos;
    while (pos < html.size() && name_char(html[pos])) ++pos;
    if (pos == start) {
      ++pos;  // stray quote or '='
      continue;
    }
    Attribute attr{ascii_lower(html.substr(start, pos - start)), {}};
    std::size_t look = pos;
    while (look < html.size() && is_space(html[look])) ++look;
    if (look < html.size() && html[look] == '=') {
      pos = look + 1;
      while (pos < html.size() && is_space(html[pos])) ++pos;
      if (pos < html.size() && (html[pos] == '"' || html[pos] == '\'')) {
        char quote = html[pos];
        auto end = html.find(quote, pos + 1);
        if (end == std::string_view::npos) end = html.size();
        attr.value = std::string(html.substr(pos + 1, end - pos - 1));
        pos = end + 1;
      } else {
        std::size_t vstart = pos;
        while (pos < html.size() && !is_space(html[pos]) && html[pos] != '>') ++pos;
        attr.value = std::string(html.substr(vstart, pos - vstart));
      }
    }
    out.push_back(std::move(attr));
  }
  return html.size();
}

const std::string* attribute(const std::vector<Attribute>& attrs, std::string_view name) {
  for (const auto& a : attrs) {
    if (a.name == name) return &a.value;
  }
  return nullptr;
}

}  // namespace

Extraction extract_html_meta(std::string_view html) {
  Extraction out;
  out.raw.carrier = Carrier::html;
  out.raw.byte_size = html.size();
  PairCollector pairs;
  pairs.add("FileSize", std::to_string(html.size()));

  bool have_title = false;
  std::size_t pos = 0;
  while ((pos = html.find('<', pos)) != std::string_view::npos) {
    if (html.substr(pos, 4) == "<!--") {
      auto end = html.find("-->", pos + 4);
      pos = end == std::string_view::npos ? html.size() : end + 3;
      continue;
    }
    std::size_t name_start = pos + 1;
    std::size_t name_end = name_start;
    while (name_end < html.size() && name_char(html[name_end])) ++name_end;
    std::string tag = ascii_lower(html.substr(name_start, name_end - name_start));
    if (tag.empty()) {
      ++pos;
      continue;
    }
    std::vector<Attribute> attrs;
    pos = read_attributes(html, name_end, attrs);

    if (tag == "script" || tag == "style") {
      auto close = ifind(html, "</" + tag, pos);
      pos = close == std::string_view::npos ? html.size() : close;
    } else if (tag == "title" && !have_title) {
      auto close = ifind(html, "</title", pos);
      if (close == std::string_view::npos) close = html.size();
      std::string_view text = trim(html.substr(pos, close - pos));
      if (!text.empty()) pairs.add("Title", std::string(text));
      have_title = true;
      pos = close;
    } else if (tag == "meta") {
      const std::string* name = attribute(attrs, "name");
      const std::string* content = attribute(attrs, "content");
      if (name && content) {
        std::string_view key = trim(*name);
        if (!key.empty()) pairs.add(std::string(key), std::string(trim(*content)));
      }
    }
  }
  out.raw.pairs = pairs.take();
  return out;
}

}  // namespace ums
