#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <iterator>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "anchorrec/canonical.hpp"
#include "anchorrec/errors.hpp"
#include "anchorrec/graph6.hpp"

// Shared reader for the "<header>\n<graph6> <multiplicity>\n..." text formats.
namespace anchorrec::detail {

struct TextLine {
  std::string_view text;
  std::size_t offset;
};

inline std::vector<TextLine> split_lines(std::string_view all) {
  std::vector<TextLine> lines;
  std::size_t start = 0;
  while (start < all.size()) {
    auto end = all.find('\n', start);
    if (end == std::string_view::npos) end = all.size();
    auto line = all.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back({line, start});
    start = end + 1;
  }
  return lines;
}

inline std::uint64_t parse_uint(std::string_view text, std::size_t offset, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError(std::string("expected unsigned integer for ") + what, offset);
  return value;
}

// "tag k1=v1 k2=v2 ..." -> map of key/value with value offsets.
struct Header {
  std::map<std::string, std::pair<std::string, std::size_t>, std::less<>> fields;

  const std::pair<std::string, std::size_t>& at(std::string_view key, std::size_t line_offset) const {
    auto it = fields.find(key);
    if (it == fields.end()) throw ParseError("header is missing field '" + std::string(key) + "'", line_offset);
    return it->second;
  }
};

inline Header parse_header(const TextLine& line, std::string_view tag) {
  Header h;
  std::string_view text = line.text;
  if (!text.starts_with(tag) || (text.size() > tag.size() && text[tag.size()] != ' '))
    throw ParseError("expected header starting with '" + std::string(tag) + "'", line.offset);
  std::size_t pos = tag.size();
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    auto end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(pos, end - pos);
    auto eq = token.find('=');
    if (eq == std::string_view::npos || eq == 0) throw ParseError("malformed header field", line.offset + pos);
    h.fields[std::string(token.substr(0, eq))] = {std::string(token.substr(eq + 1)), line.offset + pos + eq + 1};
    pos = end;
  }
  return h;
}

inline void read_entries(const std::vector<TextLine>& lines, std::size_t first,
                         std::map<CanonicalKey, std::uint64_t>& out) {
  for (std::size_t i = first; i < lines.size(); ++i) {
    const auto& line = lines[i];
    auto space = line.text.find(' ');
    if (space == std::string_view::npos) throw ParseError("expected '<graph6> <multiplicity>'", line.offset);
    Graph g;
    try {
      g = graph6_decode(line.text.substr(0, space));
    } catch (const ParseError& e) {
      throw ParseError("bad graph6 entry", line.offset + e.offset());
    }
    auto mult = parse_uint(line.text.substr(space + 1), line.offset + space + 1, "multiplicity");
    out[canonical_key(g)] += mult;
  }
}

inline std::string slurp(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace anchorrec::detail
