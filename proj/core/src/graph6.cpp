#include "anchorrec/graph6.hpp"

#include <istream>

#include "anchorrec/errors.hpp"

namespace anchorrec {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kPrefix = ">>graph6<<";

void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63U) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63U) + kBias));
  }
}

int sextet(std::string_view text, std::size_t pos, std::size_t base) {
  if (pos >= text.size()) throw ParseError("graph6: truncated input", base + pos);
  int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > 126) throw ParseError("graph6: byte outside 63..126", base + pos);
  return c - kBias;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  std::string out;
  const int n = g.order();
  append_size(out, static_cast<std::uint64_t>(n));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph graph6_decode(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kPrefix)) {
    text.remove_prefix(kPrefix.size());
    base = kPrefix.size();
  }
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input", base);

  std::size_t pos = 0;
  std::uint64_t n = 0;
  int first = sextet(text, pos++, base);
  if (first < 63) {
    n = static_cast<std::uint64_t>(first);
  } else {
    int second = sextet(text, pos, base);
    int chunks = 3;
    if (second == 63) {
      ++pos;
      chunks = 6;
    }
    for (int k = 0; k < chunks; ++k) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos++, base));
  }
  if (n > (1U << 20)) throw ParseError("graph6: order too large", base);

  const auto order = static_cast<int>(n);
  const std::uint64_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  for (std::size_t at = pos; at < std::min(text.size(), pos + body); ++at) sextet(text, at, base);
  if (text.size() < pos + body) throw ParseError("graph6: truncated body", base + text.size());
  if (text.size() > pos + body) throw ParseError("graph6: trailing bytes", base + pos + body);

  GraphBuilder b(order);
  std::uint64_t k = 0;
  for (Vertex j = 1; j < order; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      std::size_t at = pos + static_cast<std::size_t>(k / 6);
      int value = sextet(text, at, base);
      if ((value >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(graph6_decode(line));
  }
  return out;
}

}  // namespace anchorrec
