#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "anchorrec/graph.hpp"

namespace anchorrec {

/// graph6 encoding: order header, then the upper triangle column by column
/// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed 6 bits per byte, each byte offset by 63.
std::string graph6_encode(const Graph& g);

/// Parses one graph6 string. An optional ">>graph6<<" prefix and a single
/// trailing newline are accepted. Throws ParseError with the offending byte offset.
Graph graph6_decode(std::string_view text);

/// Reads one graph per non-empty line.
std::vector<Graph> read_graph6(std::istream& in);

}  // namespace anchorrec
