#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace tg {

// graph6: printable 6-bit encoding of the upper adjacency triangle, one graph
// per line. Both the short (n <= 62) and the 3-byte (n <= 258047) order
// headers are supported. Parsing is strict: wrong length, bytes outside
// [63,126] and nonzero padding bits are ParseErrors with a byte offset.
Graph parseGraph6(std::string_view line);
std::string toGraph6(const Graph& g);

// Plain text: first line "n m", then m lines "u v" (0-based).
Graph parseEdgeListText(std::string_view text);
std::string toEdgeListText(const Graph& g);

// Sniffs the format: a leading digit means edge-list text (digits are not
// legal graph6 bytes), anything else is treated as a graph6 line.
Graph parseGraphText(std::string_view text);

// Reads graph6 lines from a stream, skipping blanks and a ">>graph6<<" header.
class Graph6Reader {
public:
    explicit Graph6Reader(std::istream& in) : in_(in) {}
    // Returns false at end of stream.
    bool next(Graph& out, std::string* rawLine = nullptr);

private:
    std::istream& in_;
};

}  // namespace tg
