#include "graph6.hpp"

#include <istream>
#include <sstream>

namespace tg {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

std::size_t posOf(std::istream& in) {
    auto p = in.tellg();
    return p < 0 ? 0 : static_cast<std::size_t>(p);
}

int sixBits(std::string_view s, std::size_t pos) {
    if (pos >= s.size()) throw ParseError("truncated graph6 data", s.size());
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < kBias || c > kMaxByte)
        throw ParseError("byte outside graph6 range [63,126]", pos);
    return c - kBias;
}

}  // namespace

Graph parseGraph6(std::string_view line) {
    if (line.empty()) throw ParseError("empty graph6 line", 0);

    std::size_t pos = 0;
    long long n;
    if (static_cast<unsigned char>(line[0]) == 126) {
        if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126)
            throw ParseError("graph6 orders above 258047 are not supported", 1);
        n = 0;
        for (pos = 1; pos <= 3; ++pos) n = (n << 6) | sixBits(line, pos);
    } else {
        n = sixBits(line, 0);
        pos = 1;
    }

    long long bitCount = n * (n - 1) / 2;
    std::size_t expectedBytes = pos + static_cast<std::size_t>((bitCount + 5) / 6);
    if (line.size() < expectedBytes) throw ParseError("truncated adjacency bits", line.size());
    if (line.size() > expectedBytes) throw ParseError("trailing bytes after adjacency bits", expectedBytes);

    Graph g(static_cast<int>(n));
    long long bit = 0;
    int word = 0;
    // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            if (bit % 6 == 0) word = sixBits(line, pos++);
            if (word & (1 << (5 - bit % 6))) g.addEdgeUnchecked(u, v);
        }
    }
    if (bit % 6 != 0 && (word & ((1 << (6 - bit % 6)) - 1)))
        throw ParseError("nonzero padding bits", pos - 1);
    return g;
}

std::string toGraph6(const Graph& g) {
    int n = g.vertexCount();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    } else {
        throw InvalidArgument("graph too large for supported graph6 headers");
    }
    int word = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            word = (word << 1) | (g.hasEdge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(word + kBias));
                word = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + kBias));
    return out;
}

Graph parseEdgeListText(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n, m;
    if (!(in >> n >> m)) throw ParseError("expected header line \"n m\"", 0);
    if (n < 0 || m < 0) throw ParseError("negative counts in header", 0);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw ParseError("expected " + std::to_string(m) + " edge lines, got " +
                                 std::to_string(i),
                             posOf(in));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string leftover;
    if (in >> leftover)
        throw ParseError("unexpected trailing token \"" + leftover + "\"", posOf(in));
    return Graph::fromEdgeList(static_cast<int>(n), edges);
}

std::string toEdgeListText(const Graph& g) {
    std::ostringstream out;
    out << g.vertexCount() << ' ' << g.edgeCount() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parseGraphText(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r'))
        ++i;
    if (i == text.size()) throw ParseError("empty input", 0);
    if (text[i] >= '0' && text[i] <= '9') return parseEdgeListText(text.substr(i));
    std::size_t end = text.find_first_of("\r\n", i);
    return parseGraph6(text.substr(i, end == std::string_view::npos ? end : end - i));
}

bool Graph6Reader::next(Graph& out, std::string* rawLine) {
    std::string line;
    while (std::getline(in_, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (line.empty()) continue;
        out = parseGraph6(line);
        if (rawLine) *rawLine = line;
        return true;
    }
    return false;
}

}  // namespace tg
