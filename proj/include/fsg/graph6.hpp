// graph6.hpp — McKay's graph6 encoding, short form (one order byte), strict.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace fsg {

struct Graph6Error : std::runtime_error {
    Graph6Error(const std::string& what, std::size_t byte_offset)
        : std::runtime_error("graph6: " + what + " (byte " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
    std::size_t offset;
};

// Accepts the optional ">>graph6<<" prefix. Orders above kMaxOrder are
// rejected, as are sparse6/digraph6 inputs and non-zero padding bits.
inline Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
    if (pos >= text.size()) throw Graph6Error("empty input", pos);

    const unsigned char first = static_cast<unsigned char>(text[pos]);
    if (first == ':' || first == ';') throw Graph6Error("sparse6 input not supported", pos);
    if (first == '&') throw Graph6Error("digraph6 input not supported", pos);
    if (first == 126) throw Graph6Error("long-form order not supported (order cap " + std::to_string(kMaxOrder) + ")", pos);
    if (first < 63 || first > 126) throw Graph6Error("invalid order byte", pos);
    const int n = first - 63;
    if (n < 1) throw Graph6Error("order 0 graphs are unrepresentable", pos);
    if (n > kMaxOrder) throw Graph6Error("order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxOrder), pos);
    ++pos;

    const int nbits = n * (n - 1) / 2;
    const int nbytes = (nbits + 5) / 6;
    Graph g(n);
    int bit = 0;
    for (int byte = 0; byte < nbytes; ++byte) {
        if (pos >= text.size()) throw Graph6Error("truncated edge data", pos);
        const unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw Graph6Error("invalid edge byte", pos);
        const int chunk = c - 63;
        for (int i = 5; i >= 0; --i, ++bit) {
            const int b = (chunk >> i) & 1;
            if (bit < nbits) {
                if (b) {
                    // colex slot -> pair {u, v}
                    int v = 1;
                    while ((v + 1) * v / 2 <= bit) ++v;
                    const int u = bit - v * (v - 1) / 2;
                    g.add_edge(u, v);
                }
            } else if (b) {
                throw Graph6Error("non-zero padding bit", pos);
            }
        }
        ++pos;
    }
    if (pos != text.size()) throw Graph6Error("trailing bytes after edge data", pos);
    return g;
}

inline std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    const int nbits = n * (n - 1) / 2;
    int chunk = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            chunk = (chunk << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (nbits % 6 != 0) out.push_back(static_cast<char>((chunk << (6 - nbits % 6)) + 63));
    return out;
}

}  // namespace fsg
