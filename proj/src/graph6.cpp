#include "factorkit/graph6.hpp"

namespace factorkit {

namespace {

constexpr int kBias = 63;

std::size_t body_bytes(int n) {
    std::size_t bits = size_t(n) * size_t(n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

Graph decode_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("empty graph6 line", 0);
    unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 < kBias || c0 > 126) throw ParseError("size byte outside printable graph6 range", 0);
    if (c0 == 126) throw ParseError("vertex count above 62 is not supported", 0);
    int n = c0 - kBias;
    std::size_t need = n >= 2 ? body_bytes(n) : 0;
    if (text.size() < 1 + need) throw ParseError("line too short for the encoded vertex count", text.size());
    if (text.size() > 1 + need) throw ParseError("trailing bytes after the adjacency bits", 1 + need);

    Graph g(n);
    std::size_t bits_total = size_t(n) * size_t(n - 1) / 2;
    std::size_t k = 0;  // next bit index in stream order
    int i = 0, j = 1;
    for (std::size_t pos = 1; pos < text.size(); ++pos) {
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < kBias || c > 126) throw ParseError("byte outside printable graph6 range", pos);
        int val = c - kBias;
        for (int b = 5; b >= 0; --b, ++k) {
            int x = (val >> b) & 1;
            if (k < bits_total) {
                if (x) g.add_edge(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            } else if (x) {
                throw ParseError("nonzero padding bits", pos);
            }
        }
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > kMaxVertices) throw CapabilityError("graph6 encoding supports at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(n + kBias));
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
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

}  // namespace factorkit
