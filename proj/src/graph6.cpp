#include "chorded/graph6.hpp"

#include <stdexcept>

namespace chorded {

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph6_encode: order too large");
    }
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

Graph graph6_decode(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("graph6_decode: empty input");
    size_t pos = 0;
    auto byte = [&](size_t i) -> int {
        if (i >= text.size()) throw std::invalid_argument("graph6_decode: truncated input");
        int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6_decode: byte out of range");
        return c - 63;
    };
    long long n;
    if (byte(0) != 63) {
        n = byte(0);
        pos = 1;
    } else {
        if (text.size() >= 2 && byte(1) == 63)
            throw std::invalid_argument("graph6_decode: orders beyond 258047 unsupported");
        n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    }
    long long nbits = n * (n - 1) / 2;
    size_t expect = pos + static_cast<size_t>((nbits + 5) / 6);
    if (text.size() != expect)
        throw std::invalid_argument("graph6_decode: wrong length for stated order");
    Graph g(static_cast<int>(n));
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int chunk = byte(pos + static_cast<size_t>(bit / 6));
            if ((chunk >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    // Padding bits must be zero.
    for (long long b = nbits; b < static_cast<long long>((nbits + 5) / 6) * 6; ++b)
        if ((byte(pos + static_cast<size_t>(b / 6)) >> (5 - b % 6)) & 1)
            throw std::invalid_argument("graph6_decode: nonzero padding");
    return g;
}

}  // namespace chorded
