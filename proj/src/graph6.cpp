#include "twodom/graph6.hpp"

#include <cstdint>

#include "twodom/errors.hpp"

namespace twodom {

namespace {

constexpr int kMaxOrder = 258047;  // largest order of the 4-byte header form

void append_sextets(std::string& out, std::uint64_t value, int count) {
    for (int i = count - 1; i >= 0; --i)
        out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + 63));
}

}  // namespace

std::string graph6_encode(const Tree& t) {
    int n = t.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        append_sextets(out, static_cast<std::uint64_t>(n), 3);
    }
    int bit = 0;
    int acc = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (t.adjacent(row, col) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bit = 0;
                acc = 0;
            }
        }
    }
    if (bit > 0) out.push_back(static_cast<char>((acc << (6 - bit)) + 63));
    return out;
}

Tree graph6_decode(const std::string& text) {
    for (char c : text)
        if (c < 63 || c > 126) throw MalformedGraph6("character out of range");
    std::size_t pos = 0;
    long long n = 0;
    if (text.empty()) throw MalformedGraph6("empty");
    if (text[0] != 126) {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == 126) throw MalformedGraph6("order too large");
        if (text.size() < 4) throw MalformedGraph6("truncated order");
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - 63);
        pos = 4;
    }
    if (n < 1 || n > kMaxOrder) throw MalformedGraph6("bad order");
    long long bits = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != need) throw MalformedGraph6("wrong body length");
    std::vector<std::pair<int, int>> edges;
    long long index = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++index) {
            int byte = text[pos + index / 6] - 63;
            if ((byte >> (5 - index % 6)) & 1) edges.emplace_back(row, col);
        }
    }
    // Padding bits must be zero.
    for (long long i = bits; i < static_cast<long long>(need) * 6; ++i) {
        int byte = text[pos + i / 6] - 63;
        if ((byte >> (5 - i % 6)) & 1) throw MalformedGraph6("nonzero padding");
    }
    return Tree::from_edges(static_cast<int>(n), edges);
}

}  // namespace twodom
