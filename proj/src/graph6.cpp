#include "hsp/graph6.hpp"

#include "hsp/error.hpp"

#include <string>

namespace hsp {

namespace {

constexpr int kOffset = 63;
constexpr int kShortMax = 62;
constexpr int kLongMax = 258047; // 2^18 - 1

} // namespace

std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= kShortMax) {
        out.push_back(static_cast<char>(n + kOffset));
    } else {
        // n < 2^16 is enforced at construction, so the 18-bit form suffices
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kOffset));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kOffset));
        out.push_back(static_cast<char>((n & 0x3f) + kOffset));
    }
    int group = 0;
    int bits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(group + kOffset));
                group = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((group << (6 - bits)) + kOffset));
    return out;
}

Graph parse_graph6(std::string_view text) {
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) raise(ErrorKind::FormatError, "empty graph6 string");

    auto decode = [&](std::size_t i) -> int {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < kOffset || c > 126)
            raise(ErrorKind::FormatError,
                  "invalid graph6 byte " + std::to_string(c) + " at position " + std::to_string(i));
        return c - kOffset;
    };

    std::size_t pos = 0;
    long long n = 0;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            raise(ErrorKind::FormatError, "36-bit graph6 sizes are beyond this tool");
        if (text.size() < 4) raise(ErrorKind::FormatError, "truncated graph6 size field");
        n = (static_cast<long long>(decode(1)) << 12) | (decode(2) << 6) | decode(3);
        if (n <= kShortMax || n > kLongMax)
            raise(ErrorKind::FormatError, "non-canonical graph6 size field");
        pos = 4;
    } else {
        n = decode(0);
        pos = 1;
    }
    if (n >= (1 << 16))
        raise(ErrorKind::TooLarge, "graphs with 2^16 or more vertices are not supported");

    const long long npairs = n * (n - 1) / 2;
    const std::size_t needed = static_cast<std::size_t>((npairs + 5) / 6);
    if (text.size() - pos < needed) raise(ErrorKind::FormatError, "truncated graph6 bit stream");
    if (text.size() - pos > needed) raise(ErrorKind::FormatError, "trailing bytes after graph6 data");

    GraphBuilder b(static_cast<int>(n));
    long long bit = 0;
    int group = 0;
    int remaining = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            if (remaining == 0) {
                group = decode(pos++);
                remaining = 6;
            }
            if (group & (1 << (remaining - 1))) b.add_edge(u, v);
            --remaining;
        }
    }
    return std::move(b).build();
}

} // namespace hsp
