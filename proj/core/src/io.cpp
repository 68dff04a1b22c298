#include "maxdeg/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace maxdeg {

namespace {

bool parse_int(std::string_view token, int& out) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        std::size_t first = line.find_first_not_of(" \t");
        if (first != std::string_view::npos && line[first] != '#') lines.push_back(line);
        start = end + 1;
    }
    if (lines.empty())
        throw parse_error(ParseErrorKind::bad_header, "missing \"n m\" header line");

    auto header = split_ws(lines[0]);
    int n = 0, m = 0;
    if (header.size() != 2 || !parse_int(header[0], n) || !parse_int(header[1], m) ||
        n < 0 || m < 0)
        throw parse_error(ParseErrorKind::bad_header, "header must be \"n m\"");

    if (static_cast<long long>(lines.size()) - 1 != m)
        throw parse_error(ParseErrorKind::edge_count_mismatch,
                          "expected " + std::to_string(m) + " edge lines, got " +
                              std::to_string(lines.size() - 1));

    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto tok = split_ws(lines[i]);
        int u = 0, v = 0;
        if (tok.size() != 2 || !parse_int(tok[0], u) || !parse_int(tok[1], v))
            throw parse_error(ParseErrorKind::bad_token,
                              "edge line " + std::to_string(i) + " must be \"u v\"");
        if (u == v)
            throw parse_error(ParseErrorKind::self_loop,
                              "self-loop at vertex " + std::to_string(u));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error(ParseErrorKind::vertex_out_of_range,
                              "edge endpoint outside 0.." + std::to_string(n - 1));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw parse_error(ParseErrorKind::duplicate_edge,
                              "duplicate edge " + std::to_string(key.first) + " " +
                                  std::to_string(key.second));
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

constexpr int kGraph6SmallMax = 62;
constexpr long long kGraph6LargeMax = 258047;   // 18-bit size field

void require_data_byte(char c) {
    unsigned char b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
        throw parse_error(ParseErrorKind::bad_byte,
                          "graph6 byte outside 63..126: " + std::to_string(b));
}

} // namespace

Graph parse_graph6(std::string_view bytes) {
    constexpr std::string_view header = ">>graph6<<";
    if (bytes.substr(0, header.size()) == header) bytes.remove_prefix(header.size());
    while (!bytes.empty() && (bytes.back() == '\n' || bytes.back() == '\r'))
        bytes.remove_suffix(1);
    if (bytes.empty())
        throw parse_error(ParseErrorKind::bad_length, "empty graph6 input");

    long long n = 0;
    std::size_t pos = 0;
    require_data_byte(bytes[0]);
    if (bytes[0] != 126) {
        n = static_cast<unsigned char>(bytes[0]) - 63;
        pos = 1;
    } else {
        if (bytes.size() < 4)
            throw parse_error(ParseErrorKind::bad_length, "truncated graph6 size field");
        if (bytes[1] == 126)
            throw parse_error(ParseErrorKind::bad_length,
                              "graph6 inputs with 2^18 or more vertices are not supported");
        for (std::size_t i = 1; i < 4; ++i) {
            require_data_byte(bytes[i]);
            n = (n << 6) | (static_cast<unsigned char>(bytes[i]) - 63);
        }
        pos = 4;
    }

    const long long bit_count = n * (n - 1) / 2;
    const std::size_t data_bytes = static_cast<std::size_t>((bit_count + 5) / 6);
    if (bytes.size() - pos != data_bytes)
        throw parse_error(ParseErrorKind::bad_length,
                          "graph6 data length " + std::to_string(bytes.size() - pos) +
                              ", expected " + std::to_string(data_bytes));

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            char c = bytes[pos + static_cast<std::size_t>(bit / 6)];
            require_data_byte(c);
            int sextet = static_cast<unsigned char>(c) - 63;
            if ((sextet >> (5 - bit % 6)) & 1) edges.emplace_back(row, col);
        }
    }
    // padding bits beyond bit_count are ignored
    return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    if (n > kGraph6LargeMax)
        throw std::invalid_argument("graph too large for the supported graph6 size fields");
    std::string out;
    if (n <= kGraph6SmallMax) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    const long long bit_count = n * (n - 1) / 2;
    int sextet = 0;
    long long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            sextet = (sextet << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (bit % 6 == 5) {
                out.push_back(static_cast<char>(sextet + 63));
                sextet = 0;
            }
        }
    }
    if (bit_count % 6 != 0)
        out.push_back(static_cast<char>((sextet << (6 - bit_count % 6)) + 63));
    return out;
}

} // namespace maxdeg
