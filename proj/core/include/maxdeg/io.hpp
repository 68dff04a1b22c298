#ifndef MAXDEG_IO_HPP
#define MAXDEG_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "maxdeg/graph.hpp"

namespace maxdeg {

enum class ParseErrorKind {
    bad_header,
    bad_token,
    self_loop,
    duplicate_edge,
    vertex_out_of_range,
    edge_count_mismatch,
    bad_length,
    bad_byte,
};

class parse_error : public std::runtime_error {
public:
    parse_error(ParseErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ParseErrorKind kind() const noexcept { return kind_; }

private:
    ParseErrorKind kind_;
};

/// Edge-list text format:
///   - header line "n m"
///   - m lines "u v" with 0-based, whitespace-separated endpoints
///   - lines whose first non-blank character is '#' are ignored
/// Each malformed input maps to a distinct ParseErrorKind.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Standard graph6 byte format: size field N(n) (one byte n+63 for
/// n <= 62, otherwise 126 followed by three sextet bytes for
/// n <= 258047), then the upper-triangle adjacency bits column-major in
/// 6-bit groups, each group + 63. Accepts an optional ">>graph6<<"
/// header and trailing newline.
Graph parse_graph6(std::string_view bytes);
std::string emit_graph6(const Graph& g);

} // namespace maxdeg

#endif // MAXDEG_IO_HPP
