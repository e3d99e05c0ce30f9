#pragma once

#include <string>
#include <vector>

#include "fanforge/multigraph.hpp"

namespace fanforge {

struct graph6_error : std::invalid_argument {
    graph6_error(const std::string& what, std::size_t offset_)
        : std::invalid_argument(what), offset(offset_) {}
    std::size_t offset; // byte offset of the offending character
};

// Bit-exact graph6 per McKay's formats.txt. Encoding requires a simple graph;
// decoded vertices are 0..n-1 and edges are numbered in the format's
// column-major bit order.
std::string encode_graph6(const Multigraph& g);
Multigraph decode_graph6(const std::string& line);

// sparse6 (":" prefix). The standard format carries loops and parallel edges,
// so both survive a round trip; encoding follows formats.txt including the
// power-of-two padding rule.
std::string encode_sparse6(const Multigraph& g);
Multigraph decode_sparse6(const std::string& line);

// Dispatch on the line's prefix (">>graph6<<" / ">>sparse6<<" headers are
// accepted and stripped; ":" selects sparse6).
Multigraph decode_graph_line(const std::string& line);

} // namespace fanforge
