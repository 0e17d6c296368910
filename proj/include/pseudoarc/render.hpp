#pragma once

// Text and SVG pictures of product colorings and block graphs. The first
// coordinate runs left to right, the second bottom to top.

#include "pseudoarc/cap.hpp"
#include "pseudoarc/chessboard.hpp"

#include <string>

namespace pseudoarc {

/// '#' black, '.' white, one text line per column vertex (largest first),
/// preceded by a header naming both graphs. Round-trips through
/// parse_board_ascii.
std::string board_ascii(const Board& b);
/// Throws ParseError on malformed input.
Board parse_board_ascii(const std::string& text);

std::string board_svg(const Board& b);

/// Nodes 'o', edges '-' and '|'.
std::string graph_ascii(const AmalgGraph& g);
std::string graph_svg(const AmalgGraph& g);

} // namespace pseudoarc
