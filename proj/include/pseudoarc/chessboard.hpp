#pragma once

// Two-colored chessboards, boundary arcs, monochromatic 4- and 8-paths, the
// Steinhaus duality as a checkable property, and the chessboard amalgamation
// of linear graphs.

#include "pseudoarc/core.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pseudoarc {

enum class Color : std::uint8_t { white, black };
enum class Adjacency { four, eight };

std::string to_string(Color c);
std::string to_string(Adjacency a);

/// A cell addressed by vertex labels of the row and column axes.
struct Cell {
    Vertex row;
    Vertex col;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& c);

/// Rows and columns are linear graphs, so signed axes make -1 and 1
/// neighbours. Screen convention: the first row is on top, the first column
/// on the left.
class Board {
public:
    Board(LinearGraph rows, LinearGraph cols, Color fill = Color::white);

    const LinearGraph& rows() const { return rows_; }
    const LinearGraph& cols() const { return cols_; }
    int row_count() const { return rows_.size(); }
    int col_count() const { return cols_.size(); }

    bool contains(const Cell& c) const { return rows_.contains(c.row) && cols_.contains(c.col); }
    Color color(const Cell& c) const;
    void set(const Cell& c, Color color);
    bool is_black(const Cell& c) const { return color(c) == Color::black; }

    std::vector<Cell> cells() const;
    bool adjacent(const Cell& a, const Cell& b, Adjacency mode) const;
    /// Neighbours in the fixed order N, NE, E, SE, S, SW, W, NW (four-mode
    /// keeps N, E, S, W).
    std::vector<Cell> neighbors(const Cell& c, Adjacency mode) const;

    Cell cell_at(int row_pos, int col_pos) const { return {rows_.vertex_at(row_pos), cols_.vertex_at(col_pos)}; }

    friend bool operator==(const Board&, const Board&) = default;

private:
    std::size_t index(const Cell& c) const;

    LinearGraph rows_;
    LinearGraph cols_;
    std::vector<Color> colors_;
};

struct CellPath {
    std::vector<Cell> cells;
    Adjacency mode = Adjacency::eight;
};

/// Consecutive cells distinct and adjacent under the path's mode; with a
/// color given, every cell has that color.
bool is_valid_path(const Board& b, const CellPath& p, std::optional<Color> color = std::nullopt);

struct OrientedQuadruple {
    Cell w, x, y, z;
};

std::vector<Cell> boundary(const Board& b);
/// The boundary as a clockwise cycle starting at the top-left cell: top row
/// left to right, right column downwards, bottom row right to left, left
/// column upwards. Needs at least two rows and two columns.
std::vector<Cell> boundary_cycle(const Board& b);
/// Clockwise boundary arc from x to y inclusive; {x} when x == y.
std::vector<Cell> clockwise_arc(const Board& b, const Cell& x, const Cell& y);

bool is_oriented_quadruple(const Board& b, const OrientedQuadruple& q);
/// Every oriented quadruple of the board, in boundary-cycle order.
std::vector<OrientedQuadruple> oriented_quadruples(const Board& b);

/// Breadth-first search for a path of the given color and mode starting in
/// `from` and ending in `to`.
std::optional<CellPath> exists_path(const Board& b, std::span<const Cell> from, std::span<const Cell> to, Color color,
                                    Adjacency mode);

/// A black 8-path joins the arcs wx and yz exactly when no white 4-path
/// joins xy and zw. Returns whether that equivalence holds here.
bool steinhaus_check(const Board& b, const OrientedQuadruple& q);

/// Cell (i, j) is black iff f1(i) == f2(j). Rows come from f1's domain.
Board product_coloring(const StructureMap& f1, const StructureMap& f2);

struct LinearAmalgam {
    LinearGraph d;
    StructureMap gamma; // d -> domain of alpha
    StructureMap delta; // d -> domain of beta
    CellPath path;
};

/// Amalgamates r-epimorphisms alpha: [l] -> [k], beta: [m] -> [k] along a
/// black 8-path of their product coloring that meets every row and column.
LinearAmalgam solecki_amalgamate(const StructureMap& alpha, const StructureMap& beta);

} // namespace pseudoarc
