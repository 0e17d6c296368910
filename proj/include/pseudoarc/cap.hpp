#pragma once

// Amalgamation over even antidiagonal structures: block decompositions of
// antisymmetric epimorphisms, the block graphs G0/G1/G2, interior paths and
// their lifts to black 8-paths, and the resulting amalgamation witness.
// Also the joint-projection witness and the parity doubling.

#include "pseudoarc/chessboard.hpp"
#include "pseudoarc/core.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pseudoarc {

struct Interval {
    Vertex lo;
    Vertex hi;

    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& r);

/// Maximal sign-constant blocks of an antisymmetric epimorphism
/// phi: signed(l) -> signed(k). Block i (for -p <= i < p) is the interval
/// [s_i, s'_{i+1}]; blocks 0..p-1 tile 1..l and block -i-1 mirrors block i.
class BlockDecomposition {
public:
    int p() const { return p_; }
    const StructureMap& map() const { return map_; }

    /// s_i, defined for -p <= i < p.
    Vertex s(int i) const;
    /// s'_i, defined for -p < i <= p.
    Vertex s_prime(int i) const;

    /// First and last vertex of block i.
    Vertex block_start(int i) const { return block(i).start; }
    Vertex block_end(int i) const { return block(i).end; }
    /// +1 or -1.
    int block_sign(int i) const { return block(i).sign; }
    Interval block_range(int i) const { return block(i).range; }

    /// "s_-3=-8 s'_-2=-5 ... s'_3=8" with the given symbol.
    std::string describe(const std::string& symbol = "s") const;

private:
    friend BlockDecomposition block_decomposition(const StructureMap& phi);

    struct Block {
        Vertex start;
        Vertex end;
        int sign;
        Interval range;
    };

    BlockDecomposition(StructureMap map, int p, std::vector<Block> blocks)
        : map_(std::move(map)), p_(p), blocks_(std::move(blocks)) {}

    const Block& block(int i) const;

    StructureMap map_;
    int p_;
    std::vector<Block> blocks_; // blocks_[i + p]
};

/// Throws std::invalid_argument unless phi is an antisymmetric epimorphism
/// between signed antidiagonal structures.
BlockDecomposition block_decomposition(const StructureMap& phi);
Interval block_range(const BlockDecomposition& dec, int i);

enum class GraphVariant { g0, g1, g2 };
std::string to_string(GraphVariant v);

enum class Side { top, bottom, left, right };
std::string to_string(Side s);

/// Graph on the grid [-p,p] x [-q,q]; a node (i, j) is stored as a Cell with
/// row i and col j. Edges join 4-adjacent nodes only.
class AmalgGraph {
public:
    using Edge = std::pair<Cell, Cell>;

    AmalgGraph(GraphVariant variant, int p, int q, std::vector<Edge> edges);

    GraphVariant variant() const { return variant_; }
    int p() const { return p_; }
    int q() const { return q_; }
    /// Sorted, each edge with first < second.
    const std::vector<Edge>& edges() const { return edges_; }

    bool contains(const Cell& n) const { return std::abs(n.row) <= p_ && std::abs(n.col) <= q_; }
    bool has_edge(const Cell& a, const Cell& b) const;
    std::vector<Cell> neighbors(const Cell& n) const;
    int degree(const Cell& n) const { return static_cast<int>(neighbors(n).size()); }
    bool on_boundary(const Cell& n) const;
    bool on_side(const Cell& n, Side side) const;

private:
    GraphVariant variant_;
    int p_;
    int q_;
    std::vector<Edge> edges_;
};

AmalgGraph build_amalg_graph(const BlockDecomposition& d1, const BlockDecomposition& d2, GraphVariant variant);

/// Interior path from (0,0) to the named side: G1 serves top and bottom, G2
/// left and right. Walks the degree-2 chain from (0,0).
CellPath find_interior_path(const AmalgGraph& g, Side side);

/// Lifts an interior path to a black 8-path of the product coloring running
/// from {-1,1} x {-1,1} to the matching full side of the board.
CellPath lift_interior_path(const Board& board, const CellPath& path, const BlockDecomposition& d1,
                            const BlockDecomposition& d2);
CellPath lift_interior_path(const CellPath& path, const BlockDecomposition& d1, const BlockDecomposition& d2);

/// Whether exactly one of the diagonal pairs {(1,1),(-1,-1)} and
/// {(1,-1),(-1,1)} is black (and the other white).
bool corner_dichotomy_holds(const Board& board);

struct CombinedPaths {
    RelStructure d;     // plain [n], r only
    StructureMap psi1;  // d -> rows of the board
    StructureMap psi2;  // d -> cols of the board
    Cell anchor;
};

/// Lists the four black paths (to left, right, bottom and top) forward and
/// back, all re-anchored at the same black corner of {-1,1} x {-1,1}.
CombinedPaths combine_paths(const Board& board, const CellPath& w, const CellPath& x, const CellPath& y,
                            const CellPath& z);

struct CapWitness {
    RelStructure d;    // (signed(n), antidiagonal)
    StructureMap psi1; // d -> domain of phi1
    StructureMap psi2; // d -> domain of phi2
    BlockDecomposition d1;
    BlockDecomposition d2;
    CellPath left, right, bottom, top;
};

/// Amalgamates antisymmetric epimorphisms phi1: signed(l) -> signed(k) and
/// phi2: signed(m) -> signed(k) over antidiagonal structures.
CapWitness cap_witness(const StructureMap& phi1, const StructureMap& phi2);

struct Doubling {
    RelStructure b;
    StructureMap phi;
};

/// ([2k], antidiagonal) -> ([k], antidiagonal), t -> ceil(t/2).
Doubling double_antidiagonal(const RelStructure& a);

struct JppWitness {
    RelStructure c;
    StructureMap phi1; // c -> a
    StructureMap phi2; // c -> b
};

/// Joint projection of two members of F through ([kn], antidiagonal);
/// non-antidiagonal inputs are covered first.
JppWitness jpp_witness(const RelStructure& a, const RelStructure& b);

/// The worked instance signed(8) -> signed(3) <- signed(9).
std::pair<StructureMap, StructureMap> reference_instance();

} // namespace pseudoarc
