#include "pseudoarc/chessboard.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace pseudoarc {

std::string to_string(Color c) {
    return c == Color::black ? "black" : "white";
}

std::string to_string(Adjacency a) {
    return a == Adjacency::four ? "4" : "8";
}

std::string to_string(const Cell& c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

Board::Board(LinearGraph rows, LinearGraph cols, Color fill)
    : rows_(rows), cols_(cols), colors_(static_cast<std::size_t>(rows.size() * cols.size()), fill) {}

std::size_t Board::index(const Cell& c) const {
    if (!contains(c))
        throw std::out_of_range("cell " + to_string(c) + " is not on the board");
    return static_cast<std::size_t>(rows_.position(c.row) * cols_.size() + cols_.position(c.col));
}

Color Board::color(const Cell& c) const {
    return colors_[index(c)];
}

void Board::set(const Cell& c, Color color) {
    colors_[index(c)] = color;
}

std::vector<Cell> Board::cells() const {
    std::vector<Cell> out;
    out.reserve(colors_.size());
    for (Vertex r : rows_.vertices())
        for (Vertex c : cols_.vertices())
            out.push_back({r, c});
    return out;
}

bool Board::adjacent(const Cell& a, const Cell& b, Adjacency mode) const {
    int dr = std::abs(rows_.position(a.row) - rows_.position(b.row));
    int dc = std::abs(cols_.position(a.col) - cols_.position(b.col));
    if (dr > 1 || dc > 1 || (dr == 0 && dc == 0))
        return false;
    return mode == Adjacency::eight || dr == 0 || dc == 0;
}

std::vector<Cell> Board::neighbors(const Cell& c, Adjacency mode) const {
    static constexpr int steps[8][2] = {{-1, 0}, {-1, 1}, {0, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, -1}};
    const int r = rows_.position(c.row);
    const int k = cols_.position(c.col);
    std::vector<Cell> out;
    for (int i = 0; i < 8; ++i) {
        if (mode == Adjacency::four && i % 2 == 1)
            continue;
        int nr = r + steps[i][0];
        int nc = k + steps[i][1];
        if (nr >= 0 && nr < row_count() && nc >= 0 && nc < col_count())
            out.push_back(cell_at(nr, nc));
    }
    return out;
}

bool is_valid_path(const Board& b, const CellPath& p, std::optional<Color> color) {
    if (p.cells.empty())
        return false;
    for (std::size_t i = 0; i < p.cells.size(); ++i) {
        if (!b.contains(p.cells[i]))
            return false;
        if (color && b.color(p.cells[i]) != *color)
            return false;
        if (i > 0 && !b.adjacent(p.cells[i - 1], p.cells[i], p.mode))
            return false;
    }
    return true;
}

std::vector<Cell> boundary(const Board& b) {
    std::vector<Cell> out;
    const Vertex r0 = b.rows().min_vertex(), r1 = b.rows().max_vertex();
    const Vertex c0 = b.cols().min_vertex(), c1 = b.cols().max_vertex();
    for (const Cell& c : b.cells()) {
        if (c.row == r0 || c.row == r1 || c.col == c0 || c.col == c1)
            out.push_back(c);
    }
    return out;
}

namespace {

bool has_cycle(const Board& b) {
    return b.row_count() >= 2 && b.col_count() >= 2;
}

// Cyclic offset from a to b along the boundary cycle.
struct CycleIndex {
    std::vector<Cell> cycle;
    std::map<Cell, int> position;

    explicit CycleIndex(const Board& b) : cycle(boundary_cycle(b)) {
        for (int i = 0; i < static_cast<int>(cycle.size()); ++i)
            position.emplace(cycle[static_cast<std::size_t>(i)], i);
    }

    int at(const Cell& c) const {
        auto it = position.find(c);
        if (it == position.end())
            throw std::invalid_argument("cell " + to_string(c) + " is not on the boundary");
        return it->second;
    }

    int offset(int from, int to) const {
        int n = static_cast<int>(cycle.size());
        return ((to - from) % n + n) % n;
    }

    bool in_arc(int from, int to, int c) const { return offset(from, c) <= offset(from, to); }
};

} // namespace

std::vector<Cell> boundary_cycle(const Board& b) {
    if (!has_cycle(b))
        throw std::invalid_argument("a board needs two rows and two columns for a boundary cycle");
    const int rows = b.row_count(), cols = b.col_count();
    std::vector<Cell> cycle;
    for (int c = 0; c < cols; ++c)
        cycle.push_back(b.cell_at(0, c));
    for (int r = 1; r < rows; ++r)
        cycle.push_back(b.cell_at(r, cols - 1));
    for (int c = cols - 2; c >= 0; --c)
        cycle.push_back(b.cell_at(rows - 1, c));
    for (int r = rows - 2; r >= 1; --r)
        cycle.push_back(b.cell_at(r, 0));
    return cycle;
}

std::vector<Cell> clockwise_arc(const Board& b, const Cell& x, const Cell& y) {
    if (x == y) {
        auto bd = boundary(b);
        if (std::find(bd.begin(), bd.end(), x) == bd.end())
            throw std::invalid_argument("cell " + to_string(x) + " is not on the boundary");
        return {x};
    }
    CycleIndex idx(b);
    int from = idx.at(x), to = idx.at(y);
    std::vector<Cell> arc;
    int n = static_cast<int>(idx.cycle.size());
    for (int t = 0; t <= idx.offset(from, to); ++t)
        arc.push_back(idx.cycle[static_cast<std::size_t>((from + t) % n)]);
    return arc;
}

bool is_oriented_quadruple(const Board& b, const OrientedQuadruple& q) {
    if (!has_cycle(b))
        return false;
    CycleIndex idx(b);
    int w = idx.at(q.w), x = idx.at(q.x), y = idx.at(q.y), z = idx.at(q.z);
    return !idx.in_arc(w, x, y) && !idx.in_arc(w, x, z) && !idx.in_arc(x, y, z);
}

std::vector<OrientedQuadruple> oriented_quadruples(const Board& b) {
    std::vector<OrientedQuadruple> out;
    if (!has_cycle(b))
        return out;
    CycleIndex idx(b);
    const int n = static_cast<int>(idx.cycle.size());
    auto cell = [&](int i) { return idx.cycle[static_cast<std::size_t>(i)]; };
    for (int w = 0; w < n; ++w)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (idx.in_arc(w, x, y))
                    continue;
                for (int z = 0; z < n; ++z) {
                    if (!idx.in_arc(w, x, z) && !idx.in_arc(x, y, z))
                        out.push_back({cell(w), cell(x), cell(y), cell(z)});
                }
            }
    return out;
}

std::optional<CellPath> exists_path(const Board& b, std::span<const Cell> from, std::span<const Cell> to, Color color,
                                    Adjacency mode) {
    std::set<Cell> targets(to.begin(), to.end());
    std::map<Cell, Cell> parent;
    std::deque<Cell> queue;
    auto trace = [&](Cell end) {
        CellPath path{{}, mode};
        for (Cell c = end;; c = parent.at(c)) {
            path.cells.push_back(c);
            if (parent.at(c) == c)
                break;
        }
        std::reverse(path.cells.begin(), path.cells.end());
        return path;
    };
    for (const Cell& s : from) {
        if (!b.contains(s) || b.color(s) != color || parent.count(s))
            continue;
        parent.emplace(s, s);
        if (targets.count(s))
            return trace(s);
        queue.push_back(s);
    }
    while (!queue.empty()) {
        Cell c = queue.front();
        queue.pop_front();
        for (const Cell& n : b.neighbors(c, mode)) {
            if (b.color(n) != color || parent.count(n))
                continue;
            parent.emplace(n, c);
            if (targets.count(n))
                return trace(n);
            queue.push_back(n);
        }
    }
    return std::nullopt;
}

bool steinhaus_check(const Board& b, const OrientedQuadruple& q) {
    if (!is_oriented_quadruple(b, q))
        throw std::invalid_argument("not an oriented quadruple");
    auto wx = clockwise_arc(b, q.w, q.x);
    auto xy = clockwise_arc(b, q.x, q.y);
    auto yz = clockwise_arc(b, q.y, q.z);
    auto zw = clockwise_arc(b, q.z, q.w);
    bool black8 = exists_path(b, wx, yz, Color::black, Adjacency::eight).has_value();
    bool white4 = exists_path(b, xy, zw, Color::white, Adjacency::four).has_value();
    return black8 != white4;
}

Board product_coloring(const StructureMap& f1, const StructureMap& f2) {
    if (!(f1.codomain() == f2.codomain()))
        throw std::invalid_argument("product coloring needs a common codomain, got " + f1.codomain().describe() +
                                    " and " + f2.codomain().describe());
    Board b(f1.domain(), f2.domain());
    for (Vertex i : f1.domain().vertices())
        for (Vertex j : f2.domain().vertices())
            if (f1(i) == f2(j))
                b.set({i, j}, Color::black);
    return b;
}

LinearAmalgam solecki_amalgamate(const StructureMap& alpha, const StructureMap& beta) {
    for (const StructureMap* f : {&alpha, &beta}) {
        if (f->domain().is_signed() || f->codomain().is_signed())
            throw std::invalid_argument("linear amalgamation expects plain graphs");
        if (!is_epimorphism(*f))
            throw std::invalid_argument("input " + describe(*f) + " is not an epimorphism");
    }
    Board board = product_coloring(alpha, beta);
    const int l = board.row_count(), m = board.col_count();

    std::vector<Cell> first_col, last_col, first_row, last_row;
    for (int r = 0; r < l; ++r) {
        first_col.push_back(board.cell_at(r, 0));
        last_col.push_back(board.cell_at(r, m - 1));
    }
    for (int c = 0; c < m; ++c) {
        first_row.push_back(board.cell_at(0, c));
        last_row.push_back(board.cell_at(l - 1, c));
    }
    auto across = exists_path(board, first_col, last_col, Color::black, Adjacency::eight);
    auto down = exists_path(board, first_row, last_row, Color::black, Adjacency::eight);
    if (!across || !down)
        throw InvariantViolation("product coloring of two epimorphisms lacks a black crossing path");

    std::vector<Cell> bridge_from{across->cells.back()};
    auto bridge = exists_path(board, bridge_from, down->cells, Color::black, Adjacency::eight);
    if (!bridge)
        throw InvariantViolation("black crossing paths are not connected");

    std::vector<Cell> walk = across->cells;
    walk.insert(walk.end(), bridge->cells.begin() + 1, bridge->cells.end());
    auto meet = std::find(down->cells.begin(), down->cells.end(), bridge->cells.back());
    for (auto it = meet; it != down->cells.begin();)
        walk.push_back(*--it);
    walk.insert(walk.end(), down->cells.begin() + 1, down->cells.end());
    walk.erase(std::unique(walk.begin(), walk.end()), walk.end());

    std::set<Vertex> rows_hit, cols_hit;
    for (const Cell& c : walk) {
        rows_hit.insert(c.row);
        cols_hit.insert(c.col);
    }
    if (static_cast<int>(rows_hit.size()) != l || static_cast<int>(cols_hit.size()) != m)
        throw InvariantViolation("combined path misses a row or a column");

    LinearGraph d = LinearGraph::plain(static_cast<int>(walk.size()));
    std::vector<Vertex> gamma, delta;
    for (const Cell& c : walk) {
        gamma.push_back(c.row);
        delta.push_back(c.col);
    }
    return {d, StructureMap(d, alpha.domain(), std::move(gamma)), StructureMap(d, beta.domain(), std::move(delta)),
            CellPath{std::move(walk), Adjacency::eight}};
}

} // namespace pseudoarc
