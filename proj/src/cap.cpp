#include "pseudoarc/cap.hpp"

#include "pseudoarc/membership.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace pseudoarc {

std::string to_string(const Interval& r) {
    if (r.lo == r.hi)
        return "[" + std::to_string(r.lo) + "]";
    return "[" + std::to_string(r.lo) + "," + std::to_string(r.hi) + "]";
}

std::string to_string(GraphVariant v) {
    switch (v) {
    case GraphVariant::g0: return "G0";
    case GraphVariant::g1: return "G1";
    case GraphVariant::g2: return "G2";
    }
    return "?";
}

std::string to_string(Side s) {
    switch (s) {
    case Side::top: return "top";
    case Side::bottom: return "bottom";
    case Side::left: return "left";
    case Side::right: return "right";
    }
    return "?";
}

namespace {

int sign_of(Vertex v) {
    return v > 0 ? 1 : -1;
}

void require_signed_antidiagonal_epi(const StructureMap& phi) {
    if (!phi.domain().is_signed() || !phi.codomain().is_signed())
        throw std::invalid_argument("expected a map between signed graphs");
    if (!is_antisymmetric(phi))
        throw std::invalid_argument("map " + describe(phi) + " is not antisymmetric");
    if (!is_epimorphism(phi, antidiagonal_structure(phi.domain()), antidiagonal_structure(phi.codomain())))
        throw std::invalid_argument("map " + describe(phi) + " is not an epimorphism");
}

} // namespace

const BlockDecomposition::Block& BlockDecomposition::block(int i) const {
    if (i < -p_ || i >= p_)
        throw std::out_of_range("block index " + std::to_string(i) + " outside [-" + std::to_string(p_) + "," +
                                std::to_string(p_) + ")");
    return blocks_[static_cast<std::size_t>(i + p_)];
}

Vertex BlockDecomposition::s(int i) const {
    return block(i).start;
}

Vertex BlockDecomposition::s_prime(int i) const {
    if (i <= -p_ || i > p_)
        throw std::out_of_range("s' index " + std::to_string(i) + " outside (-" + std::to_string(p_) + "," +
                                std::to_string(p_) + "]");
    return block(i - 1).end;
}

std::string BlockDecomposition::describe(const std::string& symbol) const {
    std::ostringstream os;
    os << symbol << '_' << -p_ << '=' << s(-p_);
    for (int i = -p_ + 1; i <= p_; ++i) {
        os << ' ' << symbol << "'_" << i << '=' << s_prime(i);
        if (i < p_)
            os << ' ' << symbol << '_' << i << '=' << s(i);
    }
    return os.str();
}

BlockDecomposition block_decomposition(const StructureMap& phi) {
    require_signed_antidiagonal_epi(phi);
    const int l = phi.domain().parameter();

    std::vector<BlockDecomposition::Block> positive;
    for (Vertex v = 1; v <= l; ++v) {
        int sg = sign_of(phi(v));
        if (positive.empty() || positive.back().sign != sg)
            positive.push_back({v, v, sg, {phi(v), phi(v)}});
        auto& b = positive.back();
        b.end = v;
        b.range.lo = std::min(b.range.lo, phi(v));
        b.range.hi = std::max(b.range.hi, phi(v));
    }
    const int p = static_cast<int>(positive.size());
    std::vector<BlockDecomposition::Block> blocks;
    for (auto it = positive.rbegin(); it != positive.rend(); ++it)
        blocks.push_back({-it->end, -it->start, -it->sign, {-it->range.hi, -it->range.lo}});
    blocks.insert(blocks.end(), positive.begin(), positive.end());

    for (const auto& b : blocks) {
        // Inner ends sit next to a sign change; the outer ends -l and l are exempt.
        if ((b.start != -l && std::abs(phi(b.start)) != 1) || (b.end != l && std::abs(phi(b.end)) != 1))
            throw InvariantViolation("block [" + std::to_string(b.start) + "," + std::to_string(b.end) +
                                     "] does not start and end at +-1");
        if (b.range.lo * b.range.hi < 0 || (b.range.lo != 1 && b.range.hi != -1))
            throw InvariantViolation("block range " + to_string(b.range) + " is not a one-signed interval at +-1");
    }
    return BlockDecomposition(phi, p, std::move(blocks));
}

Interval block_range(const BlockDecomposition& dec, int i) {
    return dec.block_range(i);
}

AmalgGraph::AmalgGraph(GraphVariant variant, int p, int q, std::vector<Edge> edges)
    : variant_(variant), p_(p), q_(q), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        if (!contains(e.first) || !contains(e.second))
            throw std::invalid_argument("edge leaves the grid");
        int d = std::abs(e.first.row - e.second.row) + std::abs(e.first.col - e.second.col);
        if (d != 1)
            throw std::invalid_argument("edge " + to_string(e.first) + "-" + to_string(e.second) +
                                        " joins nodes that are not 4-adjacent");
        if (e.second < e.first)
            std::swap(e.first, e.second);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool AmalgGraph::has_edge(const Cell& a, const Cell& b) const {
    Edge e = a < b ? Edge{a, b} : Edge{b, a};
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<Cell> AmalgGraph::neighbors(const Cell& n) const {
    std::vector<Cell> out;
    for (const Cell& c : {Cell{n.row - 1, n.col}, Cell{n.row, n.col + 1}, Cell{n.row + 1, n.col}, Cell{n.row, n.col - 1}}) {
        if (contains(c) && has_edge(n, c))
            out.push_back(c);
    }
    return out;
}

bool AmalgGraph::on_boundary(const Cell& n) const {
    return std::abs(n.row) == p_ || std::abs(n.col) == q_;
}

bool AmalgGraph::on_side(const Cell& n, Side side) const {
    switch (side) {
    case Side::top: return n.col == q_;
    case Side::bottom: return n.col == -q_;
    case Side::left: return n.row == -p_;
    case Side::right: return n.row == p_;
    }
    return false;
}

AmalgGraph build_amalg_graph(const BlockDecomposition& d1, const BlockDecomposition& d2, GraphVariant variant) {
    if (!(d1.map().codomain() == d2.map().codomain()))
        throw std::invalid_argument("block decompositions of maps with different codomains");
    const int p = d1.p(), q = d2.p();
    std::vector<AmalgGraph::Edge> edges;
    for (int i = -p; i < p; ++i) {
        for (int j = -q; j < q; ++j) {
            if (d1.block_sign(i) != d2.block_sign(j))
                continue;
            Interval r1 = d1.block_range(i), r2 = d2.block_range(j);
            bool first_inside = r2.contains(r1);
            bool second_inside = r1.contains(r2);
            if (!first_inside && !second_inside)
                throw InvariantViolation("same-sign block ranges " + to_string(r1) + " and " + to_string(r2) +
                                         " are not nested");
            bool equal = first_inside && second_inside;
            bool horizontal = first_inside && !(equal && variant == GraphVariant::g1);
            bool vertical = second_inside && !(equal && variant == GraphVariant::g2);
            if (horizontal) {
                edges.push_back({{i, j}, {i + 1, j}});
                edges.push_back({{i, j + 1}, {i + 1, j + 1}});
            }
            if (vertical) {
                edges.push_back({{i, j}, {i, j + 1}});
                edges.push_back({{i + 1, j}, {i + 1, j + 1}});
            }
        }
    }
    return AmalgGraph(variant, p, q, std::move(edges));
}

CellPath find_interior_path(const AmalgGraph& g, Side side) {
    bool vertical_side = side == Side::top || side == Side::bottom;
    if (vertical_side && g.variant() != GraphVariant::g1)
        throw std::invalid_argument("top and bottom interior paths are taken in G1");
    if (!vertical_side && g.variant() != GraphVariant::g2)
        throw std::invalid_argument("left and right interior paths are taken in G2");

    const Cell center{0, 0};
    if (g.on_boundary(center))
        throw std::invalid_argument("degenerate grid: (0,0) lies on the boundary");
    auto first_steps = g.neighbors(center);
    if (first_steps.size() != 2)
        throw InvariantViolation("(0,0) has degree " + std::to_string(first_steps.size()) + ", expected 2");

    for (const Cell& first : first_steps) {
        CellPath path{{center, first}, Adjacency::four};
        std::set<Cell> seen{center, first};
        Cell prev = center, cur = first;
        while (!g.on_boundary(cur)) {
            auto nbrs = g.neighbors(cur);
            if (nbrs.size() != 2)
                throw InvariantViolation("interior node " + to_string(cur) + " has degree " +
                                         std::to_string(nbrs.size()));
            Cell next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
            if (next == center)
                throw InvariantViolation("degree-2 walk returns to (0,0)");
            if (!seen.insert(next).second)
                throw InvariantViolation("degree-2 walk revisits " + to_string(next));
            path.cells.push_back(next);
            prev = cur;
            cur = next;
        }
        if (g.on_side(cur, side))
            return path;
    }
    throw InvariantViolation("no interior path from (0,0) to the " + to_string(side) + " side");
}

namespace {

struct Rect {
    int block_i;
    int block_j;
};

// The block rectangle whose edge realizes the step a -> b of an interior path.
Rect step_rectangle(const Cell& a, const Cell& b, const BlockDecomposition& d1, const BlockDecomposition& d2) {
    const int p = d1.p(), q = d2.p();
    if (a.col == b.col && std::abs(a.row - b.row) == 1) {
        int bi = std::min(a.row, b.row);
        for (int bj : {a.col, a.col - 1}) {
            if (bj < -q || bj >= q)
                continue;
            if (d1.block_sign(bi) == d2.block_sign(bj) && d2.block_range(bj).contains(d1.block_range(bi)))
                return {bi, bj};
        }
    } else if (a.row == b.row && std::abs(a.col - b.col) == 1) {
        int bj = std::min(a.col, b.col);
        for (int bi : {a.row, a.row - 1}) {
            if (bi < -p || bi >= p)
                continue;
            if (d1.block_sign(bi) == d2.block_sign(bj) && d1.block_range(bi).contains(d2.block_range(bj)))
                return {bi, bj};
        }
    }
    throw InvariantViolation("step " + to_string(a) + " -> " + to_string(b) + " is not an edge of G0");
}

Cell rect_corner(const Rect& r, const Cell& node, const BlockDecomposition& d1, const BlockDecomposition& d2) {
    Vertex x = node.row == r.block_i ? d1.block_start(r.block_i) : d1.block_end(r.block_i);
    Vertex y = node.col == r.block_j ? d2.block_start(r.block_j) : d2.block_end(r.block_j);
    return {x, y};
}

// Black 8-path between two cells, confined to a block rectangle.
template <typename Goal>
std::optional<std::vector<Cell>> black_path_in_rect(const Board& board, const Rect& r, const BlockDecomposition& d1,
                                                    const BlockDecomposition& d2, const Cell& from, Goal&& goal) {
    const LinearGraph& rows = board.rows();
    const LinearGraph& cols = board.cols();
    const int r_lo = rows.position(d1.block_start(r.block_i)), r_hi = rows.position(d1.block_end(r.block_i));
    const int c_lo = cols.position(d2.block_start(r.block_j)), c_hi = cols.position(d2.block_end(r.block_j));
    auto inside = [&](const Cell& c) {
        int rp = rows.position(c.row), cp = cols.position(c.col);
        return rp >= r_lo && rp <= r_hi && cp >= c_lo && cp <= c_hi;
    };
    if (!board.is_black(from))
        return std::nullopt;
    std::map<Cell, Cell> parent{{from, from}};
    std::deque<Cell> queue{from};
    while (!queue.empty()) {
        Cell c = queue.front();
        queue.pop_front();
        if (goal(c)) {
            std::vector<Cell> out;
            for (Cell t = c;; t = parent.at(t)) {
                out.push_back(t);
                if (t == from)
                    break;
            }
            std::reverse(out.begin(), out.end());
            return out;
        }
        for (const Cell& n : board.neighbors(c, Adjacency::eight)) {
            if (inside(n) && board.is_black(n) && !parent.count(n)) {
                parent.emplace(n, c);
                queue.push_back(n);
            }
        }
    }
    return std::nullopt;
}

bool in_center(const Cell& c) {
    return std::abs(c.row) == 1 && std::abs(c.col) == 1;
}

} // namespace

CellPath lift_interior_path(const Board& board, const CellPath& path, const BlockDecomposition& d1,
                            const BlockDecomposition& d2) {
    if (path.cells.size() < 2 || path.cells.front() != Cell{0, 0})
        throw std::invalid_argument("interior path must start at (0,0) and take at least one step");
    CellPath lifted{{}, Adjacency::eight};
    for (std::size_t k = 0; k + 1 < path.cells.size(); ++k) {
        const Cell& a = path.cells[k];
        const Cell& b = path.cells[k + 1];
        Rect rect = step_rectangle(a, b, d1, d2);
        Cell from = rect_corner(rect, a, d1, d2), to = rect_corner(rect, b, d1, d2);
        // Inside the grid the far corner is black and is the target. The last
        // step ends on the grid boundary, where any cell on that side of the
        // board will do; the corner itself maps to +-k and may be white.
        const bool last = std::abs(b.row) == d1.p() || std::abs(b.col) == d2.p();
        auto goal = [&](const Cell& c) {
            if (!last)
                return c == to;
            if (std::abs(b.row) == d1.p())
                return c.row == to.row;
            return c.col == to.col;
        };
        auto segment = black_path_in_rect(board, rect, d1, d2, from, goal);
        if (!segment)
            throw InvariantViolation("no black 8-path across block (" + std::to_string(rect.block_i) + "," +
                                     std::to_string(rect.block_j) + ") from " + to_string(from) + " towards " +
                                     to_string(to));
        auto start = segment->begin();
        if (!lifted.cells.empty() && lifted.cells.back() == *start)
            ++start;
        lifted.cells.insert(lifted.cells.end(), start, segment->end());
    }
    if (!is_valid_path(board, lifted, Color::black))
        throw InvariantViolation("lifted path is not a black 8-path");
    if (!in_center(lifted.cells.front()))
        throw InvariantViolation("lifted path does not start in {-1,1} x {-1,1}");
    return lifted;
}

CellPath lift_interior_path(const CellPath& path, const BlockDecomposition& d1, const BlockDecomposition& d2) {
    return lift_interior_path(product_coloring(d1.map(), d2.map()), path, d1, d2);
}

bool corner_dichotomy_holds(const Board& board) {
    if (!board.rows().is_signed() || !board.cols().is_signed())
        throw std::invalid_argument("corner dichotomy concerns boards over signed axes");
    bool main = board.is_black({1, 1}) && board.is_black({-1, -1});
    bool main_white = !board.is_black({1, 1}) && !board.is_black({-1, -1});
    bool anti = board.is_black({1, -1}) && board.is_black({-1, 1});
    bool anti_white = !board.is_black({1, -1}) && !board.is_black({-1, 1});
    return (main && anti_white) || (anti && main_white);
}

CombinedPaths combine_paths(const Board& board, const CellPath& w, const CellPath& x, const CellPath& y,
                            const CellPath& z) {
    if (!corner_dichotomy_holds(board))
        throw std::invalid_argument("board violates the corner dichotomy");
    const Cell anchor = board.is_black({1, 1}) ? Cell{1, 1} : Cell{1, -1};
    const Vertex l = board.rows().max_vertex(), m = board.cols().max_vertex();

    struct Leg {
        const CellPath* path;
        bool (*reaches)(const Cell&, Vertex, Vertex);
        const char* name;
    };
    const Leg legs[] = {
        {&w, [](const Cell& c, Vertex l_, Vertex) { return c.row == -l_; }, "left"},
        {&x, [](const Cell& c, Vertex l_, Vertex) { return c.row == l_; }, "right"},
        {&y, [](const Cell& c, Vertex, Vertex m_) { return c.col == -m_; }, "bottom"},
        {&z, [](const Cell& c, Vertex, Vertex m_) { return c.col == m_; }, "top"},
    };

    std::vector<Cell> listing;
    for (const Leg& leg : legs) {
        const CellPath& p = *leg.path;
        if (!is_valid_path(board, p, Color::black) || p.mode != Adjacency::eight)
            throw std::invalid_argument(std::string(leg.name) + " path is not a black 8-path");
        if (!in_center(p.cells.front()))
            throw std::invalid_argument(std::string(leg.name) + " path does not start in {-1,1} x {-1,1}");
        if (!leg.reaches(p.cells.back(), l, m))
            throw std::invalid_argument(std::string(leg.name) + " path does not reach its side");
        std::vector<Cell> cells = p.cells;
        if (cells.front() != anchor)
            cells.insert(cells.begin(), anchor);
        listing.insert(listing.end(), cells.begin(), cells.end());
        listing.insert(listing.end(), cells.rbegin(), cells.rend());
    }

    LinearGraph d = LinearGraph::plain(static_cast<int>(listing.size()));
    std::vector<Vertex> first, second;
    for (const Cell& c : listing) {
        first.push_back(c.row);
        second.push_back(c.col);
    }
    return {RelStructure(d), StructureMap(d, board.rows(), std::move(first)),
            StructureMap(d, board.cols(), std::move(second)), anchor};
}

namespace {

StructureMap antisymmetric_extension(const StructureMap& half, const LinearGraph& doubled) {
    return StructureMap::from_function(doubled, half.codomain(), [&](Vertex t) { return t > 0 ? half(t) : -half(-t); });
}

} // namespace

CapWitness cap_witness(const StructureMap& phi1, const StructureMap& phi2) {
    if (!(phi1.codomain() == phi2.codomain()))
        throw std::invalid_argument("maps must share a codomain");
    BlockDecomposition d1 = block_decomposition(phi1);
    BlockDecomposition d2 = block_decomposition(phi2);
    Board board = product_coloring(phi1, phi2);

    AmalgGraph g1 = build_amalg_graph(d1, d2, GraphVariant::g1);
    AmalgGraph g2 = build_amalg_graph(d1, d2, GraphVariant::g2);
    CellPath left = lift_interior_path(board, find_interior_path(g2, Side::left), d1, d2);
    CellPath right = lift_interior_path(board, find_interior_path(g2, Side::right), d1, d2);
    CellPath bottom = lift_interior_path(board, find_interior_path(g1, Side::bottom), d1, d2);
    CellPath top = lift_interior_path(board, find_interior_path(g1, Side::top), d1, d2);

    CombinedPaths combined = combine_paths(board, left, right, bottom, top);
    LinearGraph doubled = LinearGraph::signed_interval(combined.d.graph.size());
    return {antidiagonal_structure(doubled),
            antisymmetric_extension(combined.psi1, doubled),
            antisymmetric_extension(combined.psi2, doubled),
            std::move(d1),
            std::move(d2),
            std::move(left),
            std::move(right),
            std::move(bottom),
            std::move(top)};
}

Doubling double_antidiagonal(const RelStructure& a) {
    if (a.graph.is_signed() || !is_antidiagonal(a))
        throw std::invalid_argument("doubling expects a plain graph carrying its antidiagonal");
    LinearGraph b = LinearGraph::plain(2 * a.graph.size());
    auto phi = StructureMap::from_function(b, a.graph, [](Vertex t) { return (t + 1) / 2; });
    return {antidiagonal_structure(b), std::move(phi)};
}

namespace {

struct PlainAntidiagonalSource {
    RelStructure structure;
    StructureMap map; // structure -> original
};

PlainAntidiagonalSource plain_antidiagonal_source(const RelStructure& a) {
    if (!a.s || !is_in_family_F(a))
        throw std::invalid_argument("joint projection needs members of F");
    if (is_antidiagonal(a)) {
        if (!a.graph.is_signed())
            return {a, StructureMap::identity(a.graph)};
        LinearGraph plain = LinearGraph::plain(a.graph.size());
        return {antidiagonal_structure(plain), plain_to_signed(plain)};
    }
    AntidiagonalCover cover = cover_by_antidiagonal(a);
    return {std::move(cover.cover), std::move(cover.map)};
}

} // namespace

JppWitness jpp_witness(const RelStructure& a, const RelStructure& b) {
    PlainAntidiagonalSource sa = plain_antidiagonal_source(a);
    PlainAntidiagonalSource sb = plain_antidiagonal_source(b);
    const int k = sa.structure.graph.size(), n = sb.structure.graph.size();
    LinearGraph c = LinearGraph::plain(k * n);
    auto to_a = StructureMap::from_function(c, sa.structure.graph, [&](Vertex t) { return (t + n - 1) / n; });
    auto to_b = StructureMap::from_function(c, sb.structure.graph, [&](Vertex t) { return (t + k - 1) / k; });
    return {antidiagonal_structure(c), compose(sa.map, to_a), compose(sb.map, to_b)};
}

std::pair<StructureMap, StructureMap> reference_instance() {
    const std::vector<Vertex> first_half{1, 2, 1, -1, 1, 1, 2, 3};
    const std::vector<Vertex> second_half{-1, -2, -1, -2, -3, -2, -1, 1, 2};
    LinearGraph a = LinearGraph::signed_interval(3);
    auto extend = [&](const std::vector<Vertex>& half) {
        LinearGraph dom = LinearGraph::signed_interval(static_cast<int>(half.size()));
        return StructureMap::from_function(dom, a, [&](Vertex v) {
            Vertex w = half[static_cast<std::size_t>(std::abs(v) - 1)];
            return v > 0 ? w : -w;
        });
    };
    return {extend(first_half), extend(second_half)};
}

} // namespace pseudoarc
