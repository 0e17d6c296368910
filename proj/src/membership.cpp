#include "pseudoarc/membership.hpp"

#include <algorithm>

namespace pseudoarc {

std::size_t RelationGraph::index_of(const VertexPair& p) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
    if (it == vertices.end() || *it != p)
        throw std::out_of_range("pair is not a vertex of the relation graph");
    return static_cast<std::size_t>(it - vertices.begin());
}

RelationGraph relation_graph(const Relation& s) {
    RelationGraph g;
    g.vertices = s.pairs();
    g.adjacency.resize(g.vertices.size());
    const LinearGraph& base = s.base();
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
            const auto& [a, b] = g.vertices[i];
            const auto& [c, d] = g.vertices[j];
            if (base.adjacent(a, c) && base.adjacent(b, d)) {
                g.edges.emplace_back(i, j);
                g.adjacency[i].push_back(j);
                g.adjacency[j].push_back(i);
            }
        }
    }
    return g;
}

bool is_surjective_relation(const Relation& s) {
    const LinearGraph& base = s.base();
    std::vector<bool> has_out(static_cast<std::size_t>(base.size()), false);
    std::vector<bool> has_in(static_cast<std::size_t>(base.size()), false);
    for (const auto& [a, b] : s.pairs()) {
        has_out[static_cast<std::size_t>(base.position(a))] = true;
        has_in[static_cast<std::size_t>(base.position(b))] = true;
    }
    for (std::size_t i = 0; i < has_out.size(); ++i) {
        if (!has_out[i] || !has_in[i])
            return false;
    }
    return true;
}

bool is_connected_relation(const Relation& s) {
    RelationGraph g = relation_graph(s);
    if (g.vertices.size() <= 1)
        return true;
    std::vector<bool> seen(g.vertices.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : g.adjacency[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == g.vertices.size();
}

bool is_in_family_F(const RelStructure& a) {
    const Relation& s = a.relation();
    return is_surjective_relation(s) && is_connected_relation(s);
}

namespace {

VertexPair near_diagonal_start(const Relation& s) {
    const LinearGraph& base = s.base();
    for (Vertex i : base.vertices()) {
        if (s.contains(i, i))
            return {i, i};
        if (auto j = base.next(i)) {
            if (s.contains(i, *j))
                return {i, *j};
            if (s.contains(*j, i))
                return {*j, i};
        }
    }
    throw InvariantViolation("surjective connected relation without a pair on or next to the diagonal");
}

// Depth-first tour emitting a vertex on entry and again whenever the search
// returns to it; the trailing returns after the last new vertex are dropped.
std::vector<std::size_t> covering_walk(const RelationGraph& g, std::size_t start) {
    std::vector<std::size_t> walk{start};
    std::size_t last_new = 0;
    std::vector<bool> seen(g.vertices.size(), false);
    seen[start] = true;
    struct Frame {
        std::size_t vertex;
        std::size_t next_neighbor;
    };
    std::vector<Frame> stack{{start, 0}};
    while (!stack.empty()) {
        Frame& top = stack.back();
        const auto& nbrs = g.adjacency[top.vertex];
        if (top.next_neighbor < nbrs.size()) {
            std::size_t w = nbrs[top.next_neighbor++];
            if (!seen[w]) {
                seen[w] = true;
                walk.push_back(w);
                last_new = walk.size() - 1;
                stack.push_back({w, 0});
            }
            continue;
        }
        stack.pop_back();
        if (!stack.empty())
            walk.push_back(stack.back().vertex);
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw InvariantViolation("relation graph of a member of F is not connected");
    walk.resize(last_new + 1);
    return walk;
}

} // namespace

AntidiagonalCover cover_by_antidiagonal(const RelStructure& a) {
    if (!is_in_family_F(a))
        throw std::invalid_argument("structure is not in F: its relation is not surjective and connected");
    const Relation& s = *a.s;
    if (!s.is_symmetric())
        throw NoAntidiagonalCover("relation is not symmetric, so no antidiagonal structure maps onto it");

    RelationGraph g = relation_graph(s);
    std::vector<VertexPair> h;
    for (std::size_t idx : covering_walk(g, g.index_of(near_diagonal_start(s))))
        h.push_back(g.vertices[idx]);

    const int m = static_cast<int>(h.size());
    LinearGraph b = LinearGraph::plain(4 * m);
    auto at = [&](int i) -> const VertexPair& { return h[static_cast<std::size_t>(i - 1)]; };
    auto phi = StructureMap::from_function(b, a.graph, [&](Vertex i) {
        if (i <= m)
            return at(i).first;
        if (i <= 2 * m)
            return at(2 * m - i + 1).first;
        if (i <= 3 * m)
            return at(i - 2 * m).second;
        return at(4 * m - i + 1).second;
    });
    return {antidiagonal_structure(b), std::move(phi), std::move(h)};
}

} // namespace pseudoarc
