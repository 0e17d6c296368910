#include "pseudoarc/membership.hpp"
#include "pseudoarc/verifiers.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace pseudoarc;

namespace {

RelStructure on_plain(int n, std::vector<VertexPair> pairs) {
    LinearGraph g = LinearGraph::plain(n);
    return RelStructure(g, Relation(g, std::move(pairs)));
}

// Union-find over pairs, independent of relation_graph.
bool connected_by_union_find(const Relation& s) {
    const auto& ps = s.pairs();
    std::vector<std::size_t> parent(ps.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    const LinearGraph& g = s.base();
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            if (g.adjacent(ps[i].first, ps[j].first) && g.adjacent(ps[i].second, ps[j].second))
                parent[find(i)] = find(j);
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < ps.size(); ++i)
        roots.insert(find(i));
    return roots.size() <= 1;
}

} // namespace

TEST_CASE("connected and disconnected four-point relations") {
    auto good = on_plain(4, {{1, 3}, {2, 3}, {3, 1}, {3, 2}, {3, 4}, {4, 1}});
    CHECK(is_surjective_relation(good.relation()));
    CHECK(is_connected_relation(good.relation()));
    CHECK(is_in_family_F(good));

    auto bad = on_plain(4, {{1, 2}, {2, 1}, {2, 4}, {3, 3}, {3, 4}, {4, 2}});
    CHECK(is_surjective_relation(bad.relation()));
    CHECK_FALSE(is_connected_relation(bad.relation()));
    CHECK_FALSE(is_in_family_F(bad));

    CHECK_FALSE(is_surjective_relation(on_plain(3, {{1, 2}, {2, 1}}).relation()));
    CHECK_THROWS(is_in_family_F(RelStructure(LinearGraph::plain(2))));
}

TEST_CASE("antidiagonals and identities are members") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(is_in_family_F(antidiagonal_structure(LinearGraph::plain(n))));
        CHECK(is_in_family_F(antidiagonal_structure(LinearGraph::signed_interval(n))));
        LinearGraph g = LinearGraph::plain(n);
        CHECK(is_in_family_F(RelStructure(g, identity_relation(g))));
    }
}

TEST_CASE("relation graph edges") {
    Relation s(LinearGraph::plain(2), {{1, 2}, {2, 1}});
    RelationGraph rg = relation_graph(s);
    REQUIRE(rg.vertices.size() == 2);
    CHECK(rg.edges.size() == 1);
    CHECK(rg.index_of({2, 1}) == 1);
}

TEST_CASE("property: connectivity agrees with union-find on every small relation") {
    for (int n = 1; n <= 3; ++n)
        for (const Relation& s : all_relations(LinearGraph::plain(n))) {
            CHECK(is_connected_relation(s) == connected_by_union_find(s));
            std::set<Vertex> firsts, seconds;
            for (auto [x, y] : s.pairs()) {
                firsts.insert(x);
                seconds.insert(y);
            }
            bool surj = static_cast<int>(firsts.size()) == n && static_cast<int>(seconds.size()) == n;
            CHECK(is_surjective_relation(s) == surj);
        }
}

TEST_CASE("antidiagonal cover of small members") {
    auto a2 = antidiagonal_structure(LinearGraph::plain(2));
    AntidiagonalCover c = cover_by_antidiagonal(a2);
    CHECK(c.cover.graph == LinearGraph::plain(8));
    CHECK(is_antidiagonal(c.cover));
    CHECK(c.map.images() == std::vector<Vertex>{1, 2, 2, 1, 2, 1, 1, 2});
    CHECK(is_epimorphism(c.map, c.cover, a2));

    auto loop = on_plain(1, {{1, 1}});
    AntidiagonalCover d = cover_by_antidiagonal(loop);
    CHECK(d.walk.size() == 1);
    CHECK(d.cover.graph == LinearGraph::plain(4));
    CHECK(d.map.images() == std::vector<Vertex>{1, 1, 1, 1});
}

TEST_CASE("non-symmetric members have no antidiagonal cover") {
    auto good = on_plain(4, {{1, 3}, {2, 3}, {3, 1}, {3, 2}, {3, 4}, {4, 1}});
    REQUIRE(is_in_family_F(good));
    CHECK_FALSE(good.relation().is_symmetric());
    CHECK_THROWS_AS(cover_by_antidiagonal(good), NoAntidiagonalCover);
    // Independent search over ([N], antidiagonal) for N up to 12 agrees.
    CHECK_FALSE(antidiagonal_cover_exists(good, 6));
}

TEST_CASE("property: every symmetric member is covered") {
    for (int n = 1; n <= 4; ++n)
        for (const RelStructure& a : family_members(n)) {
            if (!a.relation().is_symmetric()) {
                CHECK_THROWS_AS(cover_by_antidiagonal(a), NoAntidiagonalCover);
                continue;
            }
            AntidiagonalCover c = cover_by_antidiagonal(a);
            CHECK(c.cover.graph.size() == 4 * static_cast<int>(c.walk.size()));
            CHECK(is_antidiagonal(c.cover));
            CHECK(is_epimorphism(c.map, c.cover, a));
        }
}

TEST_CASE("cover oracle agrees with brute-force enumeration") {
    // For every member on [1..2] and every N <= 8: an epimorphism from
    // ([N], antidiagonal) exists iff the oracle finds one with 2j = N.
    for (const RelStructure& a : family_members(2)) {
        bool any = false;
        for (int half = 1; half <= 4; ++half)
            any = any || !enumerate_epimorphisms(antidiagonal_structure(LinearGraph::plain(2 * half)), a).empty();
        CHECK(antidiagonal_cover_exists(a, 4) == any);
        CHECK(any == a.relation().is_symmetric());
    }
}
