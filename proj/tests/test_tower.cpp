#include "pseudoarc/membership.hpp"
#include "pseudoarc/text_format.hpp"
#include "pseudoarc/tower.hpp"

#include <doctest.h>

#include <sstream>

using namespace pseudoarc;

TEST_CASE("a fresh tower") {
    Tower t = new_tower();
    CHECK(t.height() == 1);
    CHECK(t.top().graph == LinearGraph::signed_interval(1));
    CHECK(check_tower(t).passed());
}

TEST_CASE("extension by symmetric members") {
    Tower t = new_tower();
    t = extend_tower(t, antidiagonal_structure(LinearGraph::plain(2)));
    t = extend_tower(t, antidiagonal_structure(LinearGraph::plain(5)));
    LinearGraph g = LinearGraph::plain(3);
    t = extend_tower(t, RelStructure(g, identity_relation(g)));
    CHECK(t.height() == 4);
    CHECK(t.covers.size() == 3);
    auto report = check_tower(t);
    CHECK(report.passed());
    for (const auto& b : t.bonds)
        CHECK(is_antisymmetric(b));
}

TEST_CASE("extension rejects non-members and asymmetric members") {
    LinearGraph g = LinearGraph::plain(4);
    RelStructure disconnected(g, Relation(g, {{1, 2}, {2, 1}, {2, 4}, {3, 3}, {3, 4}, {4, 2}}));
    CHECK_THROWS_AS(extend_tower(new_tower(), disconnected), std::invalid_argument);
    RelStructure lopsided(g, Relation(g, {{1, 3}, {2, 3}, {3, 1}, {3, 2}, {3, 4}, {4, 1}}));
    CHECK_THROWS_AS(extend_tower(new_tower(), lopsided), NoAntidiagonalCover);
    CHECK_FALSE(antidiagonal_cover_exists(lopsided, 6));
    CHECK_THROWS_AS(extend_tower(new_tower(), RelStructure(g)), std::invalid_argument);
}

TEST_CASE("coverable targets are the symmetric members") {
    auto targets = coverable_targets(3);
    CHECK_FALSE(targets.empty());
    for (const auto& a : targets) {
        CHECK(a.relation().is_symmetric());
        CHECK(is_in_family_F(a));
    }
}

TEST_CASE("property: random towers check out") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Tower t = random_tower(6, seed, 3);
        CHECK(t.height() == 7);
        CHECK(check_tower(t).passed());
    }
}

TEST_CASE("serialization round trip") {
    Tower t = random_tower(4, 99, 3);
    std::ostringstream out;
    write_tower(out, t);
    std::istringstream in(out.str());
    Tower back = read_tower(in);
    REQUIRE(back.height() == t.height());
    for (int n = 0; n < t.height(); ++n)
        CHECK(back.levels[static_cast<std::size_t>(n)] == t.levels[static_cast<std::size_t>(n)]);
    CHECK(back.bonds == t.bonds);
    REQUIRE(back.covers.size() == t.covers.size());
    for (std::size_t i = 0; i < t.covers.size(); ++i) {
        CHECK(back.covers[i].level == t.covers[i].level);
        CHECK(back.covers[i].map == t.covers[i].map);
    }
    CHECK(check_tower(back).passed());
}

TEST_CASE("corrupted bonds are detected") {
    Tower t = random_tower(3, 5, 3);
    REQUIRE(t.bonds.size() == 3);
    StructureMap& b = t.bonds[1];
    std::vector<Vertex> images = b.images();
    // Collapse everything onto the top vertex pair: no longer onto.
    for (auto& v : images)
        v = v > 0 ? b.codomain().max_vertex() : -b.codomain().max_vertex();
    b = StructureMap(b.domain(), b.codomain(), images);
    CHECK_FALSE(check_tower(t).passed());

    Tower u = random_tower(2, 5, 3);
    u.flips.pop_back();
    CHECK_FALSE(check_tower(u).passed());
}

TEST_CASE("malformed tower files") {
    std::istringstream stray("graph A plain 2\nrel A antidiagonal\n");
    CHECK_THROWS_AS(read_tower(stray), ParseError);
    std::istringstream no_bond("level 0\ngraph L0 signed 1\nrel L0 antidiagonal\nlevel 1\ngraph L1 signed 2\nrel L1 antidiagonal\n");
    CHECK_THROWS_AS(read_tower(no_bond), ParseError);
}
