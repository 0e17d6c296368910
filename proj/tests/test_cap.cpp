#include "pseudoarc/cap.hpp"
#include "pseudoarc/membership.hpp"
#include "pseudoarc/verifiers.hpp"
#include "reference_graphs.hpp"

#include <doctest.h>

#include <random>

using namespace pseudoarc;

TEST_CASE("breakpoints of the worked instance") {
    auto [phi1, phi2] = reference_instance();
    auto d1 = block_decomposition(phi1);
    auto d2 = block_decomposition(phi2);
    CHECK(d1.p() == 3);
    CHECK(d2.p() == 2);
    CHECK(d1.describe() == "s_-3=-8 s'_-2=-5 s_-2=-4 s'_-1=-4 s_-1=-3 s'_0=-1 s_0=1 s'_1=3 s_1=4 s'_2=4 s_2=5 s'_3=8");
    CHECK(d2.describe("t") == "t_-2=-9 t'_-1=-8 t_-1=-7 t'_0=-1 t_0=1 t'_1=7 t_1=8 t'_2=9");
    CHECK(to_string(block_range(d1, 0)) == "[1,2]");
    CHECK(to_string(block_range(d1, 1)) == "[-1]");
    CHECK(to_string(block_range(d1, 2)) == "[1,3]");
    CHECK(to_string(block_range(d2, 0)) == "[-3,-1]");
    CHECK(to_string(block_range(d2, 1)) == "[1,2]");
    // Mirror blocks negate ranges.
    for (int i = 0; i < d1.p(); ++i) {
        Interval r = block_range(d1, i), m = block_range(d1, -i - 1);
        CHECK(m.lo == -r.hi);
        CHECK(m.hi == -r.lo);
        CHECK(d1.block_sign(-i - 1) == -d1.block_sign(i));
    }
}

TEST_CASE("block decomposition rejects bad input") {
    StructureMap plain_map = StructureMap::identity(LinearGraph::plain(4));
    CHECK_THROWS_AS(block_decomposition(plain_map), std::invalid_argument);
    // Surjective but not antisymmetric.
    StructureMap skew(LinearGraph::signed_interval(2), LinearGraph::signed_interval(1), {-1, -1, -1, 1});
    CHECK_THROWS_AS(block_decomposition(skew), std::invalid_argument);
}

TEST_CASE("block graphs match the hand transcription") {
    auto [phi1, phi2] = reference_instance();
    auto d1 = block_decomposition(phi1);
    auto d2 = block_decomposition(phi2);
    auto g1 = build_amalg_graph(d1, d2, GraphVariant::g1);
    auto g2 = build_amalg_graph(d1, d2, GraphVariant::g2);
    CHECK(g1.p() == 3);
    CHECK(g1.q() == 2);
    CHECK(g1.edges() == reference::g1_edges());
    CHECK(g2.edges() == reference::g2_edges());
    auto g0 = build_amalg_graph(d1, d2, GraphVariant::g0);
    for (const auto& e : g1.edges())
        CHECK(g0.has_edge(e.first, e.second));
    for (const auto& e : g2.edges())
        CHECK(g0.has_edge(e.first, e.second));
}

TEST_CASE("interior paths of the worked instance") {
    auto [phi1, phi2] = reference_instance();
    auto d1 = block_decomposition(phi1);
    auto d2 = block_decomposition(phi2);
    auto g1 = build_amalg_graph(d1, d2, GraphVariant::g1);
    auto bottom = find_interior_path(g1, Side::bottom);
    CHECK(bottom.cells == std::vector<Cell>{{0, 0}, {1, 0}, {2, 0}, {2, -1}, {1, -1}, {0, -1}, {0, -2}});
    auto top = find_interior_path(g1, Side::top);
    REQUIRE(top.cells.size() == bottom.cells.size());
    for (std::size_t i = 0; i < top.cells.size(); ++i) {
        CHECK(top.cells[i].row == -bottom.cells[i].row);
        CHECK(top.cells[i].col == -bottom.cells[i].col);
    }
    auto g2 = build_amalg_graph(d1, d2, GraphVariant::g2);
    for (Side s : {Side::left, Side::right}) {
        auto path = find_interior_path(g2, s);
        CHECK(path.cells.front() == Cell{0, 0});
        CHECK(g2.on_side(path.cells.back(), s));
        for (std::size_t i = 0; i + 1 < path.cells.size(); ++i)
            CHECK(g2.has_edge(path.cells[i], path.cells[i + 1]));
    }
}

TEST_CASE("lifted paths are black and reach their sides") {
    auto [phi1, phi2] = reference_instance();
    Board board = product_coloring(phi1, phi2);
    CHECK(corner_dichotomy_holds(board));
    CapWitness w = cap_witness(phi1, phi2);
    for (const CellPath* p : {&w.left, &w.right, &w.bottom, &w.top}) {
        CHECK(is_valid_path(board, *p, Color::black));
        CHECK(std::abs(p->cells.front().row) == 1);
        CHECK(std::abs(p->cells.front().col) == 1);
    }
    CHECK(std::abs(w.bottom.cells.back().col) == 9);
    CHECK(std::abs(w.top.cells.back().col) == 9);
    CHECK(std::abs(w.left.cells.back().row) == 8);
    CHECK(std::abs(w.right.cells.back().row) == 8);
}

TEST_CASE("amalgamation witness of the worked instance") {
    auto [phi1, phi2] = reference_instance();
    CapWitness w = cap_witness(phi1, phi2);
    CHECK(w.d.graph == LinearGraph::signed_interval(120));
    CHECK(is_antidiagonal(w.d));
    RelStructure a1 = antidiagonal_structure(phi1.domain()), a2 = antidiagonal_structure(phi2.domain());
    CHECK(is_epimorphism(w.psi1, w.d, a1));
    CHECK(is_epimorphism(w.psi2, w.d, a2));
    CHECK(is_antisymmetric(w.psi1));
    CHECK(is_antisymmetric(w.psi2));
    CHECK(compose(phi1, w.psi1) == compose(phi2, w.psi2));
}

TEST_CASE("property: random amalgamations commute") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        int k = 1 + trial % 4;
        int l = k + static_cast<int>(rng() % 5), m = k + static_cast<int>(rng() % 5);
        auto phi1 = random_antisymmetric_epimorphism(k, l, rng);
        auto phi2 = random_antisymmetric_epimorphism(k, m, rng);
        CHECK(corner_dichotomy_holds(product_coloring(phi1, phi2)));
        CapWitness w = cap_witness(phi1, phi2);
        CHECK(is_antidiagonal(w.d));
        CHECK(is_epimorphism(w.psi1, w.d, antidiagonal_structure(phi1.domain())));
        CHECK(is_epimorphism(w.psi2, w.d, antidiagonal_structure(phi2.domain())));
        CHECK(is_antisymmetric(w.psi1));
        CHECK(compose(phi1, w.psi1) == compose(phi2, w.psi2));
    }
}

TEST_CASE("property: structural claims on random instances") {
    auto report = verify_structural_claims(100, 7, 5);
    CHECK(report.passed());
    CHECK(report.instances >= 100);
}

TEST_CASE("doubling") {
    auto d1 = double_antidiagonal(antidiagonal_structure(LinearGraph::plain(1)));
    CHECK(d1.phi.images() == std::vector<Vertex>{1, 1});
    auto d3 = double_antidiagonal(antidiagonal_structure(LinearGraph::plain(3)));
    CHECK(d3.phi.images() == std::vector<Vertex>{1, 1, 2, 2, 3, 3});
    CHECK(is_epimorphism(d3.phi, d3.b, antidiagonal_structure(LinearGraph::plain(3))));
    CHECK_THROWS(double_antidiagonal(antidiagonal_structure(LinearGraph::signed_interval(2))));
    for (int k = 1; k <= 8; ++k) {
        auto a = antidiagonal_structure(LinearGraph::plain(k));
        auto d = double_antidiagonal(a);
        CHECK(d.b.graph.size() == 2 * k);
        CHECK(is_epimorphism(d.phi, d.b, a));
    }
}

TEST_CASE("joint projection") {
    auto a = antidiagonal_structure(LinearGraph::plain(2));
    auto b = antidiagonal_structure(LinearGraph::plain(3));
    JppWitness w = jpp_witness(a, b);
    CHECK(w.c.graph == LinearGraph::plain(6));
    CHECK(w.phi1.images() == std::vector<Vertex>{1, 1, 1, 2, 2, 2});
    CHECK(w.phi2.images() == std::vector<Vertex>{1, 1, 2, 2, 3, 3});
    CHECK(is_epimorphism(w.phi1, w.c, a));
    CHECK(is_epimorphism(w.phi2, w.c, b));

    LinearGraph g = LinearGraph::plain(4);
    RelStructure lopsided(g, Relation(g, {{1, 3}, {2, 3}, {3, 1}, {3, 2}, {3, 4}, {4, 1}}));
    CHECK_THROWS_AS(jpp_witness(lopsided, a), NoAntidiagonalCover);
    CHECK_THROWS_AS(jpp_witness(RelStructure(g), a), std::invalid_argument);
}

TEST_CASE("property: joint projection of symmetric members") {
    auto members = family_members(3);
    for (const auto& a : members)
        for (const auto& b : members) {
            if (!a.relation().is_symmetric() || !b.relation().is_symmetric())
                continue;
            JppWitness w = jpp_witness(a, b);
            CHECK(is_antidiagonal(w.c));
            CHECK(is_epimorphism(w.phi1, w.c, a));
            CHECK(is_epimorphism(w.phi2, w.c, b));
        }
}
