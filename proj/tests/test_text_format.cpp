#include "pseudoarc/text_format.hpp"

#include <doctest.h>

#include <sstream>

using namespace pseudoarc;

TEST_CASE("parses graphs, relations and maps") {
    const char* text = R"(# comment line
graph A plain 4
rel A 1 3   # trailing comment
rel A 3 1
graph B signed 2
rel B antidiagonal
graph C plain 2
map f B C
-2 -> 1
-1 -> 1
1 -> 2
2 -> 2
)";
    Document doc = parse_document(std::string(text));
    REQUIRE(doc.structures.size() == 3);
    CHECK(doc.structure("A").structure.relation().pairs() == std::vector<VertexPair>{{1, 3}, {3, 1}});
    CHECK(is_antidiagonal(doc.structure("B").structure));
    CHECK_FALSE(doc.structure("C").structure.has_relation());
    CHECK(doc.map("f").map.images() == std::vector<Vertex>{1, 1, 2, 2});
    CHECK(doc.find_map("g") == nullptr);
    CHECK(doc.find_structure("A") != nullptr);
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_document(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("graph A plain 3\nrel A 1 4\n") == 2);
    CHECK(line_of("graph A bogus 3\n") == 1);
    CHECK(line_of("graph A plain 2\ngraph A plain 3\n") == 2);
    CHECK(line_of("graph A plain 2\ngraph B plain 1\nmap f A B\n1 -> 1\n") > 0); // missing image
    CHECK(line_of("graph A plain 2\ngraph B plain 1\nmap f A B\n1 -> 1\n1 -> 1\n2 -> 1\n") > 0);
    CHECK(line_of("rel Z 1 1\n") == 1);
    CHECK(line_of("frobnicate\n") == 1);
    CHECK_THROWS_AS(load_document("/nonexistent/file.txt"), ParseError);
}

TEST_CASE("write then parse round-trips") {
    RelStructure a(LinearGraph::plain(4), Relation(LinearGraph::plain(4), {{1, 3}, {2, 3}, {3, 1}, {3, 2}, {3, 4}, {4, 1}}));
    RelStructure b = antidiagonal_structure(LinearGraph::signed_interval(3));
    StructureMap f(LinearGraph::signed_interval(3), LinearGraph::plain(4), {1, 2, 3, 4, 4, 3});
    std::ostringstream out;
    write_structure(out, "A", a);
    write_structure(out, "B", b);
    write_map(out, "f", "B", "A", f);
    CHECK(out.str().find("rel B antidiagonal") != std::string::npos);
    Document doc = parse_document(out.str());
    CHECK(doc.structure("A").structure == a);
    CHECK(doc.structure("B").structure == b);
    CHECK(doc.map("f").map == f);
    CHECK(doc.map("f").source == "B");
}
