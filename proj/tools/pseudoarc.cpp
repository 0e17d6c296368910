// pseudoarc: command line front end.
//
// Exit codes: 0 all checks passed, 1 a check or construction failed,
// 2 malformed input or invocation.

#include "pseudoarc/cap.hpp"
#include "pseudoarc/chessboard.hpp"
#include "pseudoarc/core.hpp"
#include "pseudoarc/membership.hpp"
#include "pseudoarc/render.hpp"
#include "pseudoarc/text_format.hpp"
#include "pseudoarc/tower.hpp"
#include "pseudoarc/verifiers.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

using namespace pseudoarc;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string file;
    std::string out;
    std::string targets;
    std::string variant = "g1";
    std::string svg_dir;
    std::string property;
    std::string first;
    std::string second;
    int max_size = -1;
    int instances = -1;
    int rows = 3;
    int cols = 3;
    int random = 0;
    std::uint64_t seed = 1;
    bool json = false;
    bool svg = false;
    bool ascii = false;
    bool exhaustive = false;
};

std::string yes_no(bool v, const std::string& yes, const std::string& no) {
    return v ? yes : no;
}

// The two maps a command works on: named with --first/--second, else the
// first two maps of the file.
std::pair<const NamedMap*, const NamedMap*> pick_maps(const Document& doc, const Options& o) {
    if (!o.first.empty() || !o.second.empty()) {
        if (o.first.empty() || o.second.empty())
            throw UsageError("--first and --second go together");
        return {&doc.map(o.first), &doc.map(o.second)};
    }
    if (doc.maps.size() < 2)
        throw UsageError("expected at least two maps in " + o.file);
    return {&doc.maps[0], &doc.maps[1]};
}

std::pair<const NamedStructure*, const NamedStructure*> pick_structures(const Document& doc, const Options& o) {
    if (!o.first.empty() || !o.second.empty()) {
        if (o.first.empty() || o.second.empty())
            throw UsageError("--first and --second go together");
        return {&doc.structure(o.first), &doc.structure(o.second)};
    }
    if (doc.structures.size() < 2)
        throw UsageError("expected at least two structures in " + o.file);
    return {&doc.structures[0], &doc.structures[1]};
}

int print_reports(const std::vector<VerificationReport>& reports, bool json) {
    bool ok = true;
    for (const auto& r : reports) {
        ok = ok && r.passed();
        if (json) {
            std::cout << to_json(r) << '\n';
            continue;
        }
        std::cout << summary_line(r) << '\n';
        for (const auto& f : r.failures)
            std::cout << "  " << f << '\n';
        if (r.failures.size() < r.failure_count)
            std::cout << "  ... " << r.failure_count - r.failures.size() << " more\n";
    }
    return ok ? 0 : 1;
}

int membership_check(const Options& o) {
    Document doc = load_document(o.file);
    for (const auto& ns : doc.structures) {
        if (!ns.structure.has_relation()) {
            std::cout << ns.name << ": no relation s\n";
            continue;
        }
        const Relation& s = ns.structure.relation();
        bool surj = is_surjective_relation(s), conn = is_connected_relation(s);
        std::cout << ns.name << ": " << yes_no(surj, "surjective", "not surjective") << "; "
                  << yes_no(conn, "connected", "not connected") << "; " << yes_no(surj && conn, "in F", "not in F")
                  << '\n';
    }
    return 0;
}

int membership_cover(const Options& o) {
    Document doc = load_document(o.file);
    int status = 0;
    for (const auto& ns : doc.structures) {
        if (!o.first.empty() && ns.name != o.first)
            continue;
        try {
            AntidiagonalCover c = cover_by_antidiagonal(ns.structure);
            bool ok = is_epimorphism(c.map, c.cover, ns.structure);
            write_structure(std::cout, ns.name, ns.structure);
            write_structure(std::cout, ns.name + "_cover", c.cover);
            write_map(std::cout, ns.name + "_phi", ns.name + "_cover", ns.name, c.map);
            std::cout << "# epimorphism check: " << yes_no(ok, "pass", "FAIL") << "\n\n";
            if (!ok)
                status = 1;
        } catch (const std::exception& e) {
            std::cerr << ns.name << ": " << e.what() << '\n';
            status = 1;
        }
    }
    return status;
}

int jpp(const Options& o) {
    Document doc = load_document(o.file);
    auto [a, b] = pick_structures(doc, o);
    JppWitness w = jpp_witness(a->structure, b->structure);
    bool ok1 = is_epimorphism(w.phi1, w.c, a->structure), ok2 = is_epimorphism(w.phi2, w.c, b->structure);
    write_structure(std::cout, a->name, a->structure);
    write_structure(std::cout, b->name, b->structure);
    write_structure(std::cout, "C", w.c);
    write_map(std::cout, "phi1", "C", a->name, w.phi1);
    write_map(std::cout, "phi2", "C", b->name, w.phi2);
    std::cout << "# phi1 epimorphism: " << yes_no(ok1, "pass", "FAIL") << '\n'
              << "# phi2 epimorphism: " << yes_no(ok2, "pass", "FAIL") << '\n';
    return ok1 && ok2 ? 0 : 1;
}

struct CapChecks {
    std::vector<std::pair<std::string, bool>> items;
    bool all() const {
        return std::all_of(items.begin(), items.end(), [](const auto& i) { return i.second; });
    }
};

CapChecks check_cap(const StructureMap& phi1, const StructureMap& phi2, const CapWitness& w) {
    auto unit = [](Vertex v) { return v == 1 || v == -1; };
    CapChecks c;
    c.items.emplace_back("D' is a signed antidiagonal structure", w.d.graph.is_signed() && is_antidiagonal(w.d));
    c.items.emplace_back("psi1 is an epimorphism", is_epimorphism(w.psi1, w.d, antidiagonal_structure(phi1.domain())));
    c.items.emplace_back("psi2 is an epimorphism", is_epimorphism(w.psi2, w.d, antidiagonal_structure(phi2.domain())));
    c.items.emplace_back("phi1 psi1 = phi2 psi2", compose(phi1, w.psi1) == compose(phi2, w.psi2));
    c.items.emplace_back("psi1(1), psi2(1) in {-1,1}", unit(w.psi1(1)) && unit(w.psi2(1)));
    return c;
}

void print_checks(const CapChecks& c) {
    for (const auto& [what, ok] : c.items)
        std::cout << "# " << (ok ? "PASS " : "FAIL ") << what << '\n';
}

int cap_amalgamate(const Options& o) {
    Document doc = load_document(o.file);
    auto [m1, m2] = pick_maps(doc, o);
    CapWitness w = cap_witness(m1->map, m2->map);
    write_structure(std::cout, "D", w.d);
    write_map(std::cout, "psi1", "D", m1->source, w.psi1);
    write_map(std::cout, "psi2", "D", m2->source, w.psi2);
    CapChecks checks = check_cap(m1->map, m2->map, w);
    print_checks(checks);
    return checks.all() ? 0 : 1;
}

GraphVariant parse_variant(const std::string& v) {
    if (v == "g0")
        return GraphVariant::g0;
    if (v == "g1")
        return GraphVariant::g1;
    if (v == "g2")
        return GraphVariant::g2;
    throw UsageError("unknown variant '" + v + "'");
}

int cap_graphs(const Options& o) {
    Document doc = load_document(o.file);
    auto [m1, m2] = pick_maps(doc, o);
    AmalgGraph g = build_amalg_graph(block_decomposition(m1->map), block_decomposition(m2->map),
                                     parse_variant(o.variant));
    if (o.svg)
        std::cout << graph_svg(g);
    else if (o.ascii)
        std::cout << graph_ascii(g);
    else
        for (const auto& [a, b] : g.edges())
            std::cout << to_string(a) << " - " << to_string(b) << '\n';
    return 0;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p);
    if (!out)
        throw std::runtime_error("cannot write " + p.string());
    out << text;
}

std::string positive_half(const StructureMap& f) {
    std::string out;
    for (Vertex v = 1; v <= f.domain().parameter(); ++v)
        out += (v > 1 ? "," : "") + std::to_string(f(v));
    return out;
}

std::string ranges(const BlockDecomposition& d) {
    std::string out;
    for (int i = 0; i < d.p(); ++i)
        out += (i ? " " : "") + to_string(d.block_range(i));
    return out;
}

std::string path_text(const CellPath& p) {
    std::string out;
    for (const Cell& c : p.cells)
        out += to_string(c);
    return out;
}

int cap_example(const Options& o) {
    auto [phi1, phi2] = reference_instance();
    BlockDecomposition d1 = block_decomposition(phi1), d2 = block_decomposition(phi2);
    std::cout << "A = " << phi1.codomain().describe() << ", B = " << phi1.domain().describe()
              << ", C = " << phi2.domain().describe() << '\n'
              << "phi1 on 1.." << phi1.domain().parameter() << ": " << positive_half(phi1) << '\n'
              << "phi2 on 1.." << phi2.domain().parameter() << ": " << positive_half(phi2) << "\n\n"
              << "breakpoints of phi1: " << d1.describe("s") << '\n'
              << "breakpoints of phi2: " << d2.describe("t") << '\n'
              << "block ranges of phi1 (blocks 0.." << d1.p() - 1 << "): " << ranges(d1) << '\n'
              << "block ranges of phi2 (blocks 0.." << d2.p() - 1 << "): " << ranges(d2) << "\n\n";

    Board board = product_coloring(phi1, phi2);
    AmalgGraph g1 = build_amalg_graph(d1, d2, GraphVariant::g1);
    AmalgGraph g2 = build_amalg_graph(d1, d2, GraphVariant::g2);
    std::cout << "product coloring (first coordinate across, second up):\n"
              << board_ascii(board) << "\nG1:\n"
              << graph_ascii(g1) << "\nG2:\n"
              << graph_ascii(g2) << '\n';

    CapWitness w = cap_witness(phi1, phi2);
    std::cout << "interior paths lifted to black 8-paths:\n"
              << "  left:   " << path_text(w.left) << '\n'
              << "  right:  " << path_text(w.right) << '\n'
              << "  bottom: " << path_text(w.bottom) << '\n'
              << "  top:    " << path_text(w.top) << '\n'
              << "amalgam D' = " << w.d.graph.describe() << '\n'
              << "psi1 = " << describe(w.psi1) << '\n'
              << "psi2 = " << describe(w.psi2) << "\n\n";
    CapChecks checks = check_cap(phi1, phi2, w);
    print_checks(checks);

    if (!o.svg_dir.empty()) {
        std::filesystem::path dir(o.svg_dir);
        std::filesystem::create_directories(dir);
        write_file(dir / "board.svg", board_svg(board));
        write_file(dir / "g1.svg", graph_svg(g1));
        write_file(dir / "g2.svg", graph_svg(g2));
        std::cout << "# wrote board.svg, g1.svg, g2.svg to " << dir.string() << '\n';
    }
    return checks.all() ? 0 : 1;
}

int chessboard_render(const Options& o) {
    Document doc = load_document(o.file);
    auto [m1, m2] = pick_maps(doc, o);
    Board b = product_coloring(m1->map, m2->map);
    std::cout << (o.svg ? board_svg(b) : board_ascii(b));
    return 0;
}

int chessboard_steinhaus(const Options& o) {
    if (!o.exhaustive)
        throw UsageError("only --exhaustive sweeps are supported");
    return print_reports({verify_steinhaus(o.rows, o.cols)}, o.json);
}

int verify(const Options& o) {
    auto pick = [](int given, int fallback) { return given >= 0 ? given : fallback; };
    const std::map<std::string, std::function<VerificationReport()>> props{
        {"membership", [&] { return verify_family_membership(pick(o.max_size, 3)); }},
        {"jpp", [&] { return verify_jpp(pick(o.max_size, 4)); }},
        {"ap-linear", [&] { return verify_ap_linear(pick(o.max_size, 4), pick(o.instances, 200), 6, o.seed); }},
        {"cap", [&] { return verify_cap(pick(o.instances, 500), pick(o.max_size, 8), o.seed, false); }},
        {"coinitiality", [&] { return verify_cap(0, 1, o.seed, true, pick(o.max_size, 4)); }},
        {"wap", [&] { return verify_wap(pick(o.max_size, 3), 2, o.seed); }},
        {"steinhaus", [&] { return verify_steinhaus(o.rows, o.cols); }},
        {"structural", [&] { return verify_structural_claims(pick(o.instances, 200), pick(o.max_size, 8), o.seed); }},
        {"tower", [&] { return check_tower(random_tower(pick(o.instances, 10), o.seed, pick(o.max_size, 4))); }},
    };
    auto it = props.find(o.property);
    if (it == props.end()) {
        std::string known;
        for (const auto& [name, fn] : props)
            known += " " + name;
        throw UsageError("unknown property '" + o.property + "'; known:" + known);
    }
    return print_reports({it->second()}, o.json);
}

int tower_build(const Options& o) {
    Tower t = new_tower();
    if (!o.targets.empty())
        for (const auto& ns : load_document(o.targets).structures)
            t = extend_tower(t, ns.structure);
    if (o.random > 0) {
        Tower extra = random_tower(o.random, o.seed);
        for (std::size_t i = 0; i < extra.covers.size(); ++i)
            t = extend_tower(t, extra.covers[i].target);
    }
    if (o.out.empty()) {
        write_tower(std::cout, t);
    } else {
        std::ofstream out(o.out);
        if (!out)
            throw std::runtime_error("cannot write " + o.out);
        write_tower(out, t);
    }
    std::cerr << "tower of height " << t.height() << ", top " << t.top().graph.describe() << '\n';
    return print_reports({check_tower(t)}, o.json);
}

int tower_check(const Options& o) {
    std::ifstream in(o.file);
    if (!in)
        throw ParseError(0, "cannot open " + o.file);
    return print_reports({check_tower(read_tower(in))}, o.json);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Epimorphisms of linear graphs with a relation: membership, amalgamation, chessboards, towers"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<int()> fn) {
        CLI::App* cmd = parent->add_subcommand(name, help);
        cmd->callback([&action, fn] { action = fn; });
        return cmd;
    };
    auto add_file = [&](CLI::App* cmd) { cmd->add_option("file", o.file, "input in the structure/map text format")->required(); };
    auto add_pair = [&](CLI::App* cmd) {
        cmd->add_option("--first", o.first, "name of the first map or structure");
        cmd->add_option("--second", o.second, "name of the second map or structure");
    };

    CLI::App* membership = app.add_subcommand("membership", "membership in F and antidiagonal covers");
    membership->require_subcommand(1);
    add_file(leaf(membership, "check", "surjective / connected / in-F verdict per structure", [&] { return membership_check(o); }));
    {
        auto* cmd = leaf(membership, "cover", "antidiagonal cover of each structure", [&] { return membership_cover(o); });
        add_file(cmd);
        cmd->add_option("--first", o.first, "only this structure");
    }
    {
        auto* cmd = leaf(&app, "jpp", "joint projection of two structures", [&] { return jpp(o); });
        add_file(cmd);
        add_pair(cmd);
    }

    CLI::App* cap = app.add_subcommand("cap", "amalgamation over signed antidiagonal structures");
    cap->require_subcommand(1);
    {
        auto* cmd = leaf(cap, "amalgamate", "amalgamate two antisymmetric epimorphisms", [&] { return cap_amalgamate(o); });
        add_file(cmd);
        add_pair(cmd);
        cmd = leaf(cap, "graphs", "block graph edge lists", [&] { return cap_graphs(o); });
        add_file(cmd);
        add_pair(cmd);
        cmd->add_option("--variant", o.variant, "g0, g1 or g2")->check(CLI::IsMember({"g0", "g1", "g2"}));
        auto* svg = cmd->add_flag("--svg", o.svg, "draw as SVG");
        cmd->add_flag("--ascii", o.ascii, "draw as text")->excludes(svg);
    }
    auto add_example = [&](CLI::App* parent) {
        auto* cmd = leaf(parent, "example", "the worked signed(8) -> signed(3) <- signed(9) instance", [&] { return cap_example(o); });
        cmd->add_option("--svg-dir", o.svg_dir, "also write board.svg, g1.svg, g2.svg here");
    };
    add_example(cap);
    add_example(&app);

    CLI::App* chess = app.add_subcommand("chessboard", "product colorings and the Steinhaus duality");
    chess->require_subcommand(1);
    {
        auto* cmd = leaf(chess, "render", "product coloring of two maps", [&] { return chessboard_render(o); });
        add_file(cmd);
        add_pair(cmd);
        auto* svg = cmd->add_flag("--svg", o.svg, "SVG output");
        cmd->add_flag("--ascii", o.ascii, "text output (default)")->excludes(svg);
        cmd = leaf(chess, "steinhaus", "duality sweep over all colorings", [&] { return chessboard_steinhaus(o); });
        cmd->add_option("--rows", o.rows)->check(CLI::PositiveNumber);
        cmd->add_option("--cols", o.cols)->check(CLI::PositiveNumber);
        cmd->add_flag("--exhaustive", o.exhaustive);
        cmd->add_flag("--json", o.json);
    }
    {
        auto* cmd = leaf(&app, "verify", "run a property sweep", [&] { return verify(o); });
        cmd->add_option("property", o.property,
                        "membership | jpp | ap-linear | cap | coinitiality | wap | steinhaus | structural | tower")
            ->required();
        cmd->add_option("--max-size", o.max_size)->check(CLI::PositiveNumber);
        cmd->add_option("--instances", o.instances)->check(CLI::NonNegativeNumber);
        cmd->add_option("--seed", o.seed);
        cmd->add_option("--rows", o.rows)->check(CLI::PositiveNumber);
        cmd->add_option("--cols", o.cols)->check(CLI::PositiveNumber);
        cmd->add_flag("--json", o.json);
    }

    CLI::App* tower = app.add_subcommand("tower", "finite inverse sequences of antidiagonal structures");
    tower->require_subcommand(1);
    {
        auto* cmd = leaf(tower, "build", "extend a fresh tower by targets", [&] { return tower_build(o); });
        cmd->add_option("--targets", o.targets, "file whose structures are covered, in order");
        cmd->add_option("--random", o.random, "additional random extensions")->check(CLI::NonNegativeNumber);
        cmd->add_option("--seed", o.seed);
        cmd->add_option("--out", o.out, "write the tower here instead of stdout");
        cmd->add_flag("--json", o.json);
        cmd = leaf(tower, "check", "re-validate a tower file", [&] { return tower_check(o); });
        add_file(cmd);
        cmd->add_flag("--json", o.json);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
