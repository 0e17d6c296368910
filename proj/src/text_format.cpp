#include "pseudoarc/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace pseudoarc {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

const NamedStructure* Document::find_structure(const std::string& name) const {
    auto it = std::find_if(structures.begin(), structures.end(), [&](const auto& s) { return s.name == name; });
    return it == structures.end() ? nullptr : &*it;
}

const NamedMap* Document::find_map(const std::string& name) const {
    auto it = std::find_if(maps.begin(), maps.end(), [&](const auto& m) { return m.name == name; });
    return it == maps.end() ? nullptr : &*it;
}

const NamedStructure& Document::structure(const std::string& name) const {
    if (const auto* s = find_structure(name))
        return *s;
    throw std::out_of_range("no graph named '" + name + "'");
}

const NamedMap& Document::map(const std::string& name) const {
    if (const auto* m = find_map(name))
        return *m;
    throw std::out_of_range("no map named '" + name + "'");
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream is(body);
    std::vector<std::string> tokens;
    for (std::string tok; is >> tok;)
        tokens.push_back(tok);
    return tokens;
}

int parse_int(const std::string& tok, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    return value;
}

struct PendingGraph {
    std::string name;
    LinearGraph graph;
    bool has_rel = false;
    std::vector<VertexPair> pairs;
    int level;
};

struct PendingMap {
    std::string name;
    std::string source;
    std::string target;
    LinearGraph domain;
    LinearGraph codomain;
    std::map<Vertex, Vertex> assignment;
    int declared_at;
    int level;
};

class Parser {
public:
    Document run(std::istream& in) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_;
            auto tokens = tokenize(raw);
            if (tokens.empty())
                continue;
            if (tokens.size() == 3 && tokens[1] == "->" && current_map_) {
                assign(tokens);
                continue;
            }
            close_map();
            const std::string& kw = tokens[0];
            if (kw == "graph")
                declare_graph(tokens);
            else if (kw == "rel")
                add_relation(tokens);
            else if (kw == "map")
                open_map(tokens);
            else if (kw == "level")
                set_level(tokens);
            else if (tokens.size() == 3 && tokens[1] == "->")
                throw ParseError(line_, "assignment outside a map block");
            else
                throw ParseError(line_, "unknown directive '" + kw + "'");
        }
        close_map();

        Document doc;
        for (auto& g : graphs_) {
            std::optional<Relation> s;
            if (g.has_rel)
                s = Relation(g.graph, std::move(g.pairs));
            doc.structures.push_back({g.name, RelStructure(g.graph, std::move(s)), g.level});
        }
        doc.maps = std::move(maps_);
        return doc;
    }

private:
    PendingGraph& graph_named(const std::string& name) {
        auto it = std::find_if(graphs_.begin(), graphs_.end(), [&](const auto& g) { return g.name == name; });
        if (it == graphs_.end())
            throw ParseError(line_, "unknown graph '" + name + "'");
        return *it;
    }

    bool name_taken(const std::string& name) const {
        return std::any_of(graphs_.begin(), graphs_.end(), [&](const auto& g) { return g.name == name; }) ||
               std::any_of(maps_.begin(), maps_.end(), [&](const auto& m) { return m.name == name; });
    }

    void declare_graph(const std::vector<std::string>& t) {
        if (t.size() != 4)
            throw ParseError(line_, "expected 'graph <name> plain|signed <size>'");
        if (name_taken(t[1]))
            throw ParseError(line_, "duplicate name '" + t[1] + "'");
        int size = parse_int(t[3], line_);
        GraphKind kind;
        if (t[2] == "plain")
            kind = GraphKind::plain;
        else if (t[2] == "signed")
            kind = GraphKind::signed_interval;
        else
            throw ParseError(line_, "graph kind must be plain or signed, got '" + t[2] + "'");
        try {
            graphs_.push_back({t[1], linear_graph(kind, size), false, {}, level_});
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_, e.what());
        }
    }

    void add_relation(const std::vector<std::string>& t) {
        auto& g = graph_named(t.size() > 1 ? t[1] : "");
        if (t.size() == 3 && t[2] == "antidiagonal") {
            auto anti = antidiagonal(g.graph).pairs();
            g.pairs.insert(g.pairs.end(), anti.begin(), anti.end());
        } else if (t.size() == 4) {
            Vertex a = parse_int(t[2], line_);
            Vertex b = parse_int(t[3], line_);
            if (!g.graph.contains(a) || !g.graph.contains(b))
                throw ParseError(line_, "unknown vertex in pair (" + t[2] + "," + t[3] + ") of " + g.name);
            g.pairs.emplace_back(a, b);
        } else {
            throw ParseError(line_, "expected 'rel <graph> <a> <b>' or 'rel <graph> antidiagonal'");
        }
        g.has_rel = true;
    }

    void open_map(const std::vector<std::string>& t) {
        if (t.size() != 4)
            throw ParseError(line_, "expected 'map <name> <src> <dst>'");
        if (name_taken(t[1]))
            throw ParseError(line_, "duplicate name '" + t[1] + "'");
        const auto& src = graph_named(t[2]);
        const auto& dst = graph_named(t[3]);
        current_map_ = PendingMap{t[1], t[2], t[3], src.graph, dst.graph, {}, line_, level_};
    }

    void assign(const std::vector<std::string>& t) {
        Vertex v = parse_int(t[0], line_);
        Vertex w = parse_int(t[2], line_);
        auto& m = *current_map_;
        if (!m.domain.contains(v))
            throw ParseError(line_, "unknown vertex " + t[0] + " in domain " + m.source);
        if (!m.codomain.contains(w))
            throw ParseError(line_, "unknown vertex " + t[2] + " in codomain " + m.target);
        if (!m.assignment.emplace(v, w).second)
            throw ParseError(line_, "duplicate assignment for vertex " + t[0] + " in map " + m.name);
    }

    void close_map() {
        if (!current_map_)
            return;
        auto& m = *current_map_;
        if (static_cast<int>(m.assignment.size()) != m.domain.size()) {
            for (Vertex v : m.domain.vertices()) {
                if (!m.assignment.count(v))
                    throw ParseError(m.declared_at, "map " + m.name + " leaves vertex " + std::to_string(v) +
                                                        " unassigned");
            }
        }
        std::vector<Vertex> images;
        for (Vertex v : m.domain.vertices())
            images.push_back(m.assignment.at(v));
        maps_.push_back({m.name, m.source, m.target, StructureMap(m.domain, m.codomain, std::move(images)), m.level});
        current_map_.reset();
    }

    void set_level(const std::vector<std::string>& t) {
        if (t.size() != 2)
            throw ParseError(line_, "expected 'level <n>'");
        level_ = parse_int(t[1], line_);
    }

    int line_ = 0;
    int level_ = -1;
    std::vector<PendingGraph> graphs_;
    std::vector<NamedMap> maps_;
    std::optional<PendingMap> current_map_;
};

} // namespace

Document parse_document(std::istream& in) {
    return Parser().run(in);
}

Document parse_document(const std::string& text) {
    std::istringstream is(text);
    return parse_document(is);
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open " + path);
    return parse_document(in);
}

void write_structure(std::ostream& out, const std::string& name, const RelStructure& a) {
    out << "graph " << name << (a.graph.is_signed() ? " signed " : " plain ") << a.graph.parameter() << '\n';
    if (!a.s)
        return;
    if (is_antidiagonal(a)) {
        out << "rel " << name << " antidiagonal\n";
        return;
    }
    for (const auto& [x, y] : a.s->pairs())
        out << "rel " << name << ' ' << x << ' ' << y << '\n';
}

void write_map(std::ostream& out, const std::string& name, const std::string& source, const std::string& target,
               const StructureMap& f) {
    out << "map " << name << ' ' << source << ' ' << target << '\n';
    for (Vertex v : f.domain().vertices())
        out << v << " -> " << f(v) << '\n';
}

} // namespace pseudoarc
