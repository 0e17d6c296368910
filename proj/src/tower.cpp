#include "pseudoarc/tower.hpp"

#include "pseudoarc/membership.hpp"
#include "pseudoarc/text_format.hpp"

#include <algorithm>
#include <ostream>
#include <random>

namespace pseudoarc {

namespace {

// v -> sign(v) min(|v|, k): folds signed(K) onto signed(k) by stalling at
// +-k. Antisymmetric, and onto both r and the antidiagonal.
StructureMap clamp_map(const LinearGraph& from, int k) {
    return StructureMap::from_function(from, LinearGraph::signed_interval(k),
                                       [k](Vertex v) { return v > 0 ? std::min(v, k) : std::max(v, -k); });
}

std::string level_name(int n) {
    return "L" + std::to_string(n);
}

} // namespace

Tower new_tower() {
    LinearGraph g = LinearGraph::signed_interval(1);
    Tower t;
    t.levels.push_back(antidiagonal_structure(g));
    t.flips.push_back(flip(g).map);
    return t;
}

Tower extend_tower(const Tower& t, const RelStructure& target) {
    if (t.levels.empty())
        throw std::invalid_argument("cannot extend an empty tower");
    if (!target.has_relation() || !is_in_family_F(target))
        throw std::invalid_argument("target is not in F");
    AntidiagonalCover cover = cover_by_antidiagonal(target);
    LinearGraph half = LinearGraph::signed_interval(cover.cover.graph.size() / 2);
    StructureMap onto_target = compose(cover.map, signed_to_plain(half));

    // Joint projection of the top level and the relabelled cover through the
    // larger of the two, so level sizes grow no faster than the targets.
    LinearGraph level = LinearGraph::signed_interval(std::max(t.top().graph.parameter(), half.parameter()));

    Tower out = t;
    out.levels.push_back(antidiagonal_structure(level));
    out.bonds.push_back(clamp_map(level, t.top().graph.parameter()));
    out.flips.push_back(flip(level).map);
    out.covers.push_back({out.height() - 1, target, compose(onto_target, clamp_map(level, half.parameter()))});
    return out;
}

VerificationReport check_tower(const Tower& t) {
    VerificationReport report("tower");
    if (t.levels.empty()) {
        report.fail("tower has no levels");
        return report;
    }
    if (t.bonds.size() + 1 != t.levels.size() || t.flips.size() != t.levels.size()) {
        report.fail("tower has " + std::to_string(t.levels.size()) + " levels, " + std::to_string(t.bonds.size()) +
                    " bonds and " + std::to_string(t.flips.size()) + " flips");
        return report;
    }
    for (int n = 0; n < t.height(); ++n) {
        const RelStructure& level = t.levels[static_cast<std::size_t>(n)];
        const StructureMap& f = t.flips[static_cast<std::size_t>(n)];
        ++report.instances;
        if (!level.graph.is_signed() || !is_antidiagonal(level))
            report.fail("level " + std::to_string(n) + " is not a signed antidiagonal structure");
        ++report.instances;
        if (!(f.domain() == level.graph) || !is_epimorphism(f, level, level) ||
            !(compose(f, f) == StructureMap::identity(level.graph)))
            report.fail("flip at level " + std::to_string(n) + " is not an involutive automorphism");
    }
    for (int n = 0; n + 1 < t.height(); ++n) {
        const StructureMap& b = t.bonds[static_cast<std::size_t>(n)];
        const RelStructure& upper = t.levels[static_cast<std::size_t>(n + 1)];
        const RelStructure& lower = t.levels[static_cast<std::size_t>(n)];
        const std::string where = "bond " + std::to_string(n + 1) + " -> " + std::to_string(n);
        ++report.instances;
        if (!(b.domain() == upper.graph) || !(b.codomain() == lower.graph)) {
            report.fail(where + " has the wrong domain or codomain");
            continue;
        }
        if (!is_epimorphism(b, upper, lower))
            report.fail(where + " is not an epimorphism");
        ++report.instances;
        if (!is_antisymmetric(b))
            report.fail(where + " is not antisymmetric");
        ++report.instances;
        if (!(compose(t.flips[static_cast<std::size_t>(n)], b) == compose(b, t.flips[static_cast<std::size_t>(n + 1)])))
            report.fail(where + " does not commute with the flips");
    }
    for (const TowerCover& c : t.covers) {
        ++report.instances;
        if (c.level < 0 || c.level >= t.height()) {
            report.fail("cover recorded at missing level " + std::to_string(c.level));
            continue;
        }
        const RelStructure& level = t.levels[static_cast<std::size_t>(c.level)];
        if (!(c.map.domain() == level.graph) || !(c.map.codomain() == c.target.graph) ||
            !is_epimorphism(c.map, level, c.target))
            report.fail("level " + std::to_string(c.level) + " does not map onto its recorded target");
    }
    return report;
}

std::vector<RelStructure> coverable_targets(int max_target_size) {
    std::vector<RelStructure> out;
    for (RelStructure& a : family_members(max_target_size))
        if (a.relation().is_symmetric())
            out.push_back(std::move(a));
    return out;
}

Tower random_tower(int extensions, std::uint64_t seed, int max_target_size) {
    const auto targets = coverable_targets(max_target_size);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, targets.size() - 1);
    Tower t = new_tower();
    for (int i = 0; i < extensions; ++i)
        t = extend_tower(t, targets[pick(rng)]);
    return t;
}

void write_tower(std::ostream& out, const Tower& t) {
    for (int n = 0; n < t.height(); ++n) {
        out << "level " << n << '\n';
        write_structure(out, level_name(n), t.levels[static_cast<std::size_t>(n)]);
        if (n > 0)
            write_map(out, "b" + std::to_string(n), level_name(n), level_name(n - 1),
                      t.bonds[static_cast<std::size_t>(n - 1)]);
        int i = 0;
        for (const TowerCover& c : t.covers) {
            if (c.level != n)
                continue;
            std::string suffix = std::to_string(n) + "_" + std::to_string(i++);
            write_structure(out, "T" + suffix, c.target);
            write_map(out, "c" + suffix, level_name(n), "T" + suffix, c.map);
        }
    }
}

Tower read_tower(std::istream& in) {
    Document doc = parse_document(in);
    Tower t;
    std::vector<std::string> names;
    for (const NamedStructure& s : doc.structures) {
        if (s.level < 0)
            throw ParseError(0, "structure '" + s.name + "' is outside any level section");
        if (s.level == t.height()) {
            if (!s.structure.has_relation())
                throw ParseError(0, "level structure '" + s.name + "' has no relation");
            t.levels.push_back(s.structure);
            t.flips.push_back(flip(s.structure.graph).map);
            names.push_back(s.name);
        } else if (s.level != t.height() - 1) {
            throw ParseError(0, "level sections must be numbered 0, 1, 2, ... in order");
        }
    }
    for (int n = 1; n < t.height(); ++n) {
        const NamedMap* bond = nullptr;
        for (const NamedMap& m : doc.maps)
            if (m.level == n && m.source == names[static_cast<std::size_t>(n)] &&
                m.target == names[static_cast<std::size_t>(n - 1)])
                bond = &m;
        if (!bond)
            throw ParseError(0, "level " + std::to_string(n) + " has no bond");
        t.bonds.push_back(bond->map);
    }
    for (const NamedMap& m : doc.maps) {
        if (m.level < 0 || m.level >= t.height() || m.source != names[static_cast<std::size_t>(m.level)])
            throw ParseError(0, "map '" + m.name + "' does not start at its level");
        if (m.level > 0 && m.target == names[static_cast<std::size_t>(m.level - 1)])
            continue;
        const NamedStructure& target = doc.structure(m.target);
        if (!target.structure.has_relation())
            throw ParseError(0, "target '" + target.name + "' has no relation");
        t.covers.push_back({m.level, target.structure, m.map});
    }
    return t;
}

} // namespace pseudoarc
