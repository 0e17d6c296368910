#include "pseudoarc/verifiers.hpp"

#include "pseudoarc/cap.hpp"
#include "pseudoarc/chessboard.hpp"
#include "pseudoarc/membership.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <deque>
#include <set>
#include <sstream>

namespace pseudoarc {

namespace {

constexpr std::size_t kStoredFailures = 25;

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string describe_relation(const RelStructure& a) {
    std::ostringstream os;
    os << a.graph.describe() << " {";
    if (a.s) {
        bool first = true;
        for (const auto& [x, y] : a.s->pairs()) {
            os << (first ? "" : ",") << '(' << x << ',' << y << ')';
            first = false;
        }
    }
    os << '}';
    return os.str();
}

bool agree_pointwise(const StructureMap& f, const StructureMap& g) {
    return f.domain() == g.domain() && f.images() == g.images();
}

} // namespace

void VerificationReport::fail(std::string description) {
    ++failure_count;
    if (failures.size() < kStoredFailures)
        failures.push_back(std::move(description));
}

std::string to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["property"] = r.property;
    j["passed"] = r.passed();
    j["instances"] = r.instances;
    j["failure_count"] = r.failure_count;
    j["failures"] = r.failures;
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j.dump();
}

std::string summary_line(const VerificationReport& r) {
    std::ostringstream os;
    os << (r.passed() ? "PASS " : "FAIL ") << r.property << ": " << r.instances << " instances, " << r.failure_count
       << " failures";
    return os.str();
}

std::vector<Relation> all_relations(const LinearGraph& g) {
    const int n = g.size();
    if (n * n > 20)
        throw BudgetExceeded("2^" + std::to_string(n * n) + " relations is too many to list");
    std::vector<VertexPair> universe;
    for (Vertex a : g.vertices())
        for (Vertex b : g.vertices())
            universe.emplace_back(a, b);
    std::vector<Relation> out;
    const std::uint32_t count = 1u << universe.size();
    out.reserve(count);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        std::vector<VertexPair> pairs;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (mask >> i & 1u)
                pairs.push_back(universe[i]);
        out.emplace_back(g, std::move(pairs));
    }
    return out;
}

std::vector<RelStructure> family_members(int max_size) {
    std::vector<RelStructure> out;
    for (int n = 1; n <= max_size; ++n) {
        LinearGraph g = LinearGraph::plain(n);
        for (Relation& s : all_relations(g)) {
            RelStructure a(g, std::move(s));
            if (is_in_family_F(a))
                out.push_back(std::move(a));
        }
    }
    return out;
}

bool antidiagonal_cover_exists(const RelStructure& a, int max_half) {
    const Relation& s = a.relation();
    const auto& pairs = s.pairs();
    const std::size_t count = pairs.size();
    if (count == 0 || max_half < 1)
        return false;
    if (count > 24)
        throw BudgetExceeded("coverage mask over " + std::to_string(count) + " pairs is too large");

    const LinearGraph& g = a.graph;
    std::vector<bool> vertex_seen(static_cast<std::size_t>(g.size()), false);
    for (const auto& [x, y] : pairs) {
        vertex_seen[static_cast<std::size_t>(g.position(x))] = true;
        vertex_seen[static_cast<std::size_t>(g.position(y))] = true;
    }
    if (std::find(vertex_seen.begin(), vertex_seen.end(), false) != vertex_seen.end())
        return false;

    // A half-walk position may sit on (x,y) only if (y,x) is also in s; its
    // coverage bit set marks both.
    std::vector<std::uint32_t> visit_bits(count, 0);
    std::vector<bool> usable(count, false);
    for (std::size_t i = 0; i < count; ++i) {
        auto [x, y] = pairs[i];
        auto it = std::lower_bound(pairs.begin(), pairs.end(), VertexPair{y, x});
        if (it != pairs.end() && *it == VertexPair{y, x}) {
            usable[i] = true;
            visit_bits[i] = (1u << i) | (1u << static_cast<std::size_t>(it - pairs.begin()));
        }
    }
    const std::uint32_t full = count == 32 ? ~0u : (1u << count) - 1u;

    std::vector<std::vector<std::size_t>> steps(count);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j)
            if (usable[i] && usable[j] && g.adjacent(pairs[i].first, pairs[j].first) &&
                g.adjacent(pairs[i].second, pairs[j].second))
                steps[i].push_back(j);

    std::vector<std::vector<bool>> seen(count, std::vector<bool>(std::size_t{1} << count, false));
    struct State {
        std::size_t pair;
        std::uint32_t mask;
        int length;
    };
    std::deque<State> queue;
    for (std::size_t i = 0; i < count; ++i) {
        if (usable[i]) {
            seen[i][visit_bits[i]] = true;
            queue.push_back({i, visit_bits[i], 1});
        }
    }
    while (!queue.empty()) {
        State st = queue.front();
        queue.pop_front();
        const auto& [x, y] = pairs[st.pair];
        if (st.mask == full && g.adjacent(x, y))
            return true;
        if (st.length == max_half)
            continue;
        for (std::size_t j : steps[st.pair]) {
            std::uint32_t mask = st.mask | visit_bits[j];
            if (!seen[j][mask]) {
                seen[j][mask] = true;
                queue.push_back({j, mask, st.length + 1});
            }
        }
    }
    return false;
}

namespace {

StructureMap antisymmetric_from_half(const std::vector<Vertex>& half, int k) {
    LinearGraph dom = LinearGraph::signed_interval(static_cast<int>(half.size()));
    LinearGraph cod = LinearGraph::signed_interval(k);
    return StructureMap::from_function(dom, cod, [&](Vertex v) {
        Vertex w = half[static_cast<std::size_t>(std::abs(v) - 1)];
        return v > 0 ? w : -w;
    });
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

} // namespace

StructureMap random_antisymmetric_epimorphism(int k, int l, std::mt19937_64& rng) {
    if (k < 1 || l < k)
        throw std::invalid_argument("need 1 <= k <= l");
    LinearGraph a = LinearGraph::signed_interval(k);
    for (int attempt = 0; attempt < 10'000'000; ++attempt) {
        std::vector<Vertex> walk{uniform(rng, 0, 1) ? 1 : -1};
        while (static_cast<int>(walk.size()) < l) {
            int pos = a.position(walk.back()) + uniform(rng, -1, 1);
            pos = std::clamp(pos, 0, a.size() - 1);
            walk.push_back(a.vertex_at(pos));
        }
        if (std::abs(walk.back()) == k)
            return antisymmetric_from_half(walk, k);
    }
    throw std::runtime_error("rejection sampling did not reach +-k");
}

StructureMap random_detour_epimorphism(int k, int l, std::mt19937_64& rng) {
    if (k < 1 || l < k)
        throw std::invalid_argument("need 1 <= k <= l");
    LinearGraph a = LinearGraph::signed_interval(k);
    std::vector<Vertex> walk;
    for (Vertex v = 1; v <= k; ++v)
        walk.push_back(v);
    while (static_cast<int>(walk.size()) < l) {
        std::size_t at = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(walk.size()) - 1));
        Vertex v = walk[at];
        if (static_cast<int>(walk.size()) + 2 <= l && uniform(rng, 0, 1)) {
            int pos = a.position(v);
            int side = pos == 0 ? 1 : pos == a.size() - 1 ? -1 : (uniform(rng, 0, 1) ? 1 : -1);
            Vertex w = a.vertex_at(pos + side);
            walk.insert(walk.begin() + static_cast<std::ptrdiff_t>(at) + 1, {w, v});
        } else {
            walk.insert(walk.begin() + static_cast<std::ptrdiff_t>(at) + 1, v);
        }
    }
    if (uniform(rng, 0, 1))
        for (Vertex& v : walk)
            v = -v;
    return antisymmetric_from_half(walk, k);
}

StructureMap random_linear_epimorphism(int k, int l, std::mt19937_64& rng) {
    if (k < 1 || l < k)
        throw std::invalid_argument("need 1 <= k <= l");
    LinearGraph dom = LinearGraph::plain(l), cod = LinearGraph::plain(k);
    for (int attempt = 0; attempt < 10'000'000; ++attempt) {
        std::vector<Vertex> walk{uniform(rng, 1, k)};
        while (static_cast<int>(walk.size()) < l)
            walk.push_back(std::clamp(walk.back() + uniform(rng, -1, 1), 1, k));
        StructureMap f(dom, cod, walk);
        if (f.is_surjective())
            return f;
    }
    throw std::runtime_error("rejection sampling did not produce a surjection");
}

VerificationReport verify_family_membership(int max_size) {
    if (max_size < 1 || max_size > 4)
        throw std::invalid_argument("membership sweep supports sizes 1..4");
    Stopwatch clock;
    VerificationReport report{"family-membership"};
    for (int n = 1; n <= max_size; ++n) {
        LinearGraph g = LinearGraph::plain(n);
        for (Relation& s : all_relations(g)) {
            RelStructure a(g, std::move(s));
            ++report.instances;
            bool member = is_in_family_F(a);
            bool covered = antidiagonal_cover_exists(a, 4 * static_cast<int>(a.s->size()));
            if (member != covered)
                report.fail(describe_relation(a) + ": surjective and connected = " + (member ? "yes" : "no") +
                            ", antidiagonal cover within bound = " + (covered ? "yes" : "no"));
        }
    }
    report.elapsed_seconds = clock.seconds();
    return report;
}

namespace {

void check_jpp_pair(VerificationReport& report, const RelStructure& a, const RelStructure& b) {
    ++report.instances;
    try {
        JppWitness w = jpp_witness(a, b);
        if (!is_antidiagonal(w.c) || !is_epimorphism(w.phi1, w.c, a) || !is_epimorphism(w.phi2, w.c, b))
            report.fail("jpp witness for " + describe_relation(a) + " and " + describe_relation(b) +
                        " fails the epimorphism check");
    } catch (const std::exception& e) {
        report.fail("jpp for " + describe_relation(a) + " and " + describe_relation(b) + ": " + e.what());
    }
}

} // namespace

VerificationReport verify_jpp(int max_size, int max_antidiagonal) {
    Stopwatch clock;
    VerificationReport report{"jpp"};
    for (int k = 1; k <= max_antidiagonal; ++k)
        for (int n = 1; n <= max_antidiagonal; ++n)
            check_jpp_pair(report, antidiagonal_structure(LinearGraph::plain(k)),
                           antidiagonal_structure(LinearGraph::plain(n)));

    // All ordered pairs among members of size <= 3; larger members are
    // paired with themselves and with the one-point member.
    const auto members = family_members(max_size);
    const RelStructure point(LinearGraph::plain(1), identity_relation(LinearGraph::plain(1)));
    for (const auto& a : members) {
        if (a.graph.size() <= 3) {
            for (const auto& b : members)
                if (b.graph.size() <= 3)
                    check_jpp_pair(report, a, b);
        } else {
            check_jpp_pair(report, a, a);
            check_jpp_pair(report, a, point);
        }
    }
    report.elapsed_seconds = clock.seconds();
    return report;
}

namespace {

void check_linear_amalgam(VerificationReport& report, const StructureMap& alpha, const StructureMap& beta) {
    ++report.instances;
    try {
        LinearAmalgam am = solecki_amalgamate(alpha, beta);
        bool ok = is_epimorphism(am.gamma) && is_epimorphism(am.delta) &&
                  agree_pointwise(compose(alpha, am.gamma), compose(beta, am.delta));
        if (!ok)
            report.fail("amalgam of " + describe(alpha) + " and " + describe(beta) + " fails the oracle");
    } catch (const std::exception& e) {
        report.fail("amalgam of " + describe(alpha) + " and " + describe(beta) + ": " + e.what());
    }
}

} // namespace

VerificationReport verify_ap_linear(int max_size, int random_instances, int random_max_size, std::uint64_t seed) {
    Stopwatch clock;
    VerificationReport report{"ap-linear"};
    for (int k = 1; k <= max_size; ++k) {
        RelStructure a(LinearGraph::plain(k));
        for (int l = k; l <= max_size; ++l) {
            auto left = enumerate_epimorphisms(RelStructure(LinearGraph::plain(l)), a);
            for (int m = k; m <= max_size; ++m) {
                auto right = enumerate_epimorphisms(RelStructure(LinearGraph::plain(m)), a);
                for (const auto& alpha : left)
                    for (const auto& beta : right)
                        check_linear_amalgam(report, alpha, beta);
            }
        }
    }
    std::mt19937_64 rng(seed);
    for (int t = 0; t < random_instances; ++t) {
        int l = uniform(rng, 1, random_max_size), m = uniform(rng, 1, random_max_size);
        int k = uniform(rng, 1, std::min(l, m));
        check_linear_amalgam(report, random_linear_epimorphism(k, l, rng), random_linear_epimorphism(k, m, rng));
    }
    report.elapsed_seconds = clock.seconds();
    return report;
}

namespace {

bool in_unit_pair(Vertex v) {
    return v == 1 || v == -1;
}

void check_cap_instance(VerificationReport& report, const StructureMap& phi1, const StructureMap& phi2,
                        const StructureMap* outer = nullptr) {
    ++report.instances;
    try {
        CapWitness w = cap_witness(phi1, phi2);
        std::string problem;
        if (!is_antidiagonal(w.d) || !w.d.graph.is_signed())
            problem = "amalgam is not a signed antidiagonal structure";
        else if (!is_epimorphism(w.psi1, w.d, antidiagonal_structure(phi1.domain())))
            problem = "psi1 is not an epimorphism";
        else if (!is_epimorphism(w.psi2, w.d, antidiagonal_structure(phi2.domain())))
            problem = "psi2 is not an epimorphism";
        else if (!agree_pointwise(compose(phi1, w.psi1), compose(phi2, w.psi2)))
            problem = "square does not commute";
        else if (!in_unit_pair(w.psi1(1)) || !in_unit_pair(w.psi2(1)))
            problem = "psi(1) is not +-1";
        else if (outer && !agree_pointwise(compose(*outer, compose(phi1, w.psi1)),
                                           compose(*outer, compose(phi2, w.psi2))))
            problem = "square over the base does not commute";
        if (!problem.empty())
            report.fail(problem + " for " + describe(phi1) + " / " + describe(phi2));
    } catch (const std::exception& e) {
        report.fail(std::string(e.what()) + " for " + describe(phi1) + " / " + describe(phi2));
    }
}

} // namespace

VerificationReport verify_cap(int instances, int max_size, std::uint64_t seed, bool include_coinitiality,
                              int coinitial_max_size) {
    Stopwatch clock;
    VerificationReport report{"cap"};
    auto [phi1, phi2] = reference_instance();
    check_cap_instance(report, phi1, phi2);
    for (int k = 1; k <= 3; ++k) {
        auto id = StructureMap::identity(LinearGraph::signed_interval(k));
        check_cap_instance(report, id, id);
    }
    std::mt19937_64 rng(seed);
    for (int t = 0; t < instances; ++t) {
        int k = uniform(rng, 1, max_size);
        int l = uniform(rng, k, max_size), m = uniform(rng, k, max_size);
        check_cap_instance(report, random_antisymmetric_epimorphism(k, l, rng),
                           random_antisymmetric_epimorphism(k, m, rng));
    }
    if (include_coinitiality) {
        for (const auto& a : family_members(coinitial_max_size)) {
            ++report.instances;
            try {
                AntidiagonalCover cover = cover_by_antidiagonal(a);
                Doubling twice = double_antidiagonal(cover.cover);
                StructureMap chain = compose(cover.map, twice.phi);
                if (twice.b.graph.size() % 2 != 0 || !is_epimorphism(chain, twice.b, a))
                    report.fail("coinitiality: even antidiagonal chain onto " + describe_relation(a) + " fails");
            } catch (const std::exception& e) {
                report.fail("coinitiality: " + describe_relation(a) + ": " + e.what());
            }
        }
    }
    report.elapsed_seconds = clock.seconds();
    return report;
}

VerificationReport verify_wap(int max_size, int cospans_per_member, std::uint64_t seed) {
    Stopwatch clock;
    VerificationReport report{"wap"};
    std::mt19937_64 rng(seed);
    for (const auto& a : family_members(max_size)) {
        std::optional<StructureMap> base;
        try {
            AntidiagonalCover cover = cover_by_antidiagonal(a);
            base = compose(cover.map, signed_to_plain(LinearGraph::signed_interval(cover.cover.graph.size() / 2)));
        } catch (const std::exception& e) {
            ++report.instances;
            report.fail("wap: no (B, phi) for " + describe_relation(a) + ": " + e.what());
            continue;
        }
        const int k = base->domain().parameter();
        for (int c = 0; c < cospans_per_member; ++c) {
            int l = uniform(rng, k, k + 3), m = uniform(rng, k, k + 3);
            check_cap_instance(report, random_detour_epimorphism(k, l, rng), random_detour_epimorphism(k, m, rng),
                               &*base);
        }
    }
    report.elapsed_seconds = clock.seconds();
    return report;
}

VerificationReport verify_steinhaus(int rows, int cols) {
    if (rows < 1 || cols < 1 || rows * cols > 16)
        throw std::invalid_argument("steinhaus sweep supports boards with at most 16 cells");
    Stopwatch clock;
    VerificationReport report{"steinhaus " + std::to_string(rows) + "x" + std::to_string(cols)};
    Board board(LinearGraph::plain(rows), LinearGraph::plain(cols));
    const int cells = rows * cols;
    auto bit = [&](const Cell& c) { return 1u << ((c.row - 1) * cols + (c.col - 1)); };

    std::vector<std::uint32_t> nbr4(static_cast<std::size_t>(cells)), nbr8(static_cast<std::size_t>(cells));
    for (const Cell& c : board.cells()) {
        auto i = static_cast<std::size_t>(std::countr_zero(bit(c)));
        for (const Cell& n : board.neighbors(c, Adjacency::four))
            nbr4[i] |= bit(n);
        for (const Cell& n : board.neighbors(c, Adjacency::eight))
            nbr8[i] |= bit(n);
    }
    auto mask_of = [&](const std::vector<Cell>& arc) {
        std::uint32_t m = 0;
        for (const Cell& c : arc)
            m |= bit(c);
        return m;
    };
    struct ArcMasks {
        std::uint32_t wx, xy, yz, zw;
        OrientedQuadruple q;
    };
    std::vector<ArcMasks> quads;
    for (const auto& q : oriented_quadruples(board))
        quads.push_back({mask_of(clockwise_arc(board, q.w, q.x)), mask_of(clockwise_arc(board, q.x, q.y)),
                         mask_of(clockwise_arc(board, q.y, q.z)), mask_of(clockwise_arc(board, q.z, q.w)), q});

    auto components = [&](std::uint32_t allowed, const std::vector<std::uint32_t>& nbr) {
        std::vector<std::uint32_t> out;
        std::uint32_t left = allowed;
        while (left) {
            std::uint32_t comp = left & (~left + 1u);
            for (std::uint32_t grown = 0; grown != comp;) {
                grown = comp;
                for (std::uint32_t b = comp; b; b &= b - 1)
                    comp |= nbr[static_cast<std::size_t>(std::countr_zero(b))] & allowed;
            }
            out.push_back(comp);
            left &= ~comp;
        }
        return out;
    };
    auto joins = [](const std::vector<std::uint32_t>& comps, std::uint32_t a, std::uint32_t b) {
        return std::any_of(comps.begin(), comps.end(), [&](std::uint32_t c) { return (c & a) && (c & b); });
    };

    const std::uint32_t all = cells == 32 ? ~0u : (1u << cells) - 1u;
    for (std::uint32_t black = 0; black <= all; ++black) {
        auto black8 = components(black, nbr8);
        auto white4 = components(all & ~black, nbr4);
        for (const auto& q : quads) {
            ++report.instances;
            if (joins(black8, q.wx, q.yz) == joins(white4, q.xy, q.zw))
                report.fail("coloring " + std::to_string(black) + ", quadruple " + to_string(q.q.w) +
                            to_string(q.q.x) + to_string(q.q.y) + to_string(q.q.z));
        }
        if (black == all)
            break;
    }
    report.elapsed_seconds = clock.seconds();
    return report;
}

namespace {

bool centrally_symmetric(const AmalgGraph& g) {
    for (const auto& [a, b] : g.edges())
        if (!g.has_edge({-a.row, -a.col}, {-b.row, -b.col}))
            return false;
    return true;
}

std::string claim_check(const AmalgGraph& g) {
    for (int i = -g.p() + 1; i < g.p(); ++i)
        for (int j = -g.q() + 1; j < g.q(); ++j) {
            int degree = 0;
            for (const auto& [a, b] : g.edges())
                degree += (a == Cell{i, j}) + (b == Cell{i, j});
            if (degree != 2)
                return to_string(g.variant()) + ": interior node " + to_string(Cell{i, j}) + " has degree " +
                       std::to_string(degree);
        }
    const Cell center{0, 0};
    for (const Cell& first : g.neighbors(center)) {
        Cell prev = center, cur = first;
        std::set<Cell> seen{center};
        while (std::abs(cur.row) < g.p() && std::abs(cur.col) < g.q()) {
            if (cur == center)
                return to_string(g.variant()) + ": degree-2 walk returns to (0,0)";
            if (!seen.insert(cur).second)
                return to_string(g.variant()) + ": degree-2 walk cycles";
            auto nbrs = g.neighbors(cur);
            Cell next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
            prev = cur;
            cur = next;
        }
    }
    return {};
}

} // namespace

VerificationReport verify_structural_claims(int instances, int max_size, std::uint64_t seed) {
    Stopwatch clock;
    VerificationReport report{"structural-claims"};
    std::mt19937_64 rng(seed);
    auto [ref1, ref2] = reference_instance();
    for (int t = -1; t < instances; ++t) {
        StructureMap phi1 = ref1, phi2 = ref2;
        if (t >= 0) {
            int k = uniform(rng, 1, max_size);
            phi1 = random_antisymmetric_epimorphism(k, uniform(rng, k, max_size), rng);
            phi2 = random_antisymmetric_epimorphism(k, uniform(rng, k, max_size), rng);
        }
        ++report.instances;
        const std::string tag = " for " + describe(phi1) + " / " + describe(phi2);
        try {
            if (!corner_dichotomy_holds(product_coloring(phi1, phi2)))
                report.fail("corner dichotomy fails" + tag);
            BlockDecomposition d1 = block_decomposition(phi1), d2 = block_decomposition(phi2);
            for (const auto* d : {&d1, &d2}) {
                const StructureMap& f = d->map();
                const int p = d->p(), size = f.domain().parameter();
                bool ok = d->s(0) == 1 && d->s_prime(0) == -1 && d->s_prime(p) == size && d->s(-p) == -size;
                for (int i = -p; i < p; ++i) {
                    ok = ok && d->s(i) == -d->s_prime(-i);
                    for (Vertex v = d->block_start(i); v <= d->block_end(i); v = v == -1 ? 1 : v + 1)
                        ok = ok && (f(v) > 0) == (d->block_sign(i) > 0);
                }
                if (!ok)
                    report.fail("block decomposition invariants fail" + tag);
            }
            for (GraphVariant v : {GraphVariant::g0, GraphVariant::g1, GraphVariant::g2}) {
                AmalgGraph g = build_amalg_graph(d1, d2, v);
                if (!centrally_symmetric(g))
                    report.fail(to_string(v) + " is not centrally symmetric" + tag);
                if (v == GraphVariant::g0)
                    continue;
                if (auto problem = claim_check(g); !problem.empty())
                    report.fail(problem + tag);
            }
            AmalgGraph g1 = build_amalg_graph(d1, d2, GraphVariant::g1);
            const int k = phi1.codomain().parameter();
            for (int i = -d1.p(); i < d1.p(); ++i) {
                if (d1.block_range(i) != Interval{1, k})
                    continue;
                for (int j = -d2.p(); j <= d2.p(); ++j)
                    if (g1.has_edge({i, j}, {i + 1, j}))
                        report.fail("G1 crosses the full-range column " + std::to_string(i) + tag);
            }
        } catch (const std::exception& e) {
            report.fail(e.what() + tag);
        }
    }
    report.elapsed_seconds = clock.seconds();
    return report;
}

} // namespace pseudoarc
