#include "pseudoarc/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace pseudoarc {

LinearGraph LinearGraph::plain(int n) {
    if (n < 1)
        throw std::invalid_argument("linear graph needs at least one vertex, got plain " + std::to_string(n));
    return LinearGraph(GraphKind::plain, n);
}

LinearGraph LinearGraph::signed_interval(int k) {
    if (k < 1)
        throw std::invalid_argument("signed linear graph needs k >= 1, got " + std::to_string(k));
    return LinearGraph(GraphKind::signed_interval, k);
}

LinearGraph LinearGraph::of_kind(GraphKind kind, int size) {
    return kind == GraphKind::plain ? plain(size) : signed_interval(size);
}

bool LinearGraph::contains(Vertex v) const {
    if (is_signed())
        return v != 0 && v >= -parameter_ && v <= parameter_;
    return v >= 1 && v <= parameter_;
}

int LinearGraph::position(Vertex v) const {
    if (!contains(v))
        throw std::out_of_range("vertex " + std::to_string(v) + " is not in " + describe());
    if (is_signed())
        return v < 0 ? v + parameter_ : v + parameter_ - 1;
    return v - 1;
}

Vertex LinearGraph::vertex_at(int pos) const {
    if (pos < 0 || pos >= size())
        throw std::out_of_range("position " + std::to_string(pos) + " outside " + describe());
    if (is_signed())
        return pos < parameter_ ? pos - parameter_ : pos - parameter_ + 1;
    return pos + 1;
}

std::vector<Vertex> LinearGraph::vertices() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int i = 0; i < size(); ++i)
        out.push_back(vertex_at(i));
    return out;
}

bool LinearGraph::adjacent(Vertex a, Vertex b) const {
    return std::abs(position(a) - position(b)) <= 1;
}

std::optional<Vertex> LinearGraph::next(Vertex v) const {
    int pos = position(v);
    if (pos + 1 >= size())
        return std::nullopt;
    return vertex_at(pos + 1);
}

std::string LinearGraph::describe() const {
    return (is_signed() ? "signed " : "plain ") + std::to_string(parameter_);
}

Relation::Relation(LinearGraph base, std::vector<VertexPair> pairs) : base_(base), pairs_(std::move(pairs)) {
    for (const auto& [a, b] : pairs_) {
        if (!base_.contains(a) || !base_.contains(b))
            throw std::invalid_argument("relation pair (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") leaves " + base_.describe());
    }
    // Vertex order coincides with integer order for both graph kinds.
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool Relation::contains(Vertex a, Vertex b) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), VertexPair{a, b});
}

bool Relation::is_symmetric() const {
    return std::all_of(pairs_.begin(), pairs_.end(), [&](const VertexPair& p) { return contains(p.second, p.first); });
}

StructureMap::StructureMap(LinearGraph domain, LinearGraph codomain, std::vector<Vertex> images)
    : domain_(domain), codomain_(codomain), images_(std::move(images)) {
    if (images_.size() != static_cast<std::size_t>(domain_.size()))
        throw std::invalid_argument("map needs exactly " + std::to_string(domain_.size()) + " images, got " +
                                    std::to_string(images_.size()));
    for (Vertex w : images_) {
        if (!codomain_.contains(w))
            throw std::invalid_argument("image " + std::to_string(w) + " is not a vertex of " + codomain_.describe());
    }
}

StructureMap StructureMap::identity(const LinearGraph& g) {
    return StructureMap(g, g, g.vertices());
}

bool StructureMap::is_surjective() const {
    std::vector<bool> hit(static_cast<std::size_t>(codomain_.size()), false);
    for (Vertex w : images_)
        hit[static_cast<std::size_t>(codomain_.position(w))] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

RelStructure::RelStructure(LinearGraph g, std::optional<Relation> rel) : graph(g), s(std::move(rel)) {
    if (s && !(s->base() == graph))
        throw std::invalid_argument("relation base differs from the structure's graph");
}

const Relation& RelStructure::relation() const {
    if (!s)
        throw std::invalid_argument("structure carries no relation s");
    return *s;
}

LinearGraph linear_graph(GraphKind kind, int size) {
    return LinearGraph::of_kind(kind, size);
}

Relation antidiagonal(const LinearGraph& g) {
    std::vector<VertexPair> pairs;
    for (Vertex v : g.vertices())
        pairs.emplace_back(v, g.is_signed() ? -v : g.size() + 1 - v);
    return Relation(g, std::move(pairs));
}

Relation identity_relation(const LinearGraph& g) {
    std::vector<VertexPair> pairs;
    for (Vertex v : g.vertices())
        pairs.emplace_back(v, v);
    return Relation(g, std::move(pairs));
}

RelStructure antidiagonal_structure(const LinearGraph& g) {
    return RelStructure(g, antidiagonal(g));
}

bool is_antidiagonal(const RelStructure& a) {
    return a.s && *a.s == antidiagonal(a.graph);
}

namespace {

bool preserves_linear_order(const StructureMap& f) {
    const LinearGraph& dom = f.domain();
    const LinearGraph& cod = f.codomain();
    std::vector<bool> edge_hit(static_cast<std::size_t>(cod.size()), false);
    for (int t = 0; t + 1 < dom.size(); ++t) {
        int a = cod.position(f.at_position(t));
        int b = cod.position(f.at_position(t + 1));
        if (std::abs(a - b) > 1)
            return false;
        if (a != b)
            edge_hit[static_cast<std::size_t>(std::min(a, b))] = true;
    }
    for (int u = 0; u + 1 < cod.size(); ++u) {
        if (!edge_hit[static_cast<std::size_t>(u)])
            return false;
    }
    return true;
}

bool preserves_relation(const StructureMap& f, const Relation& src, const Relation& dst) {
    std::vector<bool> hit(dst.size(), false);
    const auto& dst_pairs = dst.pairs();
    for (const auto& [a, b] : src.pairs()) {
        VertexPair image{f(a), f(b)};
        auto it = std::lower_bound(dst_pairs.begin(), dst_pairs.end(), image);
        if (it == dst_pairs.end() || *it != image)
            return false;
        hit[static_cast<std::size_t>(it - dst_pairs.begin())] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

} // namespace

bool is_epimorphism(const StructureMap& f) {
    return f.is_surjective() && preserves_linear_order(f);
}

bool is_epimorphism(const StructureMap& f, const RelStructure& source, const RelStructure& target) {
    if (!(f.domain() == source.graph) || !(f.codomain() == target.graph))
        throw std::invalid_argument("map " + f.domain().describe() + " -> " + f.codomain().describe() +
                                    " does not match structures " + source.graph.describe() + " -> " +
                                    target.graph.describe());
    if (source.has_relation() != target.has_relation())
        throw std::invalid_argument("relation s present on exactly one side");
    if (!is_epimorphism(f))
        return false;
    if (source.has_relation())
        return preserves_relation(f, *source.s, *target.s);
    return true;
}

std::uint64_t enumeration_budget() {
    constexpr std::uint64_t default_budget = 100'000'000ULL;
    if (const char* env = std::getenv("FF_MAX_ENUM")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("FF_MAX_ENUM is not a count: ") + env);
        }
    }
    return default_budget;
}

std::vector<StructureMap> enumerate_epimorphisms(const RelStructure& source, const RelStructure& target,
                                                 std::optional<std::uint64_t> budget) {
    const std::uint64_t cap = budget.value_or(enumeration_budget());
    const int n = source.graph.size();
    const int k = target.graph.size();
    std::uint64_t candidates = 1;
    for (int i = 0; i < n; ++i) {
        if (candidates > cap / static_cast<std::uint64_t>(k))
            throw BudgetExceeded("enumerating " + std::to_string(k) + "^" + std::to_string(n) +
                                 " maps exceeds the budget of " + std::to_string(cap));
        candidates *= static_cast<std::uint64_t>(k);
    }

    std::vector<StructureMap> out;
    std::vector<int> odometer(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> images(static_cast<std::size_t>(n));
    for (;;) {
        for (int i = 0; i < n; ++i)
            images[static_cast<std::size_t>(i)] = target.graph.vertex_at(odometer[static_cast<std::size_t>(i)]);
        StructureMap f(source.graph, target.graph, images);
        if (is_epimorphism(f, source, target))
            out.push_back(std::move(f));
        int i = n - 1;
        while (i >= 0 && odometer[static_cast<std::size_t>(i)] == k - 1)
            odometer[static_cast<std::size_t>(i--)] = 0;
        if (i < 0)
            break;
        ++odometer[static_cast<std::size_t>(i)];
    }
    return out;
}

StructureMap compose(const StructureMap& g, const StructureMap& f) {
    if (!(f.codomain() == g.domain()))
        throw std::invalid_argument("cannot compose: " + f.codomain().describe() + " is not " + g.domain().describe());
    std::vector<Vertex> images;
    images.reserve(f.images().size());
    for (Vertex v : f.images())
        images.push_back(g(v));
    return StructureMap(f.domain(), g.codomain(), std::move(images));
}

Automorphism flip(const LinearGraph& g) {
    if (g.size() == 1)
        return {StructureMap::identity(g), false};
    auto reversed = StructureMap::from_function(g, g, [&](Vertex v) { return g.vertex_at(g.size() - 1 - g.position(v)); });
    return {std::move(reversed), true};
}

bool is_antisymmetric(const StructureMap& f) {
    if (!f.domain().is_signed() || !f.codomain().is_signed())
        throw std::invalid_argument("antisymmetry needs signed domain and codomain");
    for (Vertex v = 1; v <= f.domain().parameter(); ++v) {
        if (f(-v) != -f(v))
            return false;
    }
    return true;
}

StructureMap plain_to_signed(const LinearGraph& plain_even) {
    if (plain_even.is_signed() || plain_even.size() % 2 != 0)
        throw std::invalid_argument("expected a plain graph of even size, got " + plain_even.describe());
    LinearGraph target = LinearGraph::signed_interval(plain_even.size() / 2);
    return StructureMap::from_function(plain_even, target, [&](Vertex v) { return target.vertex_at(v - 1); });
}

StructureMap signed_to_plain(const LinearGraph& signed_graph) {
    if (!signed_graph.is_signed())
        throw std::invalid_argument("expected a signed graph, got " + signed_graph.describe());
    LinearGraph target = LinearGraph::plain(signed_graph.size());
    return StructureMap::from_function(signed_graph, target, [&](Vertex v) { return signed_graph.position(v) + 1; });
}

std::string describe(const StructureMap& f) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < f.images().size(); ++i)
        os << (i ? "," : "") << f.images()[i];
    os << ')';
    return os.str();
}

} // namespace pseudoarc
