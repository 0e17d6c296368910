#pragma once

// Finite reflexive linear graphs, binary relations over them, structure maps
// and the epimorphism calculus.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pseudoarc {

using Vertex = int;
using VertexPair = std::pair<Vertex, Vertex>;

/// Raised when a construction that is guaranteed to succeed does not.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised when a brute-force enumeration would exceed its candidate budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class GraphKind { plain, signed_interval };

/// A finite reflexive linear graph. Plain graphs have vertices 1..n, signed
/// graphs -k..-1,1..k. Adjacency is "consecutive in vertex order", so -1 and
/// 1 are adjacent in a signed graph.
class LinearGraph {
public:
    static LinearGraph plain(int n);
    static LinearGraph signed_interval(int k);
    static LinearGraph of_kind(GraphKind kind, int size);

    GraphKind kind() const { return kind_; }
    bool is_signed() const { return kind_ == GraphKind::signed_interval; }
    /// n for plain(n), k for signed(k).
    int parameter() const { return parameter_; }
    int size() const { return is_signed() ? 2 * parameter_ : parameter_; }

    Vertex min_vertex() const { return is_signed() ? -parameter_ : 1; }
    Vertex max_vertex() const { return parameter_; }

    bool contains(Vertex v) const;
    /// Zero-based rank of v in vertex order. Throws for foreign vertices.
    int position(Vertex v) const;
    Vertex vertex_at(int pos) const;
    std::vector<Vertex> vertices() const;

    /// The reflexive adjacency r.
    bool adjacent(Vertex a, Vertex b) const;
    /// Vertex immediately after v in order, if any.
    std::optional<Vertex> next(Vertex v) const;

    std::string describe() const;

    friend bool operator==(const LinearGraph&, const LinearGraph&) = default;

private:
    LinearGraph(GraphKind kind, int parameter) : kind_(kind), parameter_(parameter) {}

    GraphKind kind_;
    int parameter_;
};

/// A binary relation on the vertices of a linear graph. Pairs are kept
/// sorted in vertex order and free of duplicates.
class Relation {
public:
    Relation(LinearGraph base, std::vector<VertexPair> pairs);

    const LinearGraph& base() const { return base_; }
    const std::vector<VertexPair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }
    bool contains(Vertex a, Vertex b) const;
    bool is_symmetric() const;

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    LinearGraph base_;
    std::vector<VertexPair> pairs_;
};

/// A total vertex map between two linear graphs.
class StructureMap {
public:
    /// images[i] is the image of domain.vertex_at(i).
    StructureMap(LinearGraph domain, LinearGraph codomain, std::vector<Vertex> images);
    /// Builds a map from a function on domain vertices.
    template <typename F>
    static StructureMap from_function(const LinearGraph& domain, const LinearGraph& codomain, F&& f) {
        std::vector<Vertex> images;
        images.reserve(static_cast<std::size_t>(domain.size()));
        for (Vertex v : domain.vertices())
            images.push_back(f(v));
        return StructureMap(domain, codomain, std::move(images));
    }
    static StructureMap identity(const LinearGraph& g);

    const LinearGraph& domain() const { return domain_; }
    const LinearGraph& codomain() const { return codomain_; }
    const std::vector<Vertex>& images() const { return images_; }

    Vertex operator()(Vertex v) const { return images_[static_cast<std::size_t>(domain_.position(v))]; }
    Vertex at_position(int pos) const { return images_[static_cast<std::size_t>(pos)]; }

    bool is_surjective() const;

    friend bool operator==(const StructureMap&, const StructureMap&) = default;

private:
    LinearGraph domain_;
    LinearGraph codomain_;
    std::vector<Vertex> images_;
};

/// A linear graph, optionally carrying the extra binary relation s.
struct RelStructure {
    LinearGraph graph;
    std::optional<Relation> s;

    RelStructure(LinearGraph g, std::optional<Relation> rel = std::nullopt);

    bool has_relation() const { return s.has_value(); }
    const Relation& relation() const;

    friend bool operator==(const RelStructure&, const RelStructure&) = default;
};

LinearGraph linear_graph(GraphKind kind, int size);

/// {(k, n+1-k)} on plain [n]; {(i, -i)} on signed graphs.
Relation antidiagonal(const LinearGraph& g);
Relation identity_relation(const LinearGraph& g);

RelStructure antidiagonal_structure(const LinearGraph& g);
bool is_antidiagonal(const RelStructure& a);

/// Surjective, and the relation r (and s when present) holds between two
/// target vertices exactly when it holds between some preimages.
bool is_epimorphism(const StructureMap& f, const RelStructure& source, const RelStructure& target);
/// r-only check.
bool is_epimorphism(const StructureMap& f);

/// Upper bound on |target|^|source| candidate maps; FF_MAX_ENUM overrides.
std::uint64_t enumeration_budget();

/// Every epimorphism source -> target, lexicographic by image sequence.
std::vector<StructureMap> enumerate_epimorphisms(const RelStructure& source, const RelStructure& target,
                                                 std::optional<std::uint64_t> budget = std::nullopt);

/// g after f.
StructureMap compose(const StructureMap& g, const StructureMap& f);

struct Automorphism {
    StructureMap map;
    /// False for a one-vertex graph, where the identity is returned.
    bool nontrivial;
};

/// The order-reversing automorphism: i -> n+1-i, or i -> -i on signed graphs.
Automorphism flip(const LinearGraph& g);

/// phi(-i) == -phi(i) for every i; both sides must be signed graphs.
bool is_antisymmetric(const StructureMap& f);

/// Order-preserving relabelings between plain [2k] and signed(k).
StructureMap plain_to_signed(const LinearGraph& plain_even);
StructureMap signed_to_plain(const LinearGraph& signed_graph);

/// Images listed in domain order, for diagnostics.
std::string describe(const StructureMap& f);

} // namespace pseudoarc
