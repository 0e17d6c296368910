#pragma once

// Membership in the family F of structures (A, s) where s is surjective and
// connected, and the antidiagonal cover of a member.

#include "pseudoarc/core.hpp"

#include <cstddef>
#include <vector>

namespace pseudoarc {

/// The graph whose vertices are the pairs of s, two pairs being joined when
/// their coordinates are r-adjacent coordinatewise.
struct RelationGraph {
    std::vector<VertexPair> vertices;
    /// Unordered, i < j, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<std::size_t>> adjacency;

    std::size_t index_of(const VertexPair& p) const;
};

RelationGraph relation_graph(const Relation& s);

bool is_surjective_relation(const Relation& s);
bool is_connected_relation(const Relation& s);
/// Throws if the structure carries no s.
bool is_in_family_F(const RelStructure& a);

/// Thrown when no structure with an antidiagonal relation can map onto the
/// input. Happens exactly for non-symmetric relations: the antidiagonal is
/// symmetric and so is its image under any map.
class NoAntidiagonalCover : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct AntidiagonalCover {
    RelStructure cover;     // ([4m], antidiagonal)
    StructureMap map;       // cover -> input
    std::vector<VertexPair> walk; // the surjective walk through s, length m
};

/// Covers a member of F by ([4m], antidiagonal), reading the map off a
/// depth-first walk through the relation graph that starts at a pair on or
/// next to the diagonal.
AntidiagonalCover cover_by_antidiagonal(const RelStructure& a);

} // namespace pseudoarc
