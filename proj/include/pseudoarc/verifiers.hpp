#pragma once

// Brute-force oracles for the family properties. Each verifier only trusts
// is_epimorphism and exhaustive search, never the constructive formulas it
// is checking.

#include "pseudoarc/core.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace pseudoarc {

struct VerificationReport {
    explicit VerificationReport(std::string name = {}) : property(std::move(name)) {}

    std::string property;
    std::size_t instances = 0;
    std::vector<std::string> failures;
    /// Failures beyond the stored descriptions are only counted.
    std::size_t failure_count = 0;
    double elapsed_seconds = 0.0;

    bool passed() const { return failure_count == 0; }
    void fail(std::string description);
};

std::string to_json(const VerificationReport& r);
std::string summary_line(const VerificationReport& r);

/// Every binary relation on g, ordered by bitmask over pairs.
std::vector<Relation> all_relations(const LinearGraph& g);
/// Members of F on plain [n] for n = 1..max_size.
std::vector<RelStructure> family_members(int max_size);

/// Exhaustive search for an epimorphism ([2j], antidiagonal) -> a with
/// j <= max_half. Searches half-walks t -> (f(t), f(2j+1-t)) through s with
/// a coverage mask, so it decides existence for every j in range at once.
bool antidiagonal_cover_exists(const RelStructure& a, int max_half);

/// Random walk on signed(k) from +-1 of length l, kept only when it ends at
/// +-k, then extended antisymmetrically to signed(l). Needs 1 <= k <= l.
StructureMap random_antisymmetric_epimorphism(int k, int l, std::mt19937_64& rng);
/// The walk 1..k with l-k random stutters and back-and-forth detours,
/// possibly negated, extended antisymmetrically. Suits large k.
StructureMap random_detour_epimorphism(int k, int l, std::mt19937_64& rng);
/// Random walk [l] -> [k] kept when surjective. Needs k <= l.
StructureMap random_linear_epimorphism(int k, int l, std::mt19937_64& rng);

VerificationReport verify_family_membership(int max_size);
VerificationReport verify_jpp(int max_size, int max_antidiagonal = 10);
VerificationReport verify_ap_linear(int max_size, int random_instances = 200, int random_max_size = 6,
                                    std::uint64_t seed = 1);
VerificationReport verify_cap(int instances, int max_size, std::uint64_t seed, bool include_coinitiality = true,
                              int coinitial_max_size = 4);
VerificationReport verify_wap(int max_size, int cospans_per_member = 2, std::uint64_t seed = 1);
VerificationReport verify_steinhaus(int rows, int cols);
/// Degree-two and no-loop claims for G1/G2, their central symmetry, the
/// uncrossable full-range column, and the corner dichotomy, on random
/// antisymmetric instances.
VerificationReport verify_structural_claims(int instances, int max_size, std::uint64_t seed);

} // namespace pseudoarc
