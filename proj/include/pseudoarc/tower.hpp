#pragma once

// A finite inverse sequence of signed antidiagonal structures with
// antisymmetric bonds, each extension also mapping onto a chosen target.

#include "pseudoarc/core.hpp"
#include "pseudoarc/verifiers.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pseudoarc {

struct TowerCover {
    int level;
    RelStructure target;
    StructureMap map; // levels[level] -> target
};

struct Tower {
    std::vector<RelStructure> levels;
    /// bonds[n] maps levels[n + 1] onto levels[n].
    std::vector<StructureMap> bonds;
    std::vector<StructureMap> flips;
    std::vector<TowerCover> covers;

    int height() const { return static_cast<int>(levels.size()); }
    const RelStructure& top() const { return levels.back(); }
};

/// One level, (signed(1), antidiagonal).
Tower new_tower();

/// Appends a level that maps onto the current top and onto target. Throws
/// std::invalid_argument if target is not in F and NoAntidiagonalCover if
/// its relation is not symmetric.
Tower extend_tower(const Tower& t, const RelStructure& target);

VerificationReport check_tower(const Tower& t);

/// Members of F on [1..max_target_size] whose relation is symmetric, i.e.
/// those an antidiagonal structure can map onto.
std::vector<RelStructure> coverable_targets(int max_target_size);
/// `extensions` extensions of new_tower() by targets drawn uniformly from
/// coverable_targets(max_target_size).
Tower random_tower(int extensions, std::uint64_t seed, int max_target_size = 4);

/// Sections headed `level n`; the first graph of a section is the level,
/// a map into the previous level is the bond, other graphs are targets
/// covered by maps from the level.
void write_tower(std::ostream& out, const Tower& t);
Tower read_tower(std::istream& in);

} // namespace pseudoarc
