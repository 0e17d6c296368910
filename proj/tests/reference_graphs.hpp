#pragma once

// Hand transcription of the block graphs of the worked instance
// signed(8) -> signed(3) <- signed(9), as drawn: node (i, j) is block i of
// the first map against block j of the second.

#include "pseudoarc/cap.hpp"

#include <algorithm>
#include <vector>

namespace reference {

using Edge = pseudoarc::AmalgGraph::Edge;

inline std::vector<Edge> normalized(std::vector<Edge> edges) {
    for (auto& [a, b] : edges)
        if (b < a)
            std::swap(a, b);
    std::sort(edges.begin(), edges.end());
    return edges;
}

inline std::vector<Edge> g1_edges() {
    return normalized({
        {{-3, -2}, {-3, -1}}, {{-2, -2}, {-2, -1}}, {{-1, -2}, {-1, -1}}, {{0, -2}, {0, -1}},
        {{2, -1}, {2, 0}},    {{3, -1}, {3, 0}},    {{3, 1}, {3, 2}},     {{2, 1}, {2, 2}},
        {{1, 1}, {1, 2}},     {{0, 1}, {0, 2}},     {{-2, 0}, {-2, 1}},   {{-3, 0}, {-3, 1}},
        {{1, -2}, {2, -2}},   {{1, -1}, {2, -1}},   {{-2, -1}, {-1, -1}}, {{-2, 0}, {-1, 0}},
        {{0, -1}, {1, -1}},   {{0, 0}, {1, 0}},     {{-2, 2}, {-1, 2}},   {{-2, 1}, {-1, 1}},
        {{1, 1}, {2, 1}},     {{1, 0}, {2, 0}},     {{-1, 1}, {0, 1}},    {{-1, 0}, {0, 0}},
    });
}

inline std::vector<Edge> g2_edges() {
    return normalized({
        {{3, 1}, {3, 2}},     {{-3, -2}, {-3, -1}}, {{-2, -2}, {-2, -1}}, {{1, 1}, {2, 1}},
        {{-1, -2}, {0, -2}},  {{-1, -1}, {0, -1}},  {{1, -2}, {2, -2}},   {{1, -1}, {2, -1}},
        {{-2, -1}, {-1, -1}}, {{-2, 0}, {-1, 0}},   {{0, -1}, {1, -1}},   {{0, 0}, {1, 0}},
        {{2, -1}, {3, -1}},   {{2, 0}, {3, 0}},     {{0, 2}, {1, 2}},     {{0, 1}, {1, 1}},
        {{-2, 2}, {-1, 2}},   {{-2, 1}, {-1, 1}},   {{2, 1}, {2, 2}},     {{1, 0}, {2, 0}},
        {{-1, 1}, {0, 1}},    {{-1, 0}, {0, 0}},    {{-3, 1}, {-2, 1}},   {{-3, 0}, {-2, 0}},
    });
}

} // namespace reference
