#pragma once

// Exhaustive ground-truth computations: exact longest (increasing)
// induced paths, exact g_H(n) by enumeration of all chord sets, K_{t,t}
// detection, and the Erdos-Rado bound arithmetic lives in tower.hpp.

#include <cstdint>
#include <optional>

#include "ordpath/core.hpp"
#include "ordpath/ktt.hpp"

namespace ordpath {

// Maximum-order induced path (not necessarily increasing) by branch and
// bound over simple-path extensions with conflict bitmasks;
// lexicographically smallest among maxima. Throws CapExceeded above cap.
InducedPath longest_induced_path_exact(const PathGraph& host, int cap = 30);

// Increasing counterpart (forward extensions only).
InducedPath longest_increasing_induced_path_exact(const PathGraph& host, int cap = 30);

// Exactly computed g_h(n): the minimum, over all h-avoiding hosts on n
// vertices, of the longest induced path order.
struct GhnResult {
    int n = 0;
    bool unavoidable = false;     // every host contains h; g_h(n) vacuous
    int value = 0;                // exact g_h(n) when avoidable
    PathGraph witness{1, {}};     // minimizing host (smallest chord bitmask)
    std::uint64_t count_avoiding = 0;
};

// Enumerates all chord-set bitmasks in lexicographic pair order, filters
// by pattern avoidance, takes the minimum longest induced path. The
// result is bit-identical for every thread count (static chunking,
// minimum reduction with smallest-bitmask tie break). pre: 1 <= n <= 8.
GhnResult ghn_exact(const OrderedGraph& h, int n, int threads = 1);

// K_{t,t} subgraph in the full edge set (path edges included), or
// absent. pre: t <= 3, n <= 20.
std::optional<KttWitness> contains_ktt(const PathGraph& host, int t);

}  // namespace ordpath
