#pragma once

// Extremal host generators: the two host families showing that patterns
// with a two-sided vertex force only bounded induced paths (Example 1)
// and that a vertex of back-degree two forces only logarithmic ones
// (Example 2).

#include "ordpath/core.hpp"

namespace ordpath {

// Bipartite supergraph of the half-graph: chords (i, j) for even i and
// odd j (0-based), j - i >= 2. Its longest induced path has order 4 for
// every n >= 6. pre: n >= 2.
PathGraph gen_example1(int n);

// Recursive host G_i: G_1 is a single vertex; G_i places two copies of
// G_{i-1} between u < v < w and adds chords uv, uw. Every vertex keeps
// at most one chord to a smaller vertex, and induced paths have
// logarithmic order. |V(G_i)| = 2|V(G_{i-1})| + 3. pre: i >= 1.
PathGraph gen_example2(int i);

}  // namespace ordpath
