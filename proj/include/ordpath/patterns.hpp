#pragma once

// Pattern containment in G - E(P), structural classification of patterns
// (matching / crossing / depth / one-sidedness / half-graph embedding /
// growth class) and the pattern transformations and generators used
// throughout.

#include <optional>
#include <string>

#include "ordpath/core.hpp"

namespace ordpath {

// Growth tier of g_H. `lower` is the proved lower-bound tier; for the
// polynomial tier d is the depth of the stripped perfect matching
// (g = Omega(n^{1/d})), for the polylog tier d = |E(H)| - 1
// (g = Omega((log n)^{1/d})). `upper` is the known upper-bound tier,
// unset where no upper bound is reported.
struct GrowthClass {
    enum class Lower { polynomial, polylog, loglog, logloglog, bounded };
    enum class Upper { linear, log };
    Lower lower;
    std::optional<int> d;
    std::optional<Upper> upper;
};

std::string to_string(GrowthClass::Lower);
std::string to_string(GrowthClass::Upper);

// Lexicographically smallest embedding of h into the chord set of host,
// or absent. Pattern non-edges impose no constraint.
std::optional<PatternEmbedding> contains_pattern(const PathGraph& host, const OrderedGraph& h);

// Same restricted to embeddings whose consecutive positions differ by at
// least min_gap. pre: min_gap >= 1.
std::optional<PatternEmbedding> contains_pattern_with_gap(const PathGraph& host,
                                                          const OrderedGraph& h, int min_gap);

bool is_matching(const OrderedGraph& h);          // max degree <= 1
bool is_perfect_matching(const OrderedGraph& h);  // 1-regular
// Edges (a,c),(b,d) with a < b < c < d.
bool has_crossing_pair(const OrderedGraph& h);
bool is_noncrossing(const OrderedGraph& h);

// Dyck-decomposition depth of a non-crossing perfect matching;
// depth(empty) = 0. Throws unless h is a non-crossing perfect matching.
int depth(const OrderedGraph& h);

// Every vertex has all neighbors smaller or all larger.
bool one_sided(const OrderedGraph& h);

// Least i such that every edge (j, j') satisfies j <= i < j'; absent if
// none. For an edgeless pattern with n >= 1 this is vacuously 0.
std::optional<int> split_point(const OrderedGraph& h);

// Smallest m <= 4|V(h)| such that h embeds into the ordered half-graph
// H_m; present iff h is one-sided.
std::optional<int> halfgraph_index(const OrderedGraph& h);

GrowthClass classify(const OrderedGraph& h);

// --- transformations ----------------------------------------------------

// Disjoint union with b's vertices after a's.
OrderedGraph concat(const OrderedGraph& a, const OrderedGraph& b);
// Adds a first and a last vertex joined by an edge enclosing h.
OrderedGraph hat(const OrderedGraph& h);
// Inserts k isolated vertices between consecutive vertices of h.
// pre: h a matching, k >= 0.
OrderedGraph plus_h(const OrderedGraph& h, int k);
// Removes degree-0 vertices and compacts indices.
OrderedGraph strip_isolated(const OrderedGraph& h);

// --- generators ---------------------------------------------------------

// Ordered half-graph H_m: vertices a_1,b_1,...,a_m,b_m with an edge
// between a_i and b_j iff i < j.
OrderedGraph gen_halfgraph_pattern(int m);
// M_0 empty; M_i = hat(M_{i-1}) . hat(M_{i-1}) . hat(M_{i-1});
// depth(M_i) = i.
OrderedGraph gen_Mi(int i);
// Perfect matching Pi(g) with |E(g)| edges on 2|E(g)| vertices; finding
// it as a pattern forces a g-minor. g is treated as a plain graph;
// neighbor blocks are listed in ascending vertex order.
OrderedGraph gen_pi(const OrderedGraph& g);
// Hat of the 3-edge crossing matching; forces a K_{3,3} minor.
OrderedGraph gen_planar_pattern();
// (k+1)-fold concatenation of gen_planar_pattern(); forces k+1 disjoint
// K_{3,3} minors, impossible on Euler genus k.
OrderedGraph gen_genus_pattern(int k);

}  // namespace ordpath
