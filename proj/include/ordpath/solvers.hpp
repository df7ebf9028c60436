#pragma once

// Constructive induced-path extraction: each solver returns a certified
// induced path or a pattern witness, mirroring the proof it implements.
// Guarantee functions (guarantee_noncrossing / guarantee_matching) run
// the same recursions over sizes only; path outcomes are asserted
// against them rather than against asymptotic constants.

#include <string>
#include <utility>

#include "ordpath/core.hpp"
#include "ordpath/patterns.hpp"

namespace ordpath {

struct SolveOutcome {
    enum class Kind { path, witness };
    Kind kind = Kind::path;
    InducedPath path;               // kind == path
    PatternEmbedding witness;       // kind == witness
    OrderedGraph witness_pattern;   // the pattern the witness realizes
    long long guarantee = 0;        // claimed minimum order for path outcomes
    std::string provenance;

    bool is_path() const { return kind == Kind::path; }

    static SolveOutcome make_path(InducedPath p, long long guarantee, std::string prov);
    static SolveOutcome make_witness(PatternEmbedding w, OrderedGraph pattern, std::string prov);
};

// Minimum-order strictly ascending path from a to b over forward edges;
// automatically induced; lexicographically smallest among minima.
// pre: 0 <= a < b < n.
InducedPath shortest_increasing_path(const PathGraph& host, int a, int b);

// shortest_increasing_path(0, n-1); order >= n / max_span, asserted.
// pre: n >= 2.
InducedPath span_path(const PathGraph& host);

// Guarantee of solve_noncrossing as a pure recursion over sizes.
long long guarantee_noncrossing(long long n, const OrderedGraph& h);

// Dyck recursion on a non-empty non-crossing perfect matching: either an
// increasing induced path of order >= guarantee_noncrossing(n, h) or an
// embedding of h.
SolveOutcome solve_noncrossing(const PathGraph& host, const OrderedGraph& h);

// On a host whose chords have no crossing pair: increasing induced paths
// L (from vertex 0) and R (to vertex n-1) with L < R and
// |L| + |R| >= ceil(log2 n). pre: n >= 2, crossing-free.
std::pair<InducedPath, InducedPath> solve_crossing_free(const PathGraph& host);

// Block contraction: either an induced path of order >= t or an
// embedding of the matching h with gap >= ceil(n/(m*t)).
// pre: m odd >= 3, m <= n, t >= 2, h a non-empty matching.
// Throws std::runtime_error when the dichotomy is unattainable (possible
// only below the size where the underlying lemma applies).
SolveOutcome find_gap_or_path(const PathGraph& host, const OrderedGraph& h, int m, int t);

// Guarantee of solve_matching as a pure recursion over sizes.
long long guarantee_matching(long long n, const OrderedGraph& h);

// Dispatcher over matchings: strip isolated vertices, single-edge and
// non-crossing and two-crossing base cases, nested-window induction
// otherwise. Path outcomes have order >= guarantee_matching(n, h).
SolveOutcome solve_matching(const PathGraph& host, const OrderedGraph& h);

struct GrsOutcome {
    enum class Kind { path, witness, no_clique } kind = Kind::no_clique;
    InducedPath path;               // increasing induced path of order >= p
    PatternEmbedding witness;       // ordered half-graph H_{p/4} embedding
    OrderedGraph witness_pattern;
    std::string provenance;
    int p = 0;
    int best_clique = 0;            // largest monochromatic 4-clique found
};

// Ramsey-flavored search over 4-subset colors: an increasing induced
// path of order >= p, an H_{p/4} embedding, or NoCliqueFound when no
// monochromatic 4-clique of size 2p exists (the desk-scale norm).
// pre: p a positive multiple of 4, p <= n.
GrsOutcome grs_search(const PathGraph& host, int p);

}  // namespace ordpath
