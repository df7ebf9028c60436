#pragma once

// The machinery behind the K_{t,t}-vs-long-increasing-path theorem:
// maximum increasing induced paths P_{u,v}, the four triple colorings,
// monochromatic 3-clique search, the clique-structure checks, K_{t,t}
// extraction and the full pipeline.

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ordpath/core.hpp"

namespace ordpath {

// Disjoint vertex sets with every cross pair an edge of the host (chords
// or path edges).
struct KttWitness {
    std::vector<int> side_a, side_b;
};

// Product color of an ordered triple (u,v,w):
//   c1       : 0..4, comparing |P_{u,v}|, |P_{u,w}|, |P_{v,w}|
//   c2       : (d, delta)      largest common vertex of P_{u,v}, P_{u,w}
//   c2rev    : (drev, deltarev) smallest common vertex of P_{u,w}, P_{v,w}
//   c3       : (i, a, b)       qualifying-edge case over the six subpaths
struct TripleColor {
    int c1 = 0;
    int d = 0, delta = 0;
    int drev = 0, deltarev = 0;
    int i3 = 0, a3 = 0, b3 = 0;

    auto tie() const { return std::tie(c1, d, delta, drev, deltarev, i3, a3, b3); }
    bool operator==(const TripleColor& o) const { return tie() == o.tie(); }
    bool operator<(const TripleColor& o) const { return tie() < o.tie(); }
};

// A monochromatic 3-clique K with its interior, type (l, d, drev) and the
// u^- / u^+ markers of the interior vertices.
struct CliqueRecord {
    std::vector<int> vertices;           // ascending
    std::vector<int> interior;           // vertices minus extremes
    TripleColor color;                   // shared color of all triples
    int ell = 0;                         // common |P_{u,v}| (type component)
    std::map<int, int> plus_marker;      // v -> v^+ (interior only)
    std::map<int, int> minus_marker;     // v -> v^-
};

// P^left / P^mid / P^right split of one P_{u,v}.
struct SplitTriple {
    std::vector<int> left, mid, right;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct CliqueReport {
    bool preconditions_met = false;  // clique order >= configured s
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Precomputed P_{u,v} table plus the triple colorings of one host.
class ColoringContext {
public:
    explicit ColoringContext(const PathGraph& host);

    const PathGraph& host() const { return host_; }
    // Maximum-order increasing induced path from u to v (u < v),
    // lexicographically smallest among maxima.
    const std::vector<int>& path(int u, int v) const;
    TripleColor color(int u, int v, int w) const;
    // Longest increasing induced path overall (max over all pairs).
    const std::vector<int>& longest_path() const { return longest_; }

    // Number of distinct product colors over all triples.
    int distinct_colors() const;

    // Split of P_{u,v} for the given (d, drev); requires
    // |P_{u,v}| >= d + drev + 2.
    SplitTriple split(int u, int v, int d, int drev) const;

private:
    PathGraph host_;
    std::vector<std::vector<std::vector<int>>> paths_;  // [u][v-u-1]
    std::vector<int> longest_;
    mutable std::map<std::array<int, 3>, TripleColor> cache_;
    TripleColor compute_color(int u, int v, int w) const;
};

// Maximum-order increasing induced path between u and v through [u..v],
// by branch and bound with memoized upper bounds.
InducedPath max_increasing_induced_path(const PathGraph& host, int u, int v);

TripleColor color_triple(const ColoringContext& ctx, int u, int v, int w);

// Exhaustive search for `size` vertices whose triples all share one
// color; lexicographically smallest such clique. Fills type and markers.
std::optional<CliqueRecord> find_monochromatic_3clique(const ColoringContext& ctx, int size);

// Size of the largest monochromatic clique (for reporting).
int largest_monochromatic_clique(const ColoringContext& ctx);

// Runs the clique-structure checks (common color 0, common path order,
// zero deltas, marker well-definedness, marker ordering, territory
// disjointness) and reports pass/fail per item. `s` is the configured
// path-order bound the lemmas are stated against.
CliqueReport verify_clique_lemmas(const ColoringContext& ctx, const CliqueRecord& k, int s);

// Which symmetric extraction lemma applies: which slot of the triple is
// held fixed when reading off the K_{t,t} sides.
enum class ExtractVariant { v123, v321, v132 };

using TripleFn = std::function<int(int, int, int)>;

// Checks the variant's injectivity/constancy conditions on (f, f') over
// the ordered triples of vset and reads off a complete bipartite
// witness. Throws std::invalid_argument if a condition fails.
KttWitness ktt_extract(const PathGraph& host, const std::vector<int>& vset, const TripleFn& f,
                       const TripleFn& fprime, ExtractVariant variant, int t);

struct PipelineResult {
    enum class Kind { path, ktt, report } kind;
    InducedPath path;           // kind == path
    KttWitness witness;         // kind == ktt
    std::string stage;          // report stage, or the stage that produced the outcome
    int s = 0;                  // the s used
    std::optional<CliqueRecord> clique;
    std::optional<CliqueReport> clique_report;
    int largest_clique = 0;     // largest monochromatic clique seen (report kind)
};

// Full pipeline: stage-1 long-increasing-path check, product coloring,
// monochromatic clique search of order max(s, 2t+5), extraction or
// report. force_s overrides s_from_n (the honest s is 0 at desk scale).
PipelineResult main_pipeline(const PathGraph& host, int t, std::optional<int> force_s = {});

}  // namespace ordpath
