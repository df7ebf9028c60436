#pragma once

// Ordered-graph and Hamiltonian-path-graph data model, validation and
// file I/O shared by the other modules.
//
// Vertices are identified with their position in the order: vertex i
// precedes vertex j iff i < j. Hosts are stored as a vertex count plus
// the chord set; the path edges (i, i+1) are implicit.

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ordpath {

using Edge = std::pair<int, int>;

// A request exceeded a configured resource cap (enumeration size,
// branch-and-bound vertex cap, big-integer bit budget).
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parse failure with the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error(msg + " at line " + std::to_string(line)), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// An ordered graph: n vertices 0..n-1, edges (i, j) with i < j.
// Immutable after construction; the edge list is kept sorted and unique.
class OrderedGraph {
public:
    OrderedGraph() = default;
    OrderedGraph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int i, int j) const;
    int degree(int v) const;
    // Neighbors of v, ascending.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool operator==(const OrderedGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// A graph with Hamiltonian path 0,1,...,n-1, stored as n plus the set of
// chords (edges of G - E(P), so every chord spans at least 2).
class PathGraph {
public:
    PathGraph() = default;
    PathGraph(int n, std::vector<Edge> chords);

    int n() const { return n_; }
    const std::vector<Edge>& chords() const { return chords_; }
    bool has_chord(int i, int j) const;
    // Adjacent in the full edge set (path edges and chords).
    bool adjacent(int i, int j) const;
    // Chord neighbors of v, ascending (excludes path edges).
    const std::vector<int>& chord_neighbors(int v) const { return chord_adj_[v]; }
    // Full-edge neighbors of v, ascending.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool operator==(const PathGraph& o) const { return n_ == o.n_ && chords_ == o.chords_; }

private:
    int n_ = 0;
    std::vector<Edge> chords_;
    std::vector<std::vector<int>> chord_adj_;
    std::vector<std::vector<int>> adj_;
};

// A host-validated induced path: consecutive vertices adjacent,
// non-consecutive ones not. `increasing` iff the sequence is strictly
// ascending.
struct InducedPath {
    std::vector<int> vertices;
    bool increasing = false;

    int order() const { return static_cast<int>(vertices.size()); }
};

// Sentinel gap for embeddings with fewer than two positions (no
// consecutive pair exists, so any gap constraint holds vacuously).
inline constexpr int kNoGap = std::numeric_limits<int>::max();

// Strictly increasing host positions realizing a pattern; `gap` is the
// minimum difference of consecutive positions (kNoGap if fewer than 2).
struct PatternEmbedding {
    std::vector<int> positions;
    int gap = kNoGap;

    static int compute_gap(const std::vector<int>& positions);
};

// --- file formats ------------------------------------------------------
//
// ASCII, newline separated, '#' starts a comment, blank lines ignored.
//   pattern file:   header "pattern <n>",   lines "edge <i> <j>"  (i < j)
//   host file:      header "pathgraph <n>", lines "chord <i> <j>" (j-i >= 2)
// Canonical serialization sorts entries lexicographically.

OrderedGraph parse_ordered_graph(std::string_view text);
PathGraph parse_path_graph(std::string_view text);
std::string serialize(const OrderedGraph& g);
std::string serialize(const PathGraph& g);

// Checks seq against the brute-force pairwise definition of an induced
// path in `host` and returns it with the increasing flag set.
// Throws std::invalid_argument naming the violation otherwise.
InducedPath validate_induced_path(const PathGraph& host, const std::vector<int>& seq);

// Validates that `positions` embeds pattern `h` into `host`: strictly
// increasing, every pattern edge mapped to a chord. Returns the embedding.
PatternEmbedding validate_embedding(const PathGraph& host, const OrderedGraph& h,
                                    const std::vector<int>& positions);

// Maximum |i - j| over all edges including path edges: 1 for a bare path
// with n >= 2, 0 for a single vertex.
int max_span(const PathGraph& g);

}  // namespace ordpath
