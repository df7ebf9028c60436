#include "ordpath/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ordpath {

namespace {

std::vector<std::vector<int>> build_adjacency(int n, const std::vector<Edge>& edges,
                                              bool with_path_edges) {
    std::vector<std::vector<int>> adj(n);
    if (with_path_edges) {
        for (int i = 0; i + 1 < n; ++i) {
            adj[i].push_back(i + 1);
            adj[i + 1].push_back(i);
        }
    }
    for (auto [i, j] : edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());
    return adj;
}

bool sorted_contains(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

OrderedGraph::OrderedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("ordered graph: negative vertex count");
    std::sort(edges_.begin(), edges_.end());
    for (size_t k = 0; k < edges_.size(); ++k) {
        auto [i, j] = edges_[k];
        if (i < 0 || i >= j || j >= n_)
            throw std::invalid_argument("ordered graph: edge (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") violates 0 <= i < j < n");
        if (k > 0 && edges_[k] == edges_[k - 1])
            throw std::invalid_argument("ordered graph: duplicate edge (" + std::to_string(i) +
                                        "," + std::to_string(j) + ")");
    }
    adj_ = build_adjacency(n_, edges_, false);
}

bool OrderedGraph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

int OrderedGraph::degree(int v) const { return static_cast<int>(adj_[v].size()); }

PathGraph::PathGraph(int n, std::vector<Edge> chords) : n_(n), chords_(std::move(chords)) {
    if (n_ < 1) throw std::invalid_argument("path graph: vertex count must be >= 1");
    std::sort(chords_.begin(), chords_.end());
    for (size_t k = 0; k < chords_.size(); ++k) {
        auto [i, j] = chords_[k];
        if (i < 0 || j >= n_ || j - i < 2)
            throw std::invalid_argument("path graph: chord (" + std::to_string(i) + "," +
                                        std::to_string(j) +
                                        ") violates 0 <= i, j - i >= 2, j < n");
        if (k > 0 && chords_[k] == chords_[k - 1])
            throw std::invalid_argument("path graph: duplicate chord (" + std::to_string(i) +
                                        "," + std::to_string(j) + ")");
    }
    chord_adj_ = build_adjacency(n_, chords_, false);
    adj_ = build_adjacency(n_, chords_, true);
}

bool PathGraph::has_chord(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(chords_.begin(), chords_.end(), Edge{i, j});
}

bool PathGraph::adjacent(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i == j) return false;
    if (j - i == 1) return true;
    return has_chord(i, j);
}

int PatternEmbedding::compute_gap(const std::vector<int>& positions) {
    if (positions.size() < 2) return kNoGap;
    int g = kNoGap;
    for (size_t i = 0; i + 1 < positions.size(); ++i)
        g = std::min(g, positions[i + 1] - positions[i]);
    return g;
}

// --- parsing ------------------------------------------------------------

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view raw = text.substr(pos, eol - pos);
        ++lineno;
        pos = eol + 1;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{lineno, {}};
        std::istringstream ss{std::string(raw)};
        std::string tok;
        while (ss >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (eol == text.size()) break;
    }
    return lines;
}

int parse_int(const std::string& tok, const Line& line) {
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError("expected integer, got '" + tok + "'", line.number);
    return value;
}

// Shared scaffold for the two formats: header "<kind> <n>" then
// "<entry> <i> <j>" lines. min_span rejects short entries (chords need
// j - i >= 2; path edges are implicit and never listed).
std::pair<int, std::vector<Edge>> parse_graph_file(std::string_view text, const char* kind,
                                                   const char* entry, int min_span) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(std::string("missing '") + kind + "' header", 1);
    const Line& head = lines[0];
    if (head.tokens[0] != kind || head.tokens.size() != 2)
        throw ParseError(std::string("malformed header, expected '") + kind + " <n>'",
                         head.number);
    int n = parse_int(head.tokens[1], head);
    if (n < 0) throw ParseError("negative vertex count", head.number);
    std::vector<Edge> edges;
    for (size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        if (line.tokens[0] != entry || line.tokens.size() != 3)
            throw ParseError(std::string("expected '") + entry + " <i> <j>'", line.number);
        int i = parse_int(line.tokens[1], line);
        int j = parse_int(line.tokens[2], line);
        if (i >= j) throw ParseError("i >= j", line.number);
        if (i < 0 || j >= n) throw ParseError("vertex out of range", line.number);
        if (j - i < min_span)
            throw ParseError(std::string(entry) + " span < " + std::to_string(min_span),
                             line.number);
        if (std::find(edges.begin(), edges.end(), Edge{i, j}) != edges.end())
            throw ParseError("duplicate " + std::string(entry), line.number);
        edges.emplace_back(i, j);
    }
    return {n, std::move(edges)};
}

}  // namespace

OrderedGraph parse_ordered_graph(std::string_view text) {
    auto [n, edges] = parse_graph_file(text, "pattern", "edge", 1);
    return OrderedGraph(n, std::move(edges));
}

PathGraph parse_path_graph(std::string_view text) {
    auto [n, chords] = parse_graph_file(text, "pathgraph", "chord", 2);
    return PathGraph(n, std::move(chords));
}

std::string serialize(const OrderedGraph& g) {
    std::string out = "pattern " + std::to_string(g.n()) + "\n";
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    for (auto [i, j] : edges)
        out += "edge " + std::to_string(i) + " " + std::to_string(j) + "\n";
    return out;
}

std::string serialize(const PathGraph& g) {
    std::string out = "pathgraph " + std::to_string(g.n()) + "\n";
    auto chords = g.chords();
    std::sort(chords.begin(), chords.end());
    for (auto [i, j] : chords)
        out += "chord " + std::to_string(i) + " " + std::to_string(j) + "\n";
    return out;
}

InducedPath validate_induced_path(const PathGraph& host, const std::vector<int>& seq) {
    if (seq.empty()) throw std::invalid_argument("induced path: empty sequence");
    std::vector<char> used(host.n(), 0);
    for (int v : seq) {
        if (v < 0 || v >= host.n())
            throw std::invalid_argument("induced path: vertex " + std::to_string(v) +
                                        " out of range");
        if (used[v])
            throw std::invalid_argument("induced path: duplicate vertex " + std::to_string(v));
        used[v] = 1;
    }
    for (size_t a = 0; a < seq.size(); ++a) {
        for (size_t b = a + 1; b < seq.size(); ++b) {
            bool adj = host.adjacent(seq[a], seq[b]);
            if (b == a + 1 && !adj)
                throw std::invalid_argument("induced path: non-adjacent consecutive pair (" +
                                            std::to_string(seq[a]) + "," +
                                            std::to_string(seq[b]) + ")");
            if (b > a + 1 && adj)
                throw std::invalid_argument("induced path: adjacent non-consecutive pair (" +
                                            std::to_string(seq[a]) + "," +
                                            std::to_string(seq[b]) + ")");
        }
    }
    bool inc = std::is_sorted(seq.begin(), seq.end()) &&
               std::adjacent_find(seq.begin(), seq.end()) == seq.end();
    return InducedPath{seq, inc};
}

PatternEmbedding validate_embedding(const PathGraph& host, const OrderedGraph& h,
                                    const std::vector<int>& positions) {
    if (static_cast<int>(positions.size()) != h.n())
        throw std::invalid_argument("embedding: position count != pattern order");
    for (size_t k = 0; k < positions.size(); ++k) {
        if (positions[k] < 0 || positions[k] >= host.n())
            throw std::invalid_argument("embedding: position out of range");
        if (k > 0 && positions[k] <= positions[k - 1])
            throw std::invalid_argument("embedding: positions not strictly increasing");
    }
    for (auto [p, q] : h.edges()) {
        if (!host.has_chord(positions[p], positions[q]))
            throw std::invalid_argument(
                "embedding: pattern edge (" + std::to_string(p) + "," + std::to_string(q) +
                ") does not map to a chord");
    }
    return PatternEmbedding{positions, PatternEmbedding::compute_gap(positions)};
}

int max_span(const PathGraph& g) {
    int best = g.n() >= 2 ? 1 : 0;
    for (auto [i, j] : g.chords()) best = std::max(best, j - i);
    return best;
}

}  // namespace ordpath
