#include "ordpath/patterns.hpp"

#include <algorithm>

namespace ordpath {

std::string to_string(GrowthClass::Lower l) {
    switch (l) {
        case GrowthClass::Lower::polynomial: return "polynomial";
        case GrowthClass::Lower::polylog: return "polylog";
        case GrowthClass::Lower::loglog: return "loglog";
        case GrowthClass::Lower::logloglog: return "logloglog";
        case GrowthClass::Lower::bounded: return "bounded";
    }
    return "?";
}

std::string to_string(GrowthClass::Upper u) {
    return u == GrowthClass::Upper::linear ? "linear" : "log";
}

namespace {

// Backtracking over ascending positions; the first complete assignment
// is the lexicographically smallest.
struct EmbedSearch {
    const PathGraph& host;
    const OrderedGraph& h;
    int min_gap;
    std::vector<std::vector<int>> back;  // earlier pattern neighbors per vertex
    std::vector<int> fwd;                // count of later pattern neighbors
    std::vector<int> pos;

    EmbedSearch(const PathGraph& host, const OrderedGraph& h, int min_gap)
        : host(host), h(h), min_gap(min_gap), back(h.n()), fwd(h.n(), 0) {
        for (auto [i, j] : h.edges()) {
            back[j].push_back(i);
            ++fwd[i];
        }
    }

    // a vertex with f later pattern neighbors needs f chord neighbors
    // strictly above its position
    bool viable(int k, int p) const {
        if (!fwd[k]) return true;
        const auto& nb = host.chord_neighbors(p);
        auto it = std::upper_bound(nb.begin(), nb.end(), p);
        return static_cast<int>(nb.end() - it) >= fwd[k];
    }

    bool admit(int k, int p) {
        if (!viable(k, p)) return false;
        for (int q : back[k])
            if (!host.has_chord(pos[q], p)) return false;
        pos.push_back(p);
        if (run(k + 1, p + min_gap)) return true;
        pos.pop_back();
        return false;
    }

    bool run(int k, int from) {
        int need = h.n() - k;
        if (need == 0) return true;
        // remaining vertices still need (need-1) gaps of >= min_gap
        const int limit = host.n() - (need - 1) * min_gap;
        if (back[k].empty()) {
            for (int p = from; p < limit; ++p)
                if (admit(k, p)) return true;
            return false;
        }
        // candidates must be chord neighbors of the first matched
        // back-neighbor; the list is ascending, so lexicographic order
        // is preserved
        const auto& cand = host.chord_neighbors(pos[back[k][0]]);
        for (auto it = std::lower_bound(cand.begin(), cand.end(), from); it != cand.end();
             ++it) {
            if (*it >= limit) break;
            if (admit(k, *it)) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<PatternEmbedding> contains_pattern_with_gap(const PathGraph& host,
                                                          const OrderedGraph& h, int min_gap) {
    if (min_gap < 1) throw std::invalid_argument("contains_pattern_with_gap: min_gap must be >= 1");
    EmbedSearch search(host, h, min_gap);
    if (!search.run(0, 0)) return std::nullopt;
    return PatternEmbedding{search.pos, PatternEmbedding::compute_gap(search.pos)};
}

std::optional<PatternEmbedding> contains_pattern(const PathGraph& host, const OrderedGraph& h) {
    return contains_pattern_with_gap(host, h, 1);
}

bool is_matching(const OrderedGraph& h) {
    for (int v = 0; v < h.n(); ++v)
        if (h.degree(v) > 1) return false;
    return true;
}

bool is_perfect_matching(const OrderedGraph& h) {
    for (int v = 0; v < h.n(); ++v)
        if (h.degree(v) != 1) return false;
    return true;
}

bool has_crossing_pair(const OrderedGraph& h) {
    for (auto [a, c] : h.edges())
        for (auto [b, d] : h.edges())
            if (a < b && b < c && c < d) return true;
    return false;
}

bool is_noncrossing(const OrderedGraph& h) { return !has_crossing_pair(h); }

namespace {

int depth_range(const std::vector<int>& partner, int lo, int hi) {
    if (lo >= hi) return 0;
    int p = partner[lo];
    return std::max(depth_range(partner, lo + 1, p) + 1, depth_range(partner, p + 1, hi));
}

}  // namespace

int depth(const OrderedGraph& h) {
    if (!is_perfect_matching(h)) throw std::invalid_argument("depth: not a perfect matching");
    if (has_crossing_pair(h)) throw std::invalid_argument("depth: crossing pair present");
    std::vector<int> partner(h.n(), -1);
    for (auto [i, j] : h.edges()) partner[i] = j, partner[j] = i;
    return depth_range(partner, 0, h.n());
}

bool one_sided(const OrderedGraph& h) {
    for (int v = 0; v < h.n(); ++v) {
        const auto& nb = h.neighbors(v);
        if (nb.empty()) continue;
        if (nb.front() < v && nb.back() > v) return false;
    }
    return true;
}

std::optional<int> split_point(const OrderedGraph& h) {
    for (int i = 0; i < h.n(); ++i) {
        bool ok = true;
        for (auto [a, b] : h.edges())
            if (!(a <= i && i < b)) { ok = false; break; }
        if (ok) return i;
    }
    return std::nullopt;
}

std::optional<int> halfgraph_index(const OrderedGraph& h) {
    int cap = std::max(1, 4 * h.n());
    for (int m = 1; m <= cap; ++m) {
        OrderedGraph hm = gen_halfgraph_pattern(m);
        // H_m edges all span >= 3, so they form a valid chord set and the
        // pattern search applies directly.
        PathGraph host(hm.n(), hm.edges());
        if (contains_pattern(host, h)) return m;
    }
    return std::nullopt;
}

GrowthClass classify(const OrderedGraph& h) {
    GrowthClass out{GrowthClass::Lower::bounded, std::nullopt, std::nullopt};
    if (is_matching(h)) {
        if (is_noncrossing(h)) {
            out.lower = GrowthClass::Lower::polynomial;
            out.d = depth(strip_isolated(h));
            out.upper = GrowthClass::Upper::linear;
        } else {
            out.lower = GrowthClass::Lower::polylog;
            out.d = static_cast<int>(h.edges().size()) - 1;
            out.upper = GrowthClass::Upper::log;
        }
        return out;
    }
    if (split_point(h)) {
        out.lower = GrowthClass::Lower::loglog;
        out.upper = GrowthClass::Upper::log;
        return out;
    }
    if (one_sided(h)) {
        out.lower = GrowthClass::Lower::logloglog;
        out.upper = GrowthClass::Upper::log;
        return out;
    }
    return out;  // bounded: some vertex has neighbors on both sides
}

OrderedGraph concat(const OrderedGraph& a, const OrderedGraph& b) {
    std::vector<Edge> edges = a.edges();
    for (auto [i, j] : b.edges()) edges.emplace_back(i + a.n(), j + a.n());
    return OrderedGraph(a.n() + b.n(), std::move(edges));
}

OrderedGraph hat(const OrderedGraph& h) {
    std::vector<Edge> edges{{0, h.n() + 1}};
    for (auto [i, j] : h.edges()) edges.emplace_back(i + 1, j + 1);
    return OrderedGraph(h.n() + 2, std::move(edges));
}

OrderedGraph plus_h(const OrderedGraph& h, int k) {
    if (!is_matching(h)) throw std::invalid_argument("plus_h: pattern is not a matching");
    if (k < 0) throw std::invalid_argument("plus_h: k must be >= 0");
    if (h.n() == 0) return h;
    int n = h.n() + k * (h.n() - 1);
    std::vector<Edge> edges;
    for (auto [i, j] : h.edges()) edges.emplace_back(i * (k + 1), j * (k + 1));
    return OrderedGraph(n, std::move(edges));
}

OrderedGraph strip_isolated(const OrderedGraph& h) {
    std::vector<int> remap(h.n(), -1);
    int next = 0;
    for (int v = 0; v < h.n(); ++v)
        if (h.degree(v) > 0) remap[v] = next++;
    std::vector<Edge> edges;
    for (auto [i, j] : h.edges()) edges.emplace_back(remap[i], remap[j]);
    return OrderedGraph(next, std::move(edges));
}

OrderedGraph gen_halfgraph_pattern(int m) {
    if (m < 0) throw std::invalid_argument("gen_halfgraph_pattern: m must be >= 0");
    std::vector<Edge> edges;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) edges.emplace_back(2 * (i - 1), 2 * j - 1);
    return OrderedGraph(2 * m, std::move(edges));
}

OrderedGraph gen_Mi(int i) {
    if (i < 0) throw std::invalid_argument("gen_Mi: i must be >= 0");
    OrderedGraph m(0, {});
    for (int level = 1; level <= i; ++level) {
        OrderedGraph piece = hat(m);
        m = concat(concat(piece, piece), piece);
    }
    return m;
}

OrderedGraph gen_pi(const OrderedGraph& g) {
    // offset of each neighbor block V_i
    std::vector<int> offset(g.n() + 1, 0);
    for (int v = 0; v < g.n(); ++v) offset[v + 1] = offset[v] + g.degree(v);
    auto position = [&](int i, int j) {
        // position of the occurrence of j inside block V_i
        const auto& nb = g.neighbors(i);
        int rank = static_cast<int>(std::lower_bound(nb.begin(), nb.end(), j) - nb.begin());
        return offset[i] + rank;
    };
    std::vector<Edge> edges;
    for (auto [i, j] : g.edges()) edges.emplace_back(position(i, j), position(j, i));
    return OrderedGraph(offset[g.n()], std::move(edges));
}

OrderedGraph gen_planar_pattern() {
    return hat(OrderedGraph(6, {{0, 3}, {1, 4}, {2, 5}}));
}

OrderedGraph gen_genus_pattern(int k) {
    if (k < 0) throw std::invalid_argument("gen_genus_pattern: k must be >= 0");
    OrderedGraph out = gen_planar_pattern();
    for (int c = 0; c < k; ++c) out = concat(out, gen_planar_pattern());
    return out;
}

}  // namespace ordpath
