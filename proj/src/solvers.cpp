#include "ordpath/solvers.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <deque>
#include <map>

#include "ordpath/oracles.hpp"

namespace ordpath {

using bigint = boost::multiprecision::cpp_int;

SolveOutcome SolveOutcome::make_path(InducedPath p, long long guarantee, std::string prov) {
    SolveOutcome o;
    o.kind = Kind::path;
    o.path = std::move(p);
    o.guarantee = guarantee;
    o.provenance = std::move(prov);
    return o;
}

SolveOutcome SolveOutcome::make_witness(PatternEmbedding w, OrderedGraph pattern,
                                        std::string prov) {
    SolveOutcome o;
    o.kind = Kind::witness;
    o.witness = std::move(w);
    o.witness_pattern = std::move(pattern);
    o.provenance = std::move(prov);
    return o;
}

namespace {

// Shortest strictly increasing path from a to b; intermediates may be
// limited to `allowed` (endpoints are always allowed). Empty result if
// unreachable under the restriction.
std::vector<int> shortest_increasing_seq(const PathGraph& host, int a, int b,
                                         const std::vector<char>* allowed = nullptr) {
    auto ok = [&](int v) { return v == a || v == b || !allowed || (*allowed)[v]; };
    std::vector<int> dist(host.n(), 0);  // vertex count to b, 0 = unreachable
    dist[b] = 1;
    std::deque<int> queue{b};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : host.neighbors(x)) {
            if (y >= x || y < a || dist[y] || !ok(y)) continue;
            dist[y] = dist[x] + 1;
            queue.push_back(y);
        }
    }
    if (!dist[a]) return {};
    std::vector<int> seq{a};
    int cur = a;
    while (cur != b) {
        for (int y : host.neighbors(cur)) {
            if (y <= cur || y > b || !ok(y) || dist[y] != dist[cur] - 1) continue;
            seq.push_back(y);
            cur = y;
            break;
        }
    }
    return seq;
}

// Induced sub-host on vertices [lo, hi), re-indexed from 0.
PathGraph induced_interval_host(const PathGraph& host, int lo, int hi) {
    std::vector<Edge> chords;
    for (auto [i, j] : host.chords())
        if (i >= lo && j < hi) chords.emplace_back(i - lo, j - lo);
    return PathGraph(hi - lo, std::move(chords));
}

// Induced sub-pattern on the label interval [lo, hi); in the Dyck
// decomposition partners never straddle the cut.
OrderedGraph induced_interval_pattern(const OrderedGraph& h, int lo, int hi) {
    std::vector<Edge> edges;
    for (auto [i, j] : h.edges())
        if (i >= lo && j < hi) edges.emplace_back(i - lo, j - lo);
    return OrderedGraph(hi - lo, std::move(edges));
}

long long iceil_div(long long a, long long b) { return (a + b - 1) / b; }

// Smallest tau with tau^d >= n^(d-1), i.e. ceil(n^(1-1/d)).
long long tau_threshold(long long n, int d) {
    if (n <= 1 || d <= 1) return 1;
    bigint target = boost::multiprecision::pow(bigint(n), unsigned(d - 1));
    long long lo = 1, hi = n;
    while (lo < hi) {
        long long mid = lo + (hi - lo) / 2;
        if (boost::multiprecision::pow(bigint(mid), unsigned(d)) >= target)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

int partner_of_first(const OrderedGraph& h) {
    for (auto [i, j] : h.edges())
        if (i == 0) return j;
    throw std::logic_error("perfect matching without an edge at vertex 0");
}

}  // namespace

InducedPath shortest_increasing_path(const PathGraph& host, int a, int b) {
    if (a < 0 || b >= host.n() || a >= b)
        throw std::invalid_argument("shortest_increasing_path: need 0 <= a < b < n");
    return validate_induced_path(host, shortest_increasing_seq(host, a, b));
}

InducedPath span_path(const PathGraph& host) {
    if (host.n() < 2) throw std::invalid_argument("span_path: n must be >= 2");
    InducedPath p = shortest_increasing_path(host, 0, host.n() - 1);
    long long ell = max_span(host);
    if (static_cast<long long>(p.order()) * ell < host.n())
        throw std::logic_error("span_path: order below n / max_span");
    return p;
}

// --- solve_noncrossing ----------------------------------------------------

long long guarantee_noncrossing(long long n, const OrderedGraph& h) {
    if (!is_perfect_matching(h) || h.edges().empty() || has_crossing_pair(h))
        throw std::invalid_argument(
            "guarantee_noncrossing: pattern must be a non-empty non-crossing perfect matching");
    if (n <= 1) return std::max<long long>(n, 0);
    if (h.edges().size() == 1) return n;
    int p = partner_of_first(h);
    OrderedGraph b = induced_interval_pattern(h, p + 1, h.n());
    if (b.n() > 0) {
        OrderedGraph first = induced_interval_pattern(h, 0, p + 1);
        return std::min(guarantee_noncrossing(n / 2, first),
                        guarantee_noncrossing(n - n / 2, b));
    }
    OrderedGraph a = induced_interval_pattern(h, 1, p);
    int d = depth(h);
    long long tau = tau_threshold(n, d);
    return std::min(iceil_div(n, tau), guarantee_noncrossing(tau, a));
}

namespace {

SolveOutcome solve_nc_range(const PathGraph& host, int lo, int hi, const OrderedGraph& h) {
    const int n = hi - lo;
    if (n <= 1) {
        std::vector<int> seq;
        for (int v = lo; v < hi; ++v) seq.push_back(v);
        return SolveOutcome::make_path(InducedPath{seq, true}, n, "tiny-range");
    }
    if (h.edges().size() == 1) {
        for (auto [i, j] : host.chords())
            if (i >= lo && j < hi)
                return SolveOutcome::make_witness(
                    PatternEmbedding{{i, j}, j - i}, h, "base-edge-witness");
        std::vector<int> seq(n);
        for (int v = 0; v < n; ++v) seq[v] = lo + v;
        return SolveOutcome::make_path(InducedPath{seq, true}, n, "base-bare-path");
    }

    int p = partner_of_first(h);
    OrderedGraph bpat = induced_interval_pattern(h, p + 1, h.n());
    if (bpat.n() > 0) {
        OrderedGraph first = induced_interval_pattern(h, 0, p + 1);
        int mid = lo + n / 2;
        SolveOutcome left = solve_nc_range(host, lo, mid, first);
        if (left.is_path()) {
            left.provenance = "concat-left/" + left.provenance;
            return left;
        }
        SolveOutcome right = solve_nc_range(host, mid, hi, bpat);
        if (right.is_path()) {
            right.provenance = "concat-right/" + right.provenance;
            return right;
        }
        std::vector<int> pos = left.witness.positions;
        pos.insert(pos.end(), right.witness.positions.begin(), right.witness.positions.end());
        return SolveOutcome::make_witness(
            PatternEmbedding{pos, PatternEmbedding::compute_gap(pos)}, h, "concat-witness");
    }

    OrderedGraph apat = induced_interval_pattern(h, 1, p);
    int d = depth(h);  // = depth(apat) + 1 >= 2 here
    long long tau = tau_threshold(n, d);

    // leftmost maximum-span edge of the range (path edges span 1)
    int best_i = lo, best_j = lo + 1, best_span = 1;
    for (auto [i, j] : host.chords())
        if (i >= lo && j < hi && j - i > best_span) best_i = i, best_j = j, best_span = j - i;

    if (best_span <= tau) {
        // an increasing path from lo to hi-1 stays inside the range, and
        // every hop is at most best_span
        std::vector<int> seq = shortest_increasing_seq(host, lo, hi - 1);
        return SolveOutcome::make_path(InducedPath{seq, true},
                                       iceil_div(n, best_span), "span-path");
    }

    SolveOutcome inner = solve_nc_range(host, best_i + 1, best_j, apat);
    if (inner.is_path()) {
        inner.provenance = "interior/" + inner.provenance;
        return inner;
    }
    std::vector<int> pos{best_i};
    pos.insert(pos.end(), inner.witness.positions.begin(), inner.witness.positions.end());
    pos.push_back(best_j);
    return SolveOutcome::make_witness(
        PatternEmbedding{pos, PatternEmbedding::compute_gap(pos)}, h, "interior-witness");
}

}  // namespace

SolveOutcome solve_noncrossing(const PathGraph& host, const OrderedGraph& h) {
    if (!is_perfect_matching(h) || h.edges().empty() || has_crossing_pair(h))
        throw std::invalid_argument(
            "solve_noncrossing: pattern must be a non-empty non-crossing perfect matching");
    SolveOutcome out = solve_nc_range(host, 0, host.n(), h);
    if (out.is_path()) {
        out.guarantee = guarantee_noncrossing(host.n(), h);
        out.path = validate_induced_path(host, out.path.vertices);
        if (out.path.order() < out.guarantee)
            throw std::logic_error("solve_noncrossing: path below guarantee");
    } else {
        out.witness = validate_embedding(host, h, out.witness.positions);
    }
    return out;
}

// --- solve_crossing_free --------------------------------------------------

namespace {

// Maximal edges of the range, the dropped (lo, hi-1) edge excluded:
// no other in-range edge (k, l) with k <= i and j <= l.
std::vector<Edge> maximal_edges(const PathGraph& host, int lo, int hi) {
    std::vector<Edge> all;
    for (int v = lo; v + 1 < hi; ++v) all.emplace_back(v, v + 1);
    for (auto [i, j] : host.chords())
        if (i >= lo && j < hi && !(i == lo && j == hi - 1)) all.emplace_back(i, j);
    std::vector<Edge> maximal;
    for (auto [i, j] : all) {
        bool dominated = false;
        for (auto [k, l] : all)
            if ((k != i || l != j) && k <= i && j <= l) { dominated = true; break; }
        if (!dominated) maximal.emplace_back(i, j);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

std::pair<std::vector<int>, std::vector<int>> crossing_free_rec(const PathGraph& host, int lo,
                                                                int hi) {
    const int n = hi - lo;
    if (n <= 2) return {{lo}, {hi - 1}};

    std::vector<Edge> f = maximal_edges(host, lo, hi);
    const int t = static_cast<int>(f.size());
    if (t < 2) throw std::logic_error("crossing-free recursion: |F| < 2");

    // f is an increasing path lo .. hi-1; find the leftmost edge with
    // (j - i + 1) * t >= n
    int pick = -1;
    for (int k = 0; k < t; ++k) {
        auto [i, j] = f[k];
        if (static_cast<long long>(j - i + 1) * t >= n) { pick = k; break; }
    }
    if (pick < 0) throw std::logic_error("crossing-free recursion: no wide F-edge");
    auto [i, j] = f[pick];

    auto [lin, rin] = crossing_free_rec(host, i, j + 1);

    // F-path vertices are w_0 .. w_t with w_k = f[k].first and
    // w_t = f[t-1].second; lin starts at w_pick = i, rin ends at
    // w_{pick+1} = j.
    std::vector<int> left, right;
    for (int k = 0; k < pick; ++k) left.push_back(f[k].first);
    left.insert(left.end(), lin.begin(), lin.end());
    right = rin;
    for (int k = pick + 1; k < t; ++k) right.push_back(f[k].second);
    return {left, right};
}

}  // namespace

std::pair<InducedPath, InducedPath> solve_crossing_free(const PathGraph& host) {
    if (host.n() < 2) throw std::invalid_argument("solve_crossing_free: n must be >= 2");
    const auto& chords = host.chords();
    for (size_t x = 0; x < chords.size(); ++x)
        for (size_t y = 0; y < chords.size(); ++y) {
            auto [a, c] = chords[x];
            auto [b, d] = chords[y];
            if (a < b && b < c && c < d)
                throw std::invalid_argument("solve_crossing_free: host has a crossing pair");
        }
    auto [l, r] = crossing_free_rec(host, 0, host.n());
    InducedPath lp = validate_induced_path(host, l);
    InducedPath rp = validate_induced_path(host, r);
    if (!lp.increasing || !rp.increasing)
        throw std::logic_error("solve_crossing_free: non-increasing output");
    long long need = 0;
    while ((1ll << need) < host.n()) ++need;  // ceil(log2 n)
    if (lp.order() + rp.order() < need)
        throw std::logic_error("solve_crossing_free: |L|+|R| below log2 n");
    return {lp, rp};
}

// --- find_gap_or_path -----------------------------------------------------

namespace {

struct Blocks {
    // 1-based blocks; block i covers [start[i], end[i]] inclusive
    std::vector<int> start, end;
    int m;
};

Blocks make_blocks(int n, int m) {
    Blocks b;
    b.m = m;
    b.start.assign(m + 1, 0);
    b.end.assign(m + 1, 0);
    int q = n / m, r = n % m, at = 0;
    for (int i = 1; i <= m; ++i) {
        int size = q + (i <= r ? 1 : 0);
        b.start[i] = at;
        b.end[i] = at + size - 1;
        at += size;
    }
    return b;
}

}  // namespace

SolveOutcome find_gap_or_path(const PathGraph& host, const OrderedGraph& h, int m, int t) {
    const int n = host.n();
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("find_gap_or_path: m must be odd and >= 3");
    if (t < 2) throw std::invalid_argument("find_gap_or_path: t must be >= 2");
    if (m > n) throw std::invalid_argument("find_gap_or_path: m exceeds host order");
    if (!is_matching(h) || h.edges().empty())
        throw std::invalid_argument("find_gap_or_path: pattern must be a non-empty matching");

    const long long need_gap = iceil_div(n, static_cast<long long>(m) * t);
    Blocks blocks = make_blocks(n, m);

    // Q_i for even blocks: shortest increasing crossing path; if one
    // reaches order t it is the path outcome.
    std::vector<std::vector<int>> qminus(m + 1), qplus(m + 1);
    for (int i = 2; i <= m - 1; i += 2) {
        std::vector<char> allowed(n, 0);
        for (int v = blocks.start[i]; v <= blocks.end[i]; ++v) allowed[v] = 1;
        std::vector<int> q = shortest_increasing_seq(host, blocks.end[i - 1],
                                                     blocks.start[i + 1], &allowed);
        if (static_cast<int>(q.size()) >= t)
            return SolveOutcome::make_path(validate_induced_path(host, q), t, "q-path");
        // leftmost maximum hop
        int cut = 0;
        for (size_t k = 1; k + 1 < q.size(); ++k)
            if (q[k + 1] - q[k] > q[cut + 1] - q[cut]) cut = static_cast<int>(k);
        qminus[i].assign(q.begin(), q.begin() + cut + 1);
        qplus[i].assign(q.begin() + cut + 1, q.end());
    }

    // contracted host on the odd blocks 1, 3, ..., m-2
    const int s = (m - 1) / 2;
    std::vector<std::vector<int>> piece(s);  // P' sequences, host coordinates
    std::vector<int> block_of(n, -1);
    for (int x = 0; x < s; ++x) {
        int i = 2 * x + 1;
        auto& seq = piece[x];
        if (i > 1) seq = qplus[i - 1];
        if (seq.empty() || seq.back() != blocks.start[i]) {
            for (int v = blocks.start[i]; v <= blocks.end[i]; ++v) seq.push_back(v);
        } else {
            for (int v = blocks.start[i] + 1; v <= blocks.end[i]; ++v) seq.push_back(v);
        }
        if (i + 1 <= m - 1) {
            const auto& qm = qminus[i + 1];
            seq.insert(seq.end(), qm.begin() + 1, qm.end());  // qm starts at end[i]
        }
        for (int v : seq) block_of[v] = x;
    }

    std::vector<Edge> gchords;
    for (auto [u, v] : host.chords()) {
        int bu = block_of[u], bv = block_of[v];
        if (bu < 0 || bv < 0 || bu == bv) continue;
        if (std::abs(bu - bv) >= 2) gchords.emplace_back(std::min(bu, bv), std::max(bu, bv));
    }
    std::sort(gchords.begin(), gchords.end());
    gchords.erase(std::unique(gchords.begin(), gchords.end()), gchords.end());
    PathGraph contracted(s, gchords);

    SolveOutcome inner = solve_matching(contracted, h);

    if (!inner.is_path()) {
        // lift: each matched pattern vertex takes the endpoint of the
        // lexicographically smallest host chord realizing its edge;
        // isolated ones take the first vertex of their piece
        std::vector<int> pos(h.n(), -1);
        const auto& gpos = inner.witness.positions;
        for (auto [a, b] : h.edges()) {
            int ba = gpos[a], bb = gpos[b];
            Edge chosen{-1, -1};
            for (auto [u, v] : host.chords()) {
                if (block_of[u] == ba && block_of[v] == bb) { chosen = {u, v}; break; }
            }
            if (chosen.first < 0)
                throw std::logic_error("find_gap_or_path: contracted chord without host edge");
            pos[a] = chosen.first;
            pos[b] = chosen.second;
        }
        for (int v = 0; v < h.n(); ++v)
            if (pos[v] < 0) pos[v] = piece[gpos[v]].empty() ? -1 : *std::min_element(
                                         piece[gpos[v]].begin(), piece[gpos[v]].end());
        PatternEmbedding emb = validate_embedding(host, h, pos);
        if (emb.gap < need_gap) throw std::logic_error("find_gap_or_path: lifted gap too small");
        return SolveOutcome::make_witness(emb, h, "lift-witness");
    }

    // lift the contracted induced path by block-wise shortest completion
    const auto& qseq = inner.path.vertices;
    const int layers = static_cast<int>(qseq.size());
    // backward BFS over states (layer, host vertex)
    std::map<std::pair<int, int>, int> dist;
    std::deque<std::pair<int, int>> queue;
    for (int v : piece[qseq[layers - 1]]) {
        dist[{layers - 1, v}] = 1;
        queue.push_back({layers - 1, v});
    }
    auto in_piece = [&](int layer, int v) {
        return layer >= 0 && layer < layers && block_of[v] == qseq[layer];
    };
    while (!queue.empty()) {
        auto [layer, v] = queue.front();
        queue.pop_front();
        int d = dist[{layer, v}];
        for (int u : host.neighbors(v)) {
            for (int lprev : {layer, layer - 1}) {
                if (!in_piece(lprev, u)) continue;
                if (dist.count({lprev, u})) continue;
                dist[{lprev, u}] = d + 1;
                queue.push_back({lprev, u});
            }
        }
    }
    int start = -1, best = 0;
    for (int v : piece[qseq[0]]) {
        auto it = dist.find({0, v});
        if (it == dist.end()) continue;
        if (start < 0 || it->second < best || (it->second == best && v < start)) {
            start = v;
            best = it->second;
        }
    }
    if (start < 0) throw std::logic_error("find_gap_or_path: lift BFS failed");
    std::vector<int> lifted{start};
    int layer = 0, cur = start, remaining = best;
    while (remaining > 1) {
        bool stepped = false;
        for (int lnext : {layer, layer + 1}) {
            int cand = -1;
            for (int u : host.neighbors(cur)) {
                if (!in_piece(lnext, u)) continue;
                auto it = dist.find({lnext, u});
                if (it == dist.end() || it->second != remaining - 1) continue;
                if (cand < 0 || u < cand) cand = u;
            }
            if (cand >= 0 && (!stepped || cand < lifted.back())) {
                if (stepped) lifted.back() = cand;
                else lifted.push_back(cand);
                layer = lnext;
                stepped = true;
            }
        }
        if (!stepped) throw std::logic_error("find_gap_or_path: lift reconstruction failed");
        cur = lifted.back();
        --remaining;
    }
    InducedPath lp = validate_induced_path(host, lifted);
    if (lp.order() >= t) return SolveOutcome::make_path(lp, t, "lift-path");

    // Degenerate zone: the contracted host was too small for the inner
    // guarantee to reach t. Fall back to direct search.
    if (auto w = contains_pattern_with_gap(host, h, static_cast<int>(need_gap)))
        return SolveOutcome::make_witness(*w, h, "fallback-search");
    if (n <= 30) {
        InducedPath exact = longest_induced_path_exact(host);
        if (exact.order() >= t) return SolveOutcome::make_path(exact, t, "fallback-exact");
    }
    throw std::runtime_error(
        "find_gap_or_path: dichotomy unattainable at this size (lemma precondition unmet)");
}

// --- solve_matching ---------------------------------------------------------

namespace {

long long iceil_log2(long long n) {
    long long l = 0;
    while ((1ll << l) < n) ++l;
    return l;
}

// smallest t with t^d >= x
long long iroot_ceil(long long x, int d) {
    long long t = 1;
    while (true) {
        bigint p = boost::multiprecision::pow(bigint(t), unsigned(d));
        if (p >= x) return t;
        ++t;
    }
}

struct InductiveParams {
    int t, s, p;  // t, iteration count s, partner of pattern vertex 0
    OrderedGraph h_minus;
};

InductiveParams inductive_params(long long n, const OrderedGraph& h) {
    InductiveParams out{2, 1, 0, OrderedGraph()};
    int d = static_cast<int>(h.edges().size()) - 1;
    out.t = static_cast<int>(std::max<long long>(2, iroot_ceil(iceil_log2(n), d)));
    out.s = (out.t + 1) / 2;
    out.p = partner_of_first(h);
    std::vector<Edge> edges;
    auto relabel = [&](int v) { return v - 1 - (v > out.p ? 1 : 0); };
    for (auto [i, j] : h.edges())
        if (i != 0) edges.emplace_back(relabel(i), relabel(j));
    out.h_minus = OrderedGraph(h.n() - 2, std::move(edges));
    return out;
}

}  // namespace

long long guarantee_matching(long long n, const OrderedGraph& h_in) {
    if (!is_matching(h_in) || h_in.edges().empty())
        throw std::invalid_argument("guarantee_matching: pattern must be a non-empty matching");
    OrderedGraph h = strip_isolated(h_in);
    if (n <= 1) return std::max<long long>(n, 0);
    const auto ecount = h.edges().size();
    if (ecount == 1) return n;
    if (is_noncrossing(h)) return guarantee_noncrossing(n, h);
    if (ecount == 2) return iceil_div(iceil_log2(n), 2);
    InductiveParams ip = inductive_params(n, h);
    return std::max<long long>(1, (ip.s + 1) / 2);
}

SolveOutcome solve_matching(const PathGraph& host, const OrderedGraph& h) {
    if (!is_matching(h) || h.edges().empty())
        throw std::invalid_argument("solve_matching: pattern must be a non-empty matching");
    const int n = host.n();
    const long long guarantee = guarantee_matching(n, h);
    if (n == 1)  // a single vertex hosts no edge pattern and no chords
        return SolveOutcome::make_path(InducedPath{{0}, true}, guarantee, "trivial-vertex");

    OrderedGraph hp = strip_isolated(h);
    if (hp.n() != h.n()) {
        SolveOutcome inner = solve_matching(host, hp);
        if (inner.is_path()) {
            inner.provenance = "strip/" + inner.provenance;
            inner.guarantee = guarantee;
            return inner;
        }
        // re-insert isolated vertices into the witness gaps
        std::vector<int> matched;  // h labels with degree > 0, ascending
        for (int v = 0; v < h.n(); ++v)
            if (h.degree(v) > 0) matched.push_back(v);
        const auto& wpos = inner.witness.positions;
        std::vector<int> pos(h.n(), -1);
        bool ok = true;
        for (size_t k = 0; k < matched.size(); ++k) pos[matched[k]] = wpos[k];
        // isolated runs: before the first matched label, between
        // consecutive ones, after the last
        int prev_label = -1, prev_pos = -1;
        for (size_t k = 0; k <= matched.size() && ok; ++k) {
            int label = k < matched.size() ? matched[k] : h.n();
            int anchor = k < matched.size() ? wpos[k] : n;
            int run = label - prev_label - 1;
            if (run > 0) {
                if (anchor - prev_pos - 1 < run) { ok = false; break; }
                for (int r = 0; r < run; ++r) pos[prev_label + 1 + r] = prev_pos + 1 + r;
            }
            prev_label = label;
            prev_pos = anchor;
        }
        if (ok)
            return SolveOutcome::make_witness(validate_embedding(host, h, pos), h,
                                              "strip-lift/" + inner.provenance);
        if (auto w = contains_pattern(host, h))
            return SolveOutcome::make_witness(*w, h, "strip-fallback-search");
        if (n <= 30) {
            InducedPath exact = longest_induced_path_exact(host);
            if (exact.order() >= guarantee)
                return SolveOutcome::make_path(exact, guarantee, "strip-fallback-exact");
        }
        throw std::runtime_error("solve_matching: isolated-vertex lift unattainable");
    }

    // h is now a perfect matching
    if (h.edges().size() == 1) {
        if (!host.chords().empty()) {
            auto [i, j] = host.chords().front();
            return SolveOutcome::make_witness(PatternEmbedding{{i, j}, j - i}, h,
                                              "single-edge-witness");
        }
        std::vector<int> seq(n);
        for (int v = 0; v < n; ++v) seq[v] = v;
        return SolveOutcome::make_path(InducedPath{seq, true}, guarantee, "single-edge-path");
    }

    if (is_noncrossing(h)) {
        SolveOutcome out = solve_noncrossing(host, h);
        out.provenance = "noncrossing/" + out.provenance;
        return out;
    }

    if (h.edges().size() == 2) {
        if (auto w = contains_pattern(host, h))
            return SolveOutcome::make_witness(*w, h, "crossing-pair-witness");
        auto [l, r] = solve_crossing_free(host);
        InducedPath pick = r.order() > l.order() ? r : l;
        return SolveOutcome::make_path(pick, guarantee, "crossing-free-half");
    }

    // inductive case: nested windows around the removed edge's slot
    InductiveParams ip = inductive_params(n, h);
    const int k = h.n();
    // smallest odd m with Gm((m-1)/2, h_minus) >= t
    int m = -1;
    for (int cand = 3; cand <= n; cand += 2)
        if (guarantee_matching((cand - 1) / 2, ip.h_minus) >= ip.t) { m = cand; break; }

    int lo = 0, hi = n;
    std::vector<int> last_copy;  // host positions of the latest h_minus copy
    int copies = 0;
    for (int iter = 0; iter < ip.s && m > 0; ++iter) {
        if (hi - lo < m) break;
        PathGraph window = induced_interval_host(host, lo, hi);
        SolveOutcome step;
        try {
            step = find_gap_or_path(window, ip.h_minus, m, ip.t);
        } catch (const std::runtime_error&) {
            break;  // degenerate zone; finish with the copies found so far
        }
        if (step.is_path()) {
            std::vector<int> seq = step.path.vertices;
            for (int& v : seq) v += lo;
            return SolveOutcome::make_path(validate_induced_path(host, seq), guarantee,
                                           "window-path/" + step.provenance);
        }
        std::vector<int> copy = step.witness.positions;
        for (int& v : copy) v += lo;
        // abort check: a chord from before the copy into the slot of the
        // removed partner completes a full h-embedding
        int first_pos = copy.front();
        int y_lo = ip.p >= 2 ? copy[ip.p - 2] : -1;           // image of label p-1
        int y_hi = ip.p + 1 <= k - 1 ? copy[ip.p - 1] : hi;   // image of label p+1
        Edge found{-1, -1};
        for (auto [x, y] : host.chords()) {
            if (x < first_pos && y > std::max(y_lo, x) && y < y_hi) { found = {x, y}; break; }
        }
        if (found.first >= 0) {
            std::vector<int> pos(k, -1);
            pos[0] = found.first;
            pos[ip.p] = found.second;
            for (int v = 0, q = 0; v < k; ++v)
                if (v != 0 && v != ip.p) pos[v] = copy[q++];
            return SolveOutcome::make_witness(validate_embedding(host, h, pos), h,
                                              "window-abort-witness");
        }
        last_copy = copy;
        ++copies;
        int new_lo = ip.p >= 2 ? copy[ip.p - 2] + 1 : lo;
        int new_hi = ip.p + 1 <= k - 1 ? copy[ip.p - 1] : hi;
        lo = new_lo;
        hi = new_hi;
    }

    // The nested-window machinery came up short of the iteration target
    // (possible only below the scale where the lemma preconditions hold).
    // A path of order >= t would have been the proof outcome; prefer a
    // direct witness before settling for a weak path above the guarantee.
    std::optional<InducedPath> weak;
    if (copies > 0) {
        for (int vc = std::max(1, lo); vc < hi; ++vc) {
            if (std::find(last_copy.begin(), last_copy.end(), vc) != last_copy.end()) continue;
            weak = shortest_increasing_path(host, 0, vc);
            break;
        }
    }
    if (!weak && n >= 2) weak = shortest_increasing_path(host, 0, n - 1);
    if (weak && weak->order() >= ip.t)
        return SolveOutcome::make_path(*weak, guarantee, copies > 0 ? "finish" : "trivial-span");
    if (auto w = contains_pattern(host, h))
        return SolveOutcome::make_witness(*w, h, "degenerate-witness");
    if (weak && weak->order() >= guarantee)
        return SolveOutcome::make_path(*weak, guarantee, copies > 0 ? "finish" : "trivial-span");
    if (n <= 30) {
        InducedPath exact = longest_induced_path_exact(host);
        if (exact.order() >= guarantee)
            return SolveOutcome::make_path(exact, guarantee, "fallback-exact");
    }
    throw std::runtime_error("solve_matching: guarantee unattainable at this size");
}

// --- grs_search -------------------------------------------------------------

GrsOutcome grs_search(const PathGraph& host, int p) {
    if (p <= 0 || p % 4 != 0)
        throw std::invalid_argument("grs_search: p must be a positive multiple of 4");
    const int n = host.n();
    if (p > n) throw std::invalid_argument("grs_search: p exceeds host order");

    GrsOutcome out;
    out.p = p;

    // fixed increasing induced paths for all pairs
    std::vector<std::vector<std::vector<int>>> paths(n);
    for (int i = 0; i < n; ++i) {
        paths[i].resize(n);
        for (int j = i + 1; j < n; ++j) {
            paths[i][j] = shortest_increasing_seq(host, i, j);
            if (static_cast<int>(paths[i][j].size()) >= p) {
                out.kind = GrsOutcome::Kind::path;
                out.path = validate_induced_path(host, paths[i][j]);
                out.provenance = "pair-path";
                return out;
            }
        }
    }

    // color of a 4-subset i<j<k<l: 0 if no host edge joins P_{i,j} to
    // P_{k,l}; else 1-based indices of the lexicographically smallest
    // joining edge's endpoints on their paths
    auto color_of = [&](int i, int j, int k, int l) -> std::pair<int, int> {
        const auto& pij = paths[i][j];
        const auto& pkl = paths[k][l];
        for (int x : pij)
            for (int y : pkl)
                if (host.adjacent(x, y)) {
                    int s = static_cast<int>(std::find(pij.begin(), pij.end(), x) - pij.begin());
                    int t = static_cast<int>(std::find(pkl.begin(), pkl.end(), y) - pkl.begin());
                    return {s + 1, t + 1};
                }
        return {0, 0};
    };

    // monochromatic 4-clique of size 2p: greedy first, then exhaustive
    const int target = 2 * p;
    std::vector<int> clique;
    std::pair<int, int> clique_color{-1, -1};

    auto consistent = [&](std::vector<int>& set, int v) {
        const int sz = static_cast<int>(set.size());
        if (sz < 3) return true;
        for (int a = 0; a < sz; ++a)
            for (int b = a + 1; b < sz; ++b)
                for (int c = b + 1; c < sz; ++c) {
                    auto col = color_of(set[a], set[b], set[c], v);
                    if (clique_color.first < 0) clique_color = col;
                    else if (col != clique_color) return false;
                }
        return true;
    };

    // greedy pass
    {
        std::vector<int> set;
        clique_color = {-1, -1};
        for (int v = 0; v < n && static_cast<int>(set.size()) < target; ++v) {
            auto saved = clique_color;
            if (consistent(set, v)) set.push_back(v);
            else clique_color = saved;
        }
        if (static_cast<int>(set.size()) >= target) clique = set;
        out.best_clique = static_cast<int>(set.size());
    }

    if (clique.empty()) {
        // exhaustive backtracking, lexicographic
        std::vector<int> set;
        std::pair<int, int> color{-1, -1};
        auto rec = [&](auto&& self, int from) -> bool {
            if (static_cast<int>(set.size()) == target) return true;
            if (n - from < target - static_cast<int>(set.size())) return false;
            for (int v = from; v < n; ++v) {
                auto saved = color;
                bool ok = true;
                const int sz = static_cast<int>(set.size());
                for (int a = 0; a < sz && ok; ++a)
                    for (int b = a + 1; b < sz && ok; ++b)
                        for (int c = b + 1; c < sz && ok; ++c) {
                            auto col = color_of(set[a], set[b], set[c], v);
                            if (color.first < 0) color = col;
                            else if (col != color) ok = false;
                        }
                if (ok) {
                    set.push_back(v);
                    out.best_clique = std::max(out.best_clique, static_cast<int>(set.size()));
                    if (self(self, v + 1)) return true;
                    set.pop_back();
                }
                color = saved;
            }
            return false;
        };
        if (rec(rec, 0)) {
            clique = set;
            clique_color = color;
        }
    }

    if (clique.empty()) {
        out.kind = GrsOutcome::Kind::no_clique;
        out.provenance = "no-clique";
        return out;
    }

    if (clique_color == std::pair<int, int>{0, 0}) {
        // increasing induced path through the union of consecutive-pair paths
        std::vector<char> allowed(n, 0);
        for (int q = 0; q + 1 < target; ++q)
            for (int v : paths[clique[q]][clique[q + 1]]) allowed[v] = 1;
        std::vector<int> seq =
            shortest_increasing_seq(host, clique.front(), clique.back(), &allowed);
        out.path = validate_induced_path(host, seq);
        if (out.path.order() < p) throw std::logic_error("grs_search: color-0 path below p");
        out.kind = GrsOutcome::Kind::path;
        out.provenance = "color0-path";
        return out;
    }

    // color (s, t): read off the half-graph H_{p/4}
    auto [cs, ct] = clique_color;
    std::vector<int> positions;
    for (int i = 0; i < p / 4; ++i) {
        const auto& pa = paths[clique[4 * i]][clique[4 * i + 1]];
        const auto& pb = paths[clique[4 * i + 2]][clique[4 * i + 3]];
        if (cs > static_cast<int>(pa.size()) || ct > static_cast<int>(pb.size()))
            throw std::logic_error("grs_search: color index beyond path order");
        positions.push_back(pa[cs - 1]);
        positions.push_back(pb[ct - 1]);
    }
    OrderedGraph hg = gen_halfgraph_pattern(p / 4);
    out.witness = validate_embedding(host, hg, positions);
    out.witness_pattern = hg;
    out.kind = GrsOutcome::Kind::witness;
    out.provenance = "color-st-halfgraph";
    return out;
}

}  // namespace ordpath
