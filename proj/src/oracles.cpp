#include "ordpath/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "ordpath/patterns.hpp"

namespace ordpath {

namespace {

struct MaskHost {
    int n = 0;
    std::vector<std::uint64_t> adj;  // full adjacency, n <= 63
    std::uint64_t all = 0;

    static MaskHost from(const PathGraph& g) {
        MaskHost m;
        m.n = g.n();
        m.adj.assign(g.n(), 0);
        for (int v = 0; v < g.n(); ++v) {
            if (v > 0) m.adj[v] |= 1ull << (v - 1);
            if (v + 1 < g.n()) m.adj[v] |= 1ull << (v + 1);
        }
        for (auto [i, j] : g.chords()) {
            m.adj[i] |= 1ull << j;
            m.adj[j] |= 1ull << i;
        }
        m.all = g.n() == 64 ? ~0ull : (1ull << g.n()) - 1;
        return m;
    }
};

// Two-pass branch and bound: pass 1 finds the maximum order with an
// availability bound, pass 2 re-walks in lexicographic order and stops
// at the first path of that order.
struct LongestPathSearch {
    const MaskHost& host;
    bool increasing;
    int best_len = 0;

    explicit LongestPathSearch(const MaskHost& h, bool inc) : host(h), increasing(inc) {}

    std::uint64_t candidates(int tip, std::uint64_t used, std::uint64_t conflict) const {
        std::uint64_t cand = host.adj[tip] & ~used & ~conflict & host.all;
        if (increasing) cand &= ~((1ull << tip) | ((1ull << tip) - 1));
        return cand;
    }

    void pass1(int tip, std::uint64_t used, std::uint64_t conflict, int len) {
        best_len = std::max(best_len, len);
        std::uint64_t avail = ~(used | conflict) & host.all;
        if (increasing) avail &= ~((1ull << tip) - 1);
        if (len + std::popcount(avail) <= best_len) return;
        std::uint64_t cand = candidates(tip, used, conflict);
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            pass1(v, used | (1ull << v), conflict | host.adj[tip], len + 1);
        }
    }

    bool pass2(int tip, std::uint64_t used, std::uint64_t conflict, int len,
               std::vector<int>& path) const {
        if (len == best_len) return true;
        std::uint64_t avail = ~(used | conflict) & host.all;
        if (increasing) avail &= ~((1ull << tip) - 1);
        if (len + std::popcount(avail) < best_len) return false;
        std::uint64_t cand = candidates(tip, used, conflict);
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            path.push_back(v);
            if (pass2(v, used | (1ull << v), conflict | host.adj[tip], len + 1, path))
                return true;
            path.pop_back();
        }
        return false;
    }

    std::vector<int> run() {
        for (int s = 0; s < host.n; ++s) pass1(s, 1ull << s, 0, 1);
        for (int s = 0; s < host.n; ++s) {
            std::vector<int> path{s};
            if (pass2(s, 1ull << s, 0, 1, path)) return path;
        }
        return {};
    }
};

InducedPath longest_path_impl(const PathGraph& host, int cap, bool increasing) {
    if (cap > 63) cap = 63;
    if (host.n() > cap)
        throw CapExceeded("longest path oracle: n = " + std::to_string(host.n()) +
                          " exceeds cap " + std::to_string(cap));
    MaskHost m = MaskHost::from(host);
    LongestPathSearch search(m, increasing);
    auto seq = search.run();
    return validate_induced_path(host, seq);
}

}  // namespace

InducedPath longest_induced_path_exact(const PathGraph& host, int cap) {
    return longest_path_impl(host, cap, false);
}

InducedPath longest_increasing_induced_path_exact(const PathGraph& host, int cap) {
    return longest_path_impl(host, cap, true);
}

namespace {

std::vector<Edge> chord_slots(int n) {
    std::vector<Edge> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j) slots.emplace_back(i, j);
    return slots;
}

struct ChunkResult {
    bool any = false;
    int value = 0;
    std::uint64_t witness_mask = 0;
    std::uint64_t count = 0;
};

}  // namespace

GhnResult ghn_exact(const OrderedGraph& h, int n, int threads) {
    if (n < 1 || n > 8)
        throw CapExceeded("ghn_exact: n = " + std::to_string(n) + " out of range 1..8");
    if (threads < 1) threads = 1;
    auto slots = chord_slots(n);
    const int k = static_cast<int>(slots.size());
    const std::uint64_t total = 1ull << k;
    const int chunk_bits = std::min(k, 8);
    const std::uint64_t num_chunks = 1ull << chunk_bits;
    const std::uint64_t per_chunk = total >> chunk_bits;

    std::vector<ChunkResult> results(num_chunks);
    std::atomic<std::uint64_t> next_chunk{0};

    auto worker = [&] {
        std::vector<Edge> chords;
        chords.reserve(k);
        for (;;) {
            std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= num_chunks) break;
            ChunkResult local;
            for (std::uint64_t mask = c * per_chunk; mask < (c + 1) * per_chunk; ++mask) {
                chords.clear();
                for (int b = 0; b < k; ++b)
                    if (mask >> b & 1) chords.push_back(slots[b]);
                PathGraph host(n, chords);
                if (contains_pattern(host, h)) continue;
                ++local.count;
                int order = longest_induced_path_exact(host).order();
                if (!local.any || order < local.value) {
                    local.any = true;
                    local.value = order;
                    local.witness_mask = mask;
                }
            }
            results[c] = local;
        }
    };

    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    // Deterministic merge: global minimum; ties resolve to the smallest
    // witness mask, which is the first chunk attaining the minimum since
    // chunks partition the mask space in order.
    GhnResult out;
    out.n = n;
    bool any = false;
    int best_value = 0;
    std::uint64_t best_mask = 0;
    for (const auto& r : results) {
        out.count_avoiding += r.count;
        if (!r.any) continue;
        if (!any || r.value < best_value) {
            any = true;
            best_value = r.value;
            best_mask = r.witness_mask;
        }
    }
    if (!any) {
        out.unavoidable = true;
        return out;
    }
    out.value = best_value;
    std::vector<Edge> chords;
    for (int b = 0; b < k; ++b)
        if (best_mask >> b & 1) chords.push_back(slots[b]);
    out.witness = PathGraph(n, std::move(chords));
    return out;
}

std::optional<KttWitness> contains_ktt(const PathGraph& host, int t) {
    if (t < 1 || t > 3) throw CapExceeded("contains_ktt: t out of range 1..3");
    if (host.n() > 20) throw CapExceeded("contains_ktt: n exceeds cap 20");
    const int n = host.n();
    std::vector<std::uint64_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : host.neighbors(v)) adj[v] |= 1ull << u;

    std::vector<int> a(t);
    auto pick = [&](auto&& self, int idx, int from, std::uint64_t common,
                    std::uint64_t a_mask) -> std::optional<KttWitness> {
        if (idx == t) {
            std::uint64_t cand = common & ~a_mask;
            if (std::popcount(cand) < t) return std::nullopt;
            KttWitness w;
            w.side_a = a;
            for (int c = 0; c < t; ++c) {
                int v = std::countr_zero(cand);
                cand &= cand - 1;
                w.side_b.push_back(v);
            }
            return w;
        }
        for (int v = from; v < n; ++v) {
            std::uint64_t next = idx == 0 ? adj[v] : (common & adj[v]);
            if (std::popcount(next & ~(a_mask | (1ull << v))) < t) continue;
            a[idx] = v;
            if (auto w = self(self, idx + 1, v + 1, next, a_mask | (1ull << v))) return w;
        }
        return std::nullopt;
    };
    return pick(pick, 0, 0, ~0ull, 0);
}

}  // namespace ordpath
