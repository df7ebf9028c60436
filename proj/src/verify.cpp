#include "ordpath/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ordpath/extremal.hpp"
#include "ordpath/ktt.hpp"
#include "ordpath/oracles.hpp"
#include "ordpath/patterns.hpp"
#include "ordpath/rng.hpp"
#include "ordpath/solvers.hpp"
#include "ordpath/tower.hpp"

namespace ordpath::verify {

namespace {

struct Suite {
    SuiteResult out;
    explicit Suite(std::string name) { out.suite = std::move(name); }

    void check(const std::string& name, bool pass, const std::string& detail = "") {
        out.results.push_back({name, pass, pass ? "" : detail});
    }

    template <typename Fn>
    void guarded(const std::string& name, Fn&& fn) {
        try {
            fn(*this, name);
        } catch (const std::exception& e) {
            check(name, false, std::string("exception: ") + e.what());
        }
    }
};

std::vector<Edge> chord_slots(int n) {
    std::vector<Edge> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j) slots.emplace_back(i, j);
    return slots;
}

PathGraph host_from_mask(int n, const std::vector<Edge>& slots, std::uint64_t mask) {
    std::vector<Edge> chords;
    for (size_t k = 0; k < slots.size(); ++k)
        if (mask >> k & 1) chords.push_back(slots[k]);
    return PathGraph(n, std::move(chords));
}

template <typename Fn>
void for_all_hosts(int n, Fn&& fn) {
    auto slots = chord_slots(n);
    for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask)
        fn(host_from_mask(n, slots, mask));
}

// Pairwise induced-path definition, restated from scratch.
bool induced_by_definition(const PathGraph& host, const std::vector<int>& seq) {
    if (seq.empty()) return false;
    std::set<int> distinct(seq.begin(), seq.end());
    if (distinct.size() != seq.size()) return false;
    for (size_t a = 0; a < seq.size(); ++a)
        for (size_t b = a + 1; b < seq.size(); ++b)
            if (host.adjacent(seq[a], seq[b]) != (b == a + 1)) return false;
    return true;
}

bool valid_embedding(const PathGraph& host, const OrderedGraph& h, const PatternEmbedding& e) {
    try {
        validate_embedding(host, h, e.positions);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

long long ceil_log2(long long n) {
    long long l = 0;
    while ((1ll << l) < n) ++l;
    return l;
}

OrderedGraph pattern_m() { return OrderedGraph(4, {{0, 2}, {1, 3}}); }
OrderedGraph pattern_nested() { return OrderedGraph(4, {{0, 3}, {1, 2}}); }
OrderedGraph pattern_p3() { return OrderedGraph(3, {{0, 1}, {1, 2}}); }

// --- core -----------------------------------------------------------------

SuiteResult suite_core(bool quick) {
    Suite s("core");

    s.guarded("round-trip-canonical", [&](Suite& s, const std::string& name) {
        bool ok = true;
        for (std::uint64_t seed = 1; seed <= (quick ? 20u : 200u); ++seed) {
            PathGraph g = random_host(10, 0.3, seed);
            ok = ok && parse_path_graph(serialize(g)) == g;
        }
        OrderedGraph m = pattern_m();
        ok = ok && parse_ordered_graph(serialize(m)) == m;
        s.check(name, ok);
    });

    s.guarded("validator-matches-definition", [&](Suite& s, const std::string& name) {
        const int n = 5;
        bool ok = true;
        for_all_hosts(n, [&](const PathGraph& host) {
            std::vector<int> seq;
            auto rec = [&](auto&& self, int depth) -> void {
                if (!seq.empty()) {
                    bool got = true;
                    try {
                        validate_induced_path(host, seq);
                    } catch (const std::exception&) {
                        got = false;
                    }
                    if (got != induced_by_definition(host, seq)) ok = false;
                }
                if (depth == 3) return;
                for (int v = 0; v < n; ++v) {
                    seq.push_back(v);
                    self(self, depth + 1);
                    seq.pop_back();
                }
            };
            rec(rec, 0);
        });
        s.check(name, ok);
    });

    s.guarded("max-span-bounds", [&](Suite& s, const std::string& name) {
        bool ok = true;
        for_all_hosts(quick ? 5 : 6, [&](const PathGraph& host) {
            int ms = max_span(host);
            if (host.n() >= 2 && ms < 1) ok = false;
            for (auto [i, j] : host.chords())
                if (j - i > ms) ok = false;
        });
        s.check(name, ok);
    });
    return s.out;
}

// --- patterns ---------------------------------------------------------------

// Exhaustive position-tuple reference for the containment search.
bool tuple_search(const PathGraph& host, const OrderedGraph& h, std::vector<int>& pos, int from) {
    int k = static_cast<int>(pos.size());
    if (k == h.n()) return true;
    for (int p = from; p < host.n(); ++p) {
        bool ok = true;
        for (auto [a, b] : h.edges())
            if (b == k && !host.has_chord(pos[a], p)) { ok = false; break; }
        if (!ok) continue;
        pos.push_back(p);
        if (tuple_search(host, h, pos, p + 1)) return true;
        pos.pop_back();
    }
    return false;
}

SuiteResult suite_patterns(bool quick) {
    Suite s("patterns");

    s.guarded("containment-matches-enumeration", [&](Suite& s, const std::string& name) {
        bool ok = true;
        std::vector<OrderedGraph> pats{pattern_m(), pattern_nested(), pattern_p3(),
                                       OrderedGraph(2, {{0, 1}}),
                                       OrderedGraph(5, {{0, 2}, {1, 4}})};
        const int n = quick ? 6 : 7;
        SplitMix64 rng(42);
        for (int iter = 0; iter < (quick ? 100 : 400); ++iter) {
            PathGraph host = random_host(n, rng.next_double(), rng.next());
            for (const auto& h : pats) {
                auto got = contains_pattern(host, h);
                std::vector<int> ref;
                bool has = tuple_search(host, h, ref, 0);
                if (got.has_value() != has) { ok = false; continue; }
                if (got && got->positions != ref) ok = false;
            }
        }
        s.check(name, ok);
    });

    s.guarded("depth-of-Mi", [&](Suite& s, const std::string& name) {
        bool ok = true;
        for (int i = 0; i <= 5; ++i) ok = ok && depth(gen_Mi(i)) == i;
        s.check(name, ok);
    });

    s.guarded("classify-matching-tiers", [&](Suite& s, const std::string& name) {
        bool ok = true;
        SplitMix64 rng(7);
        for (int iter = 0; iter < 200; ++iter) {
            int n = 2 + static_cast<int>(rng.next() % 7);
            std::vector<Edge> edges;
            std::vector<int> used(n, 0);
            for (int tries = 0; tries < n; ++tries) {
                int a = static_cast<int>(rng.next() % n), b = static_cast<int>(rng.next() % n);
                if (a == b || used[a] || used[b]) continue;
                used[a] = used[b] = 1;
                edges.emplace_back(std::min(a, b), std::max(a, b));
            }
            OrderedGraph h(n, edges);
            auto cls = classify(h);
            if (is_noncrossing(h)) {
                if (cls.lower != GrowthClass::Lower::polynomial) ok = false;
            } else {
                if (cls.lower != GrowthClass::Lower::polylog) ok = false;
            }
        }
        s.check(name, ok);
    });

    s.guarded("halfgraph-index-iff-one-sided", [&](Suite& s, const std::string& name) {
        bool ok = true;
        // exhaustive over all edge sets up to 6 vertices (5 in quick mode)
        for (int n = 2; n <= (quick ? 5 : 6); ++n) {
            std::vector<Edge> slots;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
            for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
                std::vector<Edge> edges;
                for (size_t k = 0; k < slots.size(); ++k)
                    if (mask >> k & 1) edges.push_back(slots[k]);
                OrderedGraph h(n, edges);
                if (halfgraph_index(h).has_value() != one_sided(h)) ok = false;
            }
        }
        s.check(name, ok);
    });

    s.guarded("strip-plus-inverse", [&](Suite& s, const std::string& name) {
        bool ok = true;
        std::vector<OrderedGraph> ms{pattern_m(), OrderedGraph(6, {{1, 3}}),
                                     OrderedGraph(5, {{0, 4}, {1, 2}})};
        for (const auto& h : ms)
            for (int k = 0; k <= 3; ++k) {
                OrderedGraph base = strip_isolated(h);
                OrderedGraph lifted = plus_h(base, k);
                if (!(strip_isolated(lifted) == base)) ok = false;
                int expect = base.n() + k * (base.n() - 1);
                if (lifted.n() != expect) ok = false;
            }
        s.check(name, ok);
    });

    s.guarded("concat-sizes-associative", [&](Suite& s, const std::string& name) {
        OrderedGraph a = pattern_m(), b = pattern_nested(), c = pattern_p3();
        bool ok = concat(concat(a, b), c) == concat(a, concat(b, c));
        ok = ok && concat(a, b).n() == a.n() + b.n();
        s.check(name, ok);
    });

    s.guarded("pi-contraction-minor", [&](Suite& s, const std::string& name) {
        bool ok = true;
        std::vector<OrderedGraph> gs{
            OrderedGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),    // K4
            OrderedGraph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                             {2, 3}, {2, 4}, {2, 5}})};                           // K33
        for (const auto& g : gs) {
            OrderedGraph pi = gen_pi(g);
            // hand-built hosts known to contain Pi(g): its own edge set as
            // chords, and a stretched copy
            for (const OrderedGraph& shape : {pi, plus_h(pi, 1)}) {
                PathGraph host(shape.n(), shape.edges());
                auto emb = contains_pattern(host, pi);
                if (!emb) { ok = false; continue; }
                // images of each neighbor block occupy disjoint, ordered
                // host spans; every g-edge is realized by a chord between
                // the spans of its endpoints' blocks
                std::vector<int> offset(g.n() + 1, 0);
                for (int v = 0; v < g.n(); ++v) offset[v + 1] = offset[v] + g.degree(v);
                for (int b = 0; b + 1 < g.n(); ++b) {
                    if (offset[b + 1] == offset[b] || offset[b + 2] == offset[b + 1]) continue;
                    if (emb->positions[offset[b + 1] - 1] >= emb->positions[offset[b + 1]])
                        ok = false;
                }
                for (auto [i, j] : g.edges()) {
                    const auto& nbi = g.neighbors(i);
                    const auto& nbj = g.neighbors(j);
                    int pi_i = offset[i] + static_cast<int>(std::lower_bound(nbi.begin(),
                                             nbi.end(), j) - nbi.begin());
                    int pi_j = offset[j] + static_cast<int>(std::lower_bound(nbj.begin(),
                                             nbj.end(), i) - nbj.begin());
                    int x = emb->positions[pi_i], y = emb->positions[pi_j];
                    if (!host.has_chord(x, y)) ok = false;
                    if (!(emb->positions[offset[i]] <= x &&
                          x <= emb->positions[offset[i + 1] - 1]))
                        ok = false;
                    if (!(emb->positions[offset[j]] <= y &&
                          y <= emb->positions[offset[j + 1] - 1]))
                        ok = false;
                }
            }
        }
        s.check(name, ok);
    });
    return s.out;
}

// --- extremal ---------------------------------------------------------------

SuiteResult suite_extremal(bool quick) {
    Suite s("extremal");

    s.guarded("example2-back-degree", [&](Suite& s, const std::string& name) {
        bool ok = true;
        for (int i = 1; i <= 5; ++i) {
            PathGraph g = gen_example2(i);
            std::vector<int> back(g.n(), 0);
            for (auto [a, b] : g.chords()) ++back[b];
            for (int v = 0; v < g.n(); ++v)
                if (back[v] > 1) ok = false;
        }
        s.check(name, ok);
    });

    s.guarded("example2-log-paths", [&](Suite& s, const std::string& name) {
        // frozen exact values; c = 4 covers value <= c * log2(n) at i <= 4
        bool ok = true;
        int expect[] = {1, 4, 11, 19};  // longest induced path orders, i = 1..4
        for (int i = 1; i <= 4; ++i) {
            PathGraph g = gen_example2(i);
            int got = longest_induced_path_exact(g).order();
            if (got != expect[i - 1]) ok = false;
            if (static_cast<double>(got) > 4.0 * std::log2(static_cast<double>(g.n())) &&
                i > 1)
                ok = false;
        }
        s.check(name, ok);
    });

    s.guarded("example1-order-4", [&](Suite& s, const std::string& name) {
        bool ok = true;
        for (int n = 6; n <= (quick ? 12 : 20); ++n)
            if (longest_induced_path_exact(gen_example1(n)).order() != 4) ok = false;
        s.check(name, ok);
    });

    s.guarded("example1-avoids-p3", [&](Suite& s, const std::string& name) {
        bool ok = true;
        for (int n = 6; n <= 20; ++n)
            if (contains_pattern(gen_example1(n), pattern_p3())) ok = false;
        s.check(name, ok);
    });
    return s.out;
}

// --- solvers ----------------------------------------------------------------

SuiteResult suite_solvers(bool quick) {
    Suite s("solvers");

    s.guarded("span-path-bound", [&](Suite& s, const std::string& name) {
        bool ok = true;
        for_all_hosts(quick ? 6 : 8, [&](const PathGraph& host) {
            InducedPath p = span_path(host);
            if (static_cast<long long>(p.order()) * max_span(host) < host.n()) ok = false;
        });
        SplitMix64 rng(3);
        for (int iter = 0; iter < 200; ++iter) {
            PathGraph host = random_host(12, rng.next_double(), rng.next());
            InducedPath p = span_path(host);
            if (static_cast<long long>(p.order()) * max_span(host) < host.n()) ok = false;
        }
        s.check(name, ok);
    });

    s.guarded("crossing-free-log-bound", [&](Suite& s, const std::string& name) {
        bool ok = true;
        for (int n = 2; n <= (quick ? 7 : 8); ++n) {
            for_all_hosts(n, [&](const PathGraph& host) {
                bool crossing = false;
                for (auto [a, c] : host.chords())
                    for (auto [b, d] : host.chords())
                        if (a < b && b < c && c < d) crossing = true;
                if (crossing) return;
                auto [l, r] = solve_crossing_free(host);
                if (l.order() + r.order() < ceil_log2(n)) ok = false;
                if (!l.increasing || !r.increasing) ok = false;
                if (l.vertices.front() != 0 || r.vertices.back() != n - 1) ok = false;
                if (*std::max_element(l.vertices.begin(), l.vertices.end()) >=
                    *std::min_element(r.vertices.begin(), r.vertices.end()))
                    ok = false;
            });
        }
        s.check(name, ok);
    });

    s.guarded("noncrossing-vs-guarantee", [&](Suite& s, const std::string& name) {
        bool ok = true;
        OrderedGraph nested = pattern_nested();
        for (int n = 2; n <= (quick ? 7 : 8); ++n) {
            for_all_hosts(n, [&](const PathGraph& host) {
                SolveOutcome out = solve_noncrossing(host, nested);
                if (out.is_path()) {
                    if (out.path.order() < guarantee_noncrossing(n, nested)) ok = false;
                } else if (!valid_embedding(host, nested, out.witness)) {
                    ok = false;
                }
                if (!contains_pattern(host, nested) && !out.is_path()) ok = false;
            });
        }
        s.check(name, ok);
    });

    s.guarded("gap-or-path-dichotomy", [&](Suite& s, const std::string& name) {
        bool ok = true;
        OrderedGraph m_pat = pattern_m();
        for (int n = 4; n <= (quick ? 7 : 8); ++n) {
            for_all_hosts(n, [&](const PathGraph& host) {
                for (auto [m, t] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}}) {
                    if (m > n) continue;
                    SolveOutcome out = find_gap_or_path(host, m_pat, m, t);
                    if (out.is_path()) {
                        if (out.path.order() < t) ok = false;
                    } else {
                        if (!valid_embedding(host, m_pat, out.witness)) ok = false;
                        long long need = (n + 1ll * m * t - 1) / (1ll * m * t);
                        if (out.witness.gap < need) ok = false;
                    }
                }
            });
        }
        s.check(name, ok);
    });

    s.guarded("matching-on-avoiding-hosts", [&](Suite& s, const std::string& name) {
        bool ok = true;
        SplitMix64 rng(11);
        OrderedGraph three_cross(6, {{0, 3}, {1, 4}, {2, 5}});
        for (int iter = 0; iter < (quick ? 20 : 60); ++iter) {
            int n = 8 + static_cast<int>(rng.next() % 57);
            PathGraph host = random_host(n, 0.08, rng.next());
            for (const auto& h : {pattern_m(), three_cross}) {
                if (contains_pattern(host, h)) continue;  // avoidance filter
                SolveOutcome out = solve_matching(host, h);
                if (!out.is_path()) { ok = false; continue; }
                if (out.path.order() < guarantee_matching(n, h)) ok = false;
            }
        }
        s.check(name, ok);
    });

    s.guarded("grs-outcomes-validate", [&](Suite& s, const std::string& name) {
        bool ok = true;
        SplitMix64 rng(13);
        for (int iter = 0; iter < (quick ? 5 : 15); ++iter) {
            int n = 8 + static_cast<int>(rng.next() % 7);
            PathGraph host = random_host(n, 0.25, rng.next());
            GrsOutcome out = grs_search(host, 4);
            if (out.kind == GrsOutcome::Kind::path) {
                if (out.path.order() < 4 || !out.path.increasing) ok = false;
            } else if (out.kind == GrsOutcome::Kind::witness) {
                if (!valid_embedding(host, gen_halfgraph_pattern(1), out.witness)) ok = false;
            }
        }
        s.check(name, ok);
    });
    return s.out;
}

// --- ktt ----------------------------------------------------------------------

SuiteResult suite_ktt(bool quick) {
    Suite s("ktt");

    s.guarded("clique-lemmas-hold", [&](Suite& s, const std::string& name) {
        bool ok = true;
        const int injected_s = 4;
        auto run_host = [&](const PathGraph& host) {
            ColoringContext ctx(host);
            if (static_cast<int>(ctx.longest_path().size()) >= injected_s) return;
            auto k = find_monochromatic_3clique(ctx, injected_s);
            if (!k) return;
            CliqueReport rep = verify_clique_lemmas(ctx, *k, injected_s);
            if (!rep.all_pass()) ok = false;
        };
        for_all_hosts(quick ? 5 : 6, run_host);
        SplitMix64 rng(17);
        for (int iter = 0; iter < (quick ? 50 : 200); ++iter)
            run_host(random_host(7 + static_cast<int>(rng.next() % 4), rng.next_double(),
                                 rng.next()));
        s.check(name, ok);
    });

    s.guarded("col3-guard-zero", [&](Suite& s, const std::string& name) {
        bool ok = true;
        for_all_hosts(quick ? 5 : 6, [&](const PathGraph& host) {
            if (host.n() < 3) return;
            ColoringContext ctx(host);
            for (int u = 0; u < host.n(); ++u)
                for (int v = u + 1; v < host.n(); ++v)
                    for (int w = v + 1; w < host.n(); ++w) {
                        TripleColor c = ctx.color(u, v, w);
                        int ell = static_cast<int>(ctx.path(u, v).size());
                        bool guard = c.c1 != 0 || c.delta != 0 || c.deltarev != 0 ||
                                     ell < c.d + c.drev + 2;
                        if (guard && (c.i3 != 0 || c.a3 != 0 || c.b3 != 0)) ok = false;
                    }
        });
        s.check(name, ok);
    });

    s.guarded("color-count-bound", [&](Suite& s, const std::string& name) {
        bool ok = true;
        SplitMix64 rng(23);
        for (int iter = 0; iter < (quick ? 10 : 40); ++iter) {
            PathGraph host = random_host(8, rng.next_double(), rng.next());
            ColoringContext ctx(host);
            long long smax = 0;
            for (int u = 0; u < host.n(); ++u)
                for (int v = u + 1; v < host.n(); ++v)
                    smax = std::max<long long>(smax,
                                               static_cast<long long>(ctx.path(u, v).size()));
            long long bound = 1000 * (smax + 1) * (smax + 1) * (smax + 1) * (smax + 1);
            if (ctx.distinct_colors() > bound) ok = false;
        }
        s.check(name, ok);
    });

    s.guarded("pipeline-no-contradiction", [&](Suite& s, const std::string& name) {
        bool ok = true;
        auto run_host = [&](const PathGraph& host) {
            for (int fs : {4, 5}) {
                PipelineResult r = main_pipeline(host, 1, fs);
                if (r.kind == PipelineResult::Kind::report &&
                    r.stage == "contradiction-certified")
                    ok = false;
            }
        };
        for_all_hosts(quick ? 5 : 6, run_host);
        SplitMix64 rng(29);
        for (int iter = 0; iter < (quick ? 30 : 100); ++iter)
            run_host(random_host(7 + static_cast<int>(rng.next() % 4), rng.next_double(),
                                 rng.next()));
        s.check(name, ok);
    });

    s.guarded("corrupted-clique-detected", [&](Suite& s, const std::string& name) {
        // negative control: a deliberately corrupted record must fail
        std::vector<Edge> chords;
        for (int i = 0; i < 9; ++i)
            for (int j = i + 2; j < 9; ++j) chords.emplace_back(i, j);
        ColoringContext ctx(PathGraph(9, chords));
        auto k = find_monochromatic_3clique(ctx, 7);
        bool ok = k.has_value();
        if (ok) {
            CliqueRecord bad = *k;
            ok = !bad.plus_marker.empty();
            if (ok) {
                bad.plus_marker.begin()->second = 8;
                ok = !verify_clique_lemmas(ctx, bad, 3).all_pass() &&
                     verify_clique_lemmas(ctx, *k, 3).all_pass();
            }
        }
        s.check(name, ok);
    });

    s.guarded("extract-vs-oracle", [&](Suite& s, const std::string& name) {
        // K_{t,t} fixtures: complete bipartite chords with an alternating path
        bool ok = true;
        for (int t : {2, 3}) {
            int n = 4 * t;
            std::vector<Edge> chords;
            for (int i = 0; i < n; ++i)
                for (int j = i + 2; j < n; ++j)
                    if ((i + j) % 2 == 1) chords.emplace_back(i, j);
            PathGraph host(n, chords);
            auto w = contains_ktt(host, t);
            if (!w) { ok = false; continue; }
            for (int a : w->side_a)
                for (int b : w->side_b)
                    if (!host.adjacent(a, b)) ok = false;
        }
        s.check(name, ok);
    });
    return s.out;
}

// --- oracles --------------------------------------------------------------------

SuiteResult suite_oracles(bool quick) {
    Suite s("oracles");

    s.guarded("ghn-k2-equals-n", [&](Suite& s, const std::string& name) {
        bool ok = true;
        OrderedGraph k2(2, {{0, 1}});
        for (int n = 2; n <= (quick ? 5 : 7); ++n) {
            GhnResult r = ghn_exact(k2, n);
            if (r.unavoidable || r.value != n) ok = false;
            if (!r.witness.chords().empty()) ok = false;
        }
        s.check(name, ok);
    });

    s.guarded("ghn-m-log-bound", [&](Suite& s, const std::string& name) {
        bool ok = true;
        for (int n = 4; n <= (quick ? 6 : 8); ++n) {
            GhnResult r = ghn_exact(pattern_m(), n, 2);
            if (r.value < (ceil_log2(n) + 1) / 2) ok = false;
        }
        s.check(name, ok);
    });

    s.guarded("ghn-nested-vs-gnc", [&](Suite& s, const std::string& name) {
        bool ok = true;
        for (int n = 4; n <= (quick ? 6 : 8); ++n) {
            GhnResult r = ghn_exact(pattern_nested(), n, 2);
            if (r.value < guarantee_noncrossing(n, pattern_nested())) ok = false;
        }
        s.check(name, ok);
    });

    s.guarded("ghn-thread-independence", [&](Suite& s, const std::string& name) {
        bool ok = true;
        for (int threads : {2, 4}) {
            GhnResult a = ghn_exact(pattern_m(), quick ? 6 : 7, 1);
            GhnResult b = ghn_exact(pattern_m(), quick ? 6 : 7, threads);
            if (a.value != b.value || !(a.witness == b.witness) ||
                a.count_avoiding != b.count_avoiding)
                ok = false;
        }
        s.check(name, ok);
    });

    s.guarded("longest-vs-naive", [&](Suite& s, const std::string& name) {
        bool ok = true;
        SplitMix64 rng(31);
        for (int iter = 0; iter < (quick ? 25 : 100); ++iter) {
            PathGraph host = random_host(quick ? 6 : 8, rng.next_double(), rng.next());
            InducedPath fast = longest_induced_path_exact(host);
            // naive: DFS over all simple paths checking the definition
            int best = 0;
            std::vector<int> cur;
            std::vector<char> used(host.n(), 0);
            auto rec = [&](auto&& self) -> void {
                if (induced_by_definition(host, cur))
                    best = std::max(best, static_cast<int>(cur.size()));
                for (int v = 0; v < host.n(); ++v) {
                    if (used[v] || (!cur.empty() && !host.adjacent(cur.back(), v))) continue;
                    used[v] = 1;
                    cur.push_back(v);
                    self(self);
                    cur.pop_back();
                    used[v] = 0;
                }
            };
            rec(rec);
            if (fast.order() != best) ok = false;
        }
        s.check(name, ok);
    });

    s.guarded("ktt-oracle-vs-pipeline", [&](Suite& s, const std::string& name) {
        bool ok = true;
        SplitMix64 rng(37);
        for (int iter = 0; iter < (quick ? 20 : 60); ++iter) {
            PathGraph host = random_host(7, rng.next_double(), rng.next());
            for (int t : {1, 2}) {
                if (contains_ktt(host, t)) continue;
                PipelineResult r = main_pipeline(host, t, 4);
                if (r.kind == PipelineResult::Kind::ktt) ok = false;
            }
        }
        s.check(name, ok);
    });
    return s.out;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"core", "patterns", "extremal", "solvers", "ktt", "oracles"};
}

SuiteResult run_suite(const std::string& name, bool quick) {
    if (name == "core") return suite_core(quick);
    if (name == "patterns") return suite_patterns(quick);
    if (name == "extremal") return suite_extremal(quick);
    if (name == "solvers") return suite_solvers(quick);
    if (name == "ktt") return suite_ktt(quick);
    if (name == "oracles") return suite_oracles(quick);
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteResult> run_all(bool quick) {
    std::vector<SuiteResult> out;
    for (const auto& n : suite_names()) out.push_back(run_suite(n, quick));
    return out;
}

}  // namespace ordpath::verify
