#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "naive.hpp"
#include "ordpath/extremal.hpp"
#include "ordpath/patterns.hpp"
#include "ordpath/rng.hpp"

using namespace ordpath;

namespace {
OrderedGraph m_pat() { return OrderedGraph(4, {{0, 2}, {1, 3}}); }
OrderedGraph nested_pat() { return OrderedGraph(4, {{0, 3}, {1, 2}}); }
OrderedGraph p3_pat() { return OrderedGraph(3, {{0, 1}, {1, 2}}); }
OrderedGraph k2_pat() { return OrderedGraph(2, {{0, 1}}); }

// K_{4,4} on its alternating Hamiltonian path: sides = even/odd positions.
PathGraph k44_host() {
    std::vector<Edge> chords;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 2; j < 8; ++j)
            if ((i + j) % 2 == 1) chords.emplace_back(i, j);
    return PathGraph(8, chords);
}

OrderedGraph one_side_k22() { return OrderedGraph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}); }
}  // namespace

TEST_CASE("contains_pattern spec examples") {
    CHECK_FALSE(contains_pattern(gen_example1(10), p3_pat()));
    auto emb = contains_pattern(k44_host(), one_side_k22());
    REQUIRE(emb);
    CHECK(emb->positions == std::vector<int>{0, 2, 5, 7});
    CHECK_FALSE(contains_pattern(PathGraph(6, {}), k2_pat()));
}

TEST_CASE("contains_pattern_with_gap spec examples") {
    PathGraph host(8, {{0, 4}});
    auto e4 = contains_pattern_with_gap(host, k2_pat(), 4);
    REQUIRE(e4);
    CHECK(e4->positions == std::vector<int>{0, 4});
    CHECK_FALSE(contains_pattern_with_gap(host, k2_pat(), 5));
    auto e9 = contains_pattern_with_gap(gen_example1(10), k2_pat(), 9);
    REQUIRE(e9);  // chord (0,9) exists: 0 even, 9 odd
    CHECK(e9->positions == std::vector<int>{0, 9});
    CHECK_THROWS_AS(contains_pattern_with_gap(host, k2_pat(), 0), std::invalid_argument);
}

TEST_CASE("containment agrees with exhaustive tuple enumeration") {
    std::vector<OrderedGraph> pats{m_pat(),   nested_pat(),          p3_pat(),
                                   k2_pat(),  one_side_k22(),        gen_Mi(1),
                                   OrderedGraph(6, {{0, 3}, {1, 4}, {2, 5}}),
                                   OrderedGraph(1, {})};
    // exhaustive hosts at n = 6; seeded samples at n = 7, 8
    auto slots6 = naive::chord_slots(6);
    for (std::uint64_t mask = 0; mask < (1ull << slots6.size()); ++mask) {
        PathGraph host = naive::host_from_mask(6, slots6, mask);
        for (const auto& h : pats) {
            auto got = contains_pattern(host, h);
            auto ref = naive::contains_pattern(host, h);
            REQUIRE(got.has_value() == ref.has_value());
            if (got) CHECK(got->positions == *ref);
        }
    }
    SplitMix64 rng(99);
    for (int iter = 0; iter < 400; ++iter) {
        int n = 7 + static_cast<int>(rng.next() % 2);
        PathGraph host = random_host(n, rng.next_double(), rng.next());
        for (const auto& h : pats) {
            auto got = contains_pattern(host, h);
            auto ref = naive::contains_pattern(host, h);
            REQUIRE(got.has_value() == ref.has_value());
            if (got) CHECK(got->positions == *ref);
        }
    }
}

TEST_CASE("embedding gap is recomputable and respected") {
    SplitMix64 rng(5);
    for (int iter = 0; iter < 200; ++iter) {
        PathGraph host = random_host(9, 0.4, rng.next());
        int g = 1 + static_cast<int>(rng.next() % 4);
        if (auto emb = contains_pattern_with_gap(host, m_pat(), g)) {
            CHECK(emb->gap >= g);
            CHECK(emb->gap == PatternEmbedding::compute_gap(emb->positions));
            CHECK_NOTHROW(validate_embedding(host, m_pat(), emb->positions));
        }
    }
}

TEST_CASE("structural predicates") {
    CHECK(has_crossing_pair(m_pat()));
    CHECK(is_matching(m_pat()));
    CHECK(is_perfect_matching(m_pat()));
    CHECK_FALSE(has_crossing_pair(nested_pat()));
    CHECK(is_noncrossing(nested_pat()));
    CHECK_FALSE(is_matching(p3_pat()));
    CHECK(is_matching(OrderedGraph(3, {})));
    CHECK_FALSE(is_perfect_matching(OrderedGraph(3, {})));

    // against the naive pairwise checks on random edge sets
    SplitMix64 rng(1);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 2 + static_cast<int>(rng.next() % 5);
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.next_double() < 0.3) edges.emplace_back(i, j);
        OrderedGraph h(n, edges);
        CHECK(has_crossing_pair(h) == naive::has_crossing_pair(h));
    }
}

TEST_CASE("depth") {
    CHECK(depth(OrderedGraph(0, {})) == 0);
    CHECK(depth(k2_pat()) == 1);
    CHECK(depth(nested_pat()) == 2);
    for (int i = 0; i <= 5; ++i) CHECK(depth(gen_Mi(i)) == i);
    CHECK_THROWS_AS(depth(p3_pat()), std::invalid_argument);
    CHECK_THROWS_AS(depth(m_pat()), std::invalid_argument);   // crossing
    CHECK_THROWS_AS(depth(OrderedGraph(3, {{0, 1}})), std::invalid_argument);

    // agrees with the Dyck-word scan on the catalog
    for (const auto& h : {nested_pat(), gen_Mi(2), gen_Mi(3), gen_planar_pattern()}) {
        if (is_perfect_matching(h) && is_noncrossing(h))
            CHECK(depth(h) == naive::depth_by_dyck_scan(h));
    }
}

TEST_CASE("one_sided and split_point") {
    CHECK_FALSE(one_sided(p3_pat()));
    CHECK(one_sided(m_pat()));
    CHECK(split_point(m_pat()) == 1);
    CHECK(split_point(k2_pat()) == 0);
    CHECK_FALSE(split_point(p3_pat()));
    // edges (0,1) and (2,3) share no crossing index
    CHECK_FALSE(split_point(OrderedGraph(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("halfgraph_index") {
    CHECK(halfgraph_index(k2_pat()) == 2);
    CHECK_FALSE(halfgraph_index(p3_pat()));
    CHECK(halfgraph_index(OrderedGraph(1, {})) == 1);
    CHECK(halfgraph_index(gen_halfgraph_pattern(3)) == 3);

    // present iff one-sided: exhaustive over edge sets on 5 vertices,
    // sampled 6-vertex patterns (full 6-vertex exhaustion is covered by
    // the one-sided direction being cheap)
    std::vector<Edge> slots;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) slots.emplace_back(i, j);
    for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
        std::vector<Edge> edges;
        for (size_t k = 0; k < slots.size(); ++k)
            if (mask >> k & 1) edges.push_back(slots[k]);
        OrderedGraph h(5, edges);
        CHECK(halfgraph_index(h).has_value() == one_sided(h));
    }
    SplitMix64 rng(77);
    for (int iter = 0; iter < 150; ++iter) {
        std::vector<Edge> edges;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                if (rng.next_double() < 0.25) edges.emplace_back(i, j);
        OrderedGraph h(6, edges);
        CHECK(halfgraph_index(h).has_value() == one_sided(h));
    }
}

TEST_CASE("classify spec examples") {
    auto m = classify(m_pat());
    CHECK(m.lower == GrowthClass::Lower::polylog);
    CHECK(m.d == 1);
    CHECK(m.upper == GrowthClass::Upper::log);

    auto nested = classify(nested_pat());
    CHECK(nested.lower == GrowthClass::Lower::polynomial);
    CHECK(nested.d == 2);
    CHECK(nested.upper == GrowthClass::Upper::linear);

    auto p3 = classify(p3_pat());
    CHECK(p3.lower == GrowthClass::Lower::bounded);
    CHECK_FALSE(p3.upper.has_value());

    // split bipartite, not a matching
    auto split = classify(one_side_k22());
    CHECK(split.lower == GrowthClass::Lower::loglog);

    // one-sided, not split, not a matching
    OrderedGraph h(4, {{0, 1}, {0, 3}, {2, 3}});
    CHECK(one_sided(h));
    CHECK_FALSE(split_point(h));
    CHECK(classify(h).lower == GrowthClass::Lower::logloglog);
}

TEST_CASE("transformations") {
    CHECK(hat(OrderedGraph(0, {})) == k2_pat());
    CHECK(hat(m_pat()).n() == 6);
    CHECK(hat(m_pat()).edges() == std::vector<Edge>{{0, 5}, {1, 3}, {2, 4}});

    OrderedGraph stretched = plus_h(k2_pat(), 1);
    CHECK(stretched.n() == 3);
    CHECK(stretched.edges() == std::vector<Edge>{{0, 2}});

    OrderedGraph via = plus_h(m_pat(), 2);
    CHECK(via.n() == 2 * (4 - 1) + 4);
    CHECK(via.edges().size() == 2);
    CHECK(strip_isolated(via) == m_pat());

    CHECK(strip_isolated(OrderedGraph(5, {{1, 3}})) == OrderedGraph(2, {{0, 1}}));
    CHECK_THROWS_AS(plus_h(p3_pat(), 1), std::invalid_argument);

    OrderedGraph c = concat(k2_pat(), nested_pat());
    CHECK(c.n() == 6);
    CHECK(c.edges() == std::vector<Edge>{{0, 1}, {2, 5}, {3, 4}});
}

TEST_CASE("generators") {
    CHECK(gen_halfgraph_pattern(3) ==
          OrderedGraph(6, {{0, 3}, {0, 5}, {2, 5}}));
    CHECK(gen_Mi(1) == OrderedGraph(6, {{0, 1}, {2, 3}, {4, 5}}));
    int sizes[] = {0, 6, 24, 78, 240, 726};
    for (int i = 0; i <= 5; ++i) {
        OrderedGraph mi = gen_Mi(i);
        CHECK(mi.n() == sizes[i]);
        if (i > 0) CHECK(mi.n() == 3 * (sizes[i - 1] + 2));
        CHECK(is_perfect_matching(mi));
        CHECK(is_noncrossing(mi));
    }

    OrderedGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    OrderedGraph pi4 = gen_pi(k4);
    CHECK(pi4.n() == 12);
    CHECK(pi4.edges().size() == 6);
    CHECK(is_perfect_matching(pi4));

    OrderedGraph planar = gen_planar_pattern();
    CHECK(planar.n() == 8);
    CHECK(planar.edges().size() == 4);
    CHECK(planar == hat(OrderedGraph(6, {{0, 3}, {1, 4}, {2, 5}})));

    for (int k = 0; k <= 3; ++k) {
        OrderedGraph g = gen_genus_pattern(k);
        CHECK(g.n() == 8 * (k + 1));
        CHECK(static_cast<int>(g.edges().size()) == 4 * (k + 1));
    }
}

TEST_CASE("pattern non-edges impose no constraint") {
    // host with exactly the pattern edges plus extra chords still matches
    PathGraph host(6, {{0, 2}, {1, 3}, {0, 4}, {2, 5}});
    OrderedGraph h(4, {{0, 2}});
    auto emb = contains_pattern(host, h);
    REQUIRE(emb);
    CHECK_NOTHROW(validate_embedding(host, h, emb->positions));
}
