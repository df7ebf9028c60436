#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "naive.hpp"
#include "ordpath/core.hpp"
#include "ordpath/extremal.hpp"

using namespace ordpath;

TEST_CASE("parse pattern file") {
    auto g = parse_ordered_graph("pattern 4\nedge 0 2\nedge 1 3\n");
    CHECK(g.n() == 4);
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 3}});

    auto k2 = parse_ordered_graph("pattern 2\nedge 0 1\n");
    CHECK(k2.n() == 2);
    CHECK(k2.edges() == std::vector<Edge>{{0, 1}});

    CHECK_THROWS_WITH_AS(parse_ordered_graph("pattern 3\nedge 2 1\n"),
                         "i >= j at line 2", ParseError);
    CHECK_THROWS_AS(parse_ordered_graph("pattern 3\nedge 0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_ordered_graph("pattern 3\nedge 0 2\nedge 0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_ordered_graph("pat 3\n"), ParseError);
}

TEST_CASE("parse pattern file with comments and blank lines") {
    auto g = parse_ordered_graph("# crossing pair\n\npattern 4\n edge 0 2 # first\nedge 1 3\n");
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 3}});
}

TEST_CASE("parse pathgraph file") {
    auto g = parse_path_graph("pathgraph 6\nchord 0 3\nchord 0 5\nchord 2 5\n");
    CHECK(g.n() == 6);
    CHECK(g.chords() == std::vector<Edge>{{0, 3}, {0, 5}, {2, 5}});
    CHECK(g == gen_example1(6));

    auto bare = parse_path_graph("pathgraph 3\n");
    CHECK(bare.n() == 3);
    CHECK(bare.chords().empty());

    CHECK_THROWS_WITH_AS(parse_path_graph("pathgraph 5\nchord 1 2\n"),
                         "chord span < 2 at line 2", ParseError);
}

TEST_CASE("serialize round-trips canonical files") {
    std::string canon = "pathgraph 6\nchord 0 3\nchord 0 5\nchord 2 5\n";
    CHECK(serialize(parse_path_graph(canon)) == canon);
    std::string pat = "pattern 4\nedge 0 2\nedge 1 3\n";
    CHECK(serialize(parse_ordered_graph(pat)) == pat);
    // non-canonical order re-serializes sorted
    CHECK(serialize(parse_path_graph("pathgraph 6\nchord 2 5\nchord 0 3\n")) ==
          "pathgraph 6\nchord 0 3\nchord 2 5\n");
}

TEST_CASE("adjacency queries") {
    PathGraph g(5, {{0, 2}, {1, 4}});
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(1, 4));
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK_FALSE(g.adjacent(2, 2));
    CHECK(g.neighbors(1) == std::vector<int>{0, 2, 4});
    CHECK(g.chord_neighbors(1) == std::vector<int>{4});
}

TEST_CASE("validate_induced_path") {
    auto ex1 = gen_example1(6);
    auto p = validate_induced_path(ex1, {1, 0, 3, 4});
    CHECK(p.order() == 4);
    CHECK_FALSE(p.increasing);

    PathGraph bare(4, {});
    auto q = validate_induced_path(bare, {0, 1, 2, 3});
    CHECK(q.increasing);

    CHECK_THROWS_WITH_AS(validate_induced_path(ex1, {0, 1, 2, 3}),
                         "induced path: adjacent non-consecutive pair (0,3)",
                         std::invalid_argument);
    CHECK_THROWS_AS(validate_induced_path(bare, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(validate_induced_path(bare, {0, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(validate_induced_path(bare, {}), std::invalid_argument);
    CHECK_THROWS_AS(validate_induced_path(bare, {7}), std::invalid_argument);
}

TEST_CASE("validate_induced_path agrees with the pairwise definition") {
    // exhaustive over all hosts on 5 vertices and all sequences of length <= 4
    auto slots = naive::chord_slots(5);
    for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
        auto host = naive::host_from_mask(5, slots, mask);
        std::vector<int> seq;
        auto rec = [&](auto&& self, int depth) -> void {
            if (!seq.empty()) {
                bool expect = naive::is_induced_path(host, seq);
                bool got = true;
                try {
                    validate_induced_path(host, seq);
                } catch (const std::invalid_argument&) {
                    got = false;
                }
                CHECK(got == expect);
            }
            if (depth == 4) return;
            for (int v = 0; v < 5; ++v) {
                seq.push_back(v);
                self(self, depth + 1);
                seq.pop_back();
            }
        };
        rec(rec, 0);
    }
}

TEST_CASE("max_span") {
    CHECK(max_span(PathGraph(10, {})) == 1);
    CHECK(max_span(PathGraph(1, {})) == 0);
    CHECK(max_span(gen_example1(6)) == 5);
    CHECK(max_span(PathGraph(4, {{0, 2}})) == 2);
    // every chord span is <= max_span, and max_span >= 1 when n >= 2
    auto slots = naive::chord_slots(6);
    for (std::uint64_t mask = 0; mask < (1ull << slots.size()); mask += 37) {
        auto host = naive::host_from_mask(6, slots, mask);
        int ms = max_span(host);
        CHECK(ms >= 1);
        for (auto [i, j] : host.chords()) CHECK(j - i <= ms);
    }
}

TEST_CASE("validate_embedding") {
    auto host = gen_example1(6);
    OrderedGraph k2(2, {{0, 1}});
    auto emb = validate_embedding(host, k2, {0, 3});
    CHECK(emb.gap == 3);
    CHECK_THROWS_AS(validate_embedding(host, k2, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(validate_embedding(host, k2, {3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(validate_embedding(host, k2, {0}), std::invalid_argument);
    CHECK(PatternEmbedding::compute_gap({4}) == kNoGap);
    CHECK(PatternEmbedding::compute_gap({1, 4, 6}) == 2);
}

TEST_CASE("type invariants rejected at construction") {
    CHECK_THROWS_AS(OrderedGraph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedGraph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedGraph(3, {{0, 2}, {0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(PathGraph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(PathGraph(4, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(PathGraph(4, {{-1, 2}}), std::invalid_argument);
}
