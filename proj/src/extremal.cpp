#include "ordpath/extremal.hpp"

namespace ordpath {

PathGraph gen_example1(int n) {
    if (n < 2) throw std::invalid_argument("gen_example1: n must be >= 2");
    std::vector<Edge> chords;
    for (int i = 0; i < n; i += 2)
        for (int j = i + 3; j < n; j += 2) chords.emplace_back(i, j);
    return PathGraph(n, std::move(chords));
}

namespace {

int example2_order(int i) { return i == 1 ? 1 : 2 * example2_order(i - 1) + 3; }

// Lays out G_i starting at vertex `base`: u, copy A, v, copy B, w. The
// attachment edges of the construction coincide with path edges, so only
// uv and uw become chords.
void emit_example2(int i, int base, std::vector<Edge>& chords) {
    if (i == 1) return;
    int m = example2_order(i - 1);
    int u = base, v = base + m + 1, w = base + 2 * m + 2;
    chords.emplace_back(u, v);
    chords.emplace_back(u, w);
    emit_example2(i - 1, u + 1, chords);
    emit_example2(i - 1, v + 1, chords);
}

}  // namespace

PathGraph gen_example2(int i) {
    if (i < 1) throw std::invalid_argument("gen_example2: i must be >= 1");
    std::vector<Edge> chords;
    emit_example2(i, 0, chords);
    return PathGraph(example2_order(i), std::move(chords));
}

}  // namespace ordpath
