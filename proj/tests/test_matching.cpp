#include <doctest.h>

#include <functional>
#include <random>

#include "sumfree/matching.hpp"

using namespace sumfree;

namespace {

// independent oracle: exhaustive search over edge subsets
int brute_matching(int n, const std::vector<std::pair<int, int>>& edges) {
    int best = 0;
    std::function<void(size_t, unsigned, int)> rec = [&](size_t i, unsigned used, int cnt) {
        best = std::max(best, cnt);
        for (size_t j = i; j < edges.size(); ++j) {
            auto [a, b] = edges[j];
            if (used >> a & 1 || used >> b & 1) continue;
            rec(j + 1, used | (1u << a) | (1u << b), cnt + 1);
        }
    };
    (void)n;
    rec(0, 0, 0);
    return best;
}

}  // namespace

TEST_CASE("blossom handles odd cycles") {
    // triangle: matching 1
    CHECK(max_matching(3, {{0, 1}, {1, 2}, {2, 0}}) == 1);
    // 5-cycle: matching 2
    CHECK(max_matching(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}) == 2);
    // two triangles joined by an edge: perfect matching 3
    CHECK(max_matching(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}}) == 3);
}

TEST_CASE("blossom agrees with the exhaustive oracle on random graphs") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 300; ++it) {
        int n = 4 + (int)(rng() % 9);  // up to 12 vertices
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 3 == 0) edges.push_back({a, b});
        std::vector<int> mate;
        int got = max_matching(n, edges, &mate);
        CHECK(got == brute_matching(n, edges));
        // mate[] is an actual matching along edges
        int count = 0;
        for (int v = 0; v < n; ++v) {
            if (mate[v] == -1) continue;
            CHECK(mate[mate[v]] == v);
            if (mate[v] > v) ++count;
        }
        CHECK(count == got);
    }
}
