#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "kvisi/planarity.hpp"
#include "kvisi/prng.hpp"

using namespace kvisi;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

// Random maximal planar graph: grow a triangulation by placing each new
// vertex inside a face.
Graph random_triangulation(int n, std::uint64_t seed) {
    Prng rng(seed);
    Graph g(n);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 1, 2}};
    for (int v = 3; v < n; ++v) {
        std::size_t fi = rng.below(faces.size());
        auto f = faces[fi];
        faces.erase(faces.begin() + long(fi));
        for (int x : f) g.add_edge(v, x);
        faces.push_back({f[0], f[1], v});
        faces.push_back({f[1], f[2], v});
        faces.push_back({f[0], f[2], v});
    }
    return g;
}

}  // namespace

TEST_CASE("small and classical graphs") {
    CHECK(is_planar(complete(4)));
    CHECK(!is_planar(complete(5)));
    CHECK(!is_planar(complete(6)));
    CHECK(!is_planar(complete_bipartite(3, 3)));
    CHECK(is_planar(complete_bipartite(2, 5)));
    CHECK(is_planar(Graph(0)));
    CHECK(is_planar(Graph(7)));  // no edges
}

TEST_CASE("K5 minus any edge is planar") {
    Graph g = complete(5);
    Graph h(5);
    for (auto [u, v] : g.edges)
        if (!(u == 1 && v == 3)) h.add_edge(u, v);
    CHECK(is_planar(h));
}

TEST_CASE("the Petersen graph is not planar") {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);        // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner star
        g.add_edge(i, 5 + i);              // spokes
    }
    CHECK(!is_planar(g));
}

TEST_CASE("grids and wheels are planar") {
    int w = 4, h = 3;
    Graph grid(w * h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            if (x + 1 < w) grid.add_edge(y * w + x, y * w + x + 1);
            if (y + 1 < h) grid.add_edge(y * w + x, (y + 1) * w + x);
        }
    CHECK(is_planar(grid));

    Graph wheel(8);
    for (int i = 1; i < 8; ++i) {
        wheel.add_edge(0, i);
        wheel.add_edge(i, i == 7 ? 1 : i + 1);
    }
    CHECK(is_planar(wheel));
}

TEST_CASE("random triangulations are planar, plus one chord they are not") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        int n = 5 + int(seed % 8);
        Graph g = random_triangulation(n, seed);
        CHECK((long long)g.edge_count() == 3LL * n - 6);
        CHECK(is_planar(g));
        // A maximal planar graph plus any missing edge is nonplanar.
        bool added = false;
        for (int u = 0; u < n && !added; ++u)
            for (int v = u + 1; v < n && !added; ++v)
                if (!g.has_edge(u, v)) {
                    g.add_edge(u, v);
                    added = true;
                }
        if (added) CHECK(!is_planar(g));
    }
}

TEST_CASE("disjoint unions and cut vertices") {
    // Two K4 blocks sharing a cut vertex, plus an isolated K5 far away.
    Graph g(13);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
    for (int u = 3; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v) g.add_edge(u, v);
    CHECK(is_planar(g));
    for (int u = 8; u < 13; ++u)
        for (int v = u + 1; v < 13; ++v) g.add_edge(u, v);
    CHECK(!is_planar(g));
}
