#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kvisi/bounds.hpp"
#include "kvisi/layout.hpp"
#include "kvisi/planarity.hpp"

using namespace kvisi;

namespace {

SemiBarRep semi_bar(std::vector<long long> lens, int k) {
    SemiBarRep rep;
    rep.k = k;
    for (long long v : lens) rep.lengths.push_back(Rational(v));
    return rep;
}

bool on_rectangle_boundary(const Point& p, const RectBox& r) {
    bool on_h = (p.y == r.y0 || p.y == r.y1) && r.x0 <= p.x && p.x <= r.x1;
    bool on_v = (p.x == r.x0 || p.x == r.x1) && r.y0 <= p.y && p.y <= r.y1;
    return on_h || on_v;
}

Graph class_graph(const SemiBarRep& rep, const Decomposition& dec, int color) {
    Graph g(int(rep.lengths.size()));
    for (auto& [e, c] : dec.class_of_edge)
        if (c == color) g.add_edge(e.first, e.second);
    return g;
}

}  // namespace

TEST_CASE("two bars draw as a single clean two-segment edge") {
    OneBendDrawing d = one_bend(semi_bar({2, 1}, 0));
    REQUIRE(d.edges.size() == 1);
    CHECK(d.edges[0].u == 0);
    CHECK(d.edges[0].v == 1);
    CHECK(on_rectangle_boundary(d.edges[0].bend, d.rectangles[0]));
    CHECK(crossing_bars_count(d) == std::vector<int>{0, 0});
}

TEST_CASE("one_bend rejects ties and empty stacks") {
    CHECK_THROWS_AS(one_bend(semi_bar({2, 1, 2}, 1)), std::invalid_argument);
    CHECK_THROWS_AS(one_bend(SemiBarRep{}), std::invalid_argument);
}

TEST_CASE("epsilon stays below every endpoint separation") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto rep = std::get<SemiBarRep>(
            random_rep(Family::semi_bar, 2 + int(seed % 10), 1, seed));
        OneBendDrawing d = one_bend(rep);
        std::vector<Rational> sorted = rep.lengths;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
            CHECK(d.epsilon < sorted[i + 1] - sorted[i]);
        CHECK(d.epsilon < Rational(1));  // vertical gap
        CHECK(d.epsilon < sorted.front());
    }
}

TEST_CASE("bends land on the longer bar's rectangle boundary") {
    OneBendDrawing d = one_bend(semi_bar({6, 5, 4, 3, 2, 1}, 1));
    CHECK(d.edges.size() == 9);
    for (const DrawnEdge& e : d.edges) {
        CHECK(d.rep.lengths[e.u] > d.rep.lengths[e.v]);
        CHECK(on_rectangle_boundary(e.bend, d.rectangles[e.u]));
    }
}

TEST_CASE("adjacent edges meet only at their shared vertex point") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        auto rep = std::get<SemiBarRep>(
            random_rep(Family::semi_bar, 2 + int(seed % 10), int(seed % 3) + 1, seed));
        OneBendDrawing d = one_bend(rep);
        for (std::size_t i = 0; i < d.edges.size(); ++i) {
            for (std::size_t j = i + 1; j < d.edges.size(); ++j) {
                const DrawnEdge& e = d.edges[i];
                const DrawnEdge& f = d.edges[j];
                bool adjacent = e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v;
                if (adjacent) CHECK(!edges_conflict(d, e, f));
            }
        }
    }
}

TEST_CASE("decompose stays within 2k crossing-free classes") {
    Decomposition dec = decompose(semi_bar({6, 5, 4, 3, 2, 1}, 1));
    CHECK(dec.classes_used <= 2);
    OneBendDrawing d = one_bend(semi_bar({6, 5, 4, 3, 2, 1}, 1));
    CHECK(crossing_check(d, dec).empty());

    Decomposition two = decompose(semi_bar({2, 1}, 1));
    CHECK(two.classes_used == 1);

    CHECK_THROWS_AS(decompose(semi_bar({3, 1, 2}, 0)), std::invalid_argument);
}

TEST_CASE("[3,4,2,1] at k=1: a later edge climbs through a colored fan") {
    // Edge {0,2} passes through bar 1's rectangle and meets the fan edge
    // {1,3} there, so the two must land in different classes even though
    // nothing crosses bar 0's rectangle when it is colored.
    SemiBarRep rep = semi_bar({3, 4, 2, 1}, 1);
    OneBendDrawing d = one_bend(rep);
    auto key = [](const DrawnEdge& e) {
        return std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
    };
    auto e02 = std::find_if(d.edges.begin(), d.edges.end(),
                            [&](const DrawnEdge& e) { return key(e) == std::make_pair(0, 2); });
    auto e13 = std::find_if(d.edges.begin(), d.edges.end(),
                            [&](const DrawnEdge& e) { return key(e) == std::make_pair(1, 3); });
    REQUIRE(e02 != d.edges.end());
    REQUIRE(e13 != d.edges.end());
    CHECK(edges_conflict(d, *e02, *e13));

    Decomposition dec = decompose(rep);
    CHECK(dec.class_of_edge.at({0, 2}) != dec.class_of_edge.at({1, 3}));
    CHECK(dec.classes_used <= 2);
    CHECK(crossing_check(d, dec).empty());
}

TEST_CASE("merging all classes plants a detectable crossing") {
    SemiBarRep rep = semi_bar({8, 7, 6, 5, 4, 3, 2, 1}, 1);
    OneBendDrawing d = one_bend(rep);
    Decomposition dec = decompose(rep);
    REQUIRE(dec.classes_used == 2);
    Decomposition merged = dec;
    for (auto& [e, c] : merged.class_of_edge) c = 1;
    CHECK(!crossing_check(d, merged).empty());
    CHECK(crossing_check(d, dec).empty());
}

TEST_CASE("random stacks: classes, crossings, and the inner lemma") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        int n = 2 + int(seed % 11);
        int k = 1 + int(seed % 3);
        auto rep = std::get<SemiBarRep>(random_rep(Family::semi_bar, n, k, seed));
        OneBendDrawing d = one_bend(rep);
        Decomposition dec = decompose(rep);
        CHECK(dec.classes_used <= 2 * k);
        CHECK(crossing_check(d, dec).empty());
        CHECK(dec.max_rectangle_crossing_colors <= 2 * k - 1);
        for (int c : crossing_bars_count(d)) CHECK(c <= 2 * k - 1);

        // Every class is abstractly planar, and the thickness sandwich holds.
        for (int c = 1; c <= dec.classes_used; ++c)
            CHECK(is_planar(class_graph(rep, dec, c)));
        if (n >= 3)
            CHECK(thickness_lower((long long)d.graph.edge_count(), n) <=
                  dec.classes_used);
    }
}

TEST_CASE("single bar and tiny stacks degenerate gracefully") {
    OneBendDrawing d = one_bend(semi_bar({1}, 2));
    CHECK(d.edges.empty());
    CHECK(crossing_bars_count(d) == std::vector<int>{0});
    Decomposition dec = decompose(semi_bar({1}, 1));
    CHECK(dec.classes_used == 0);
}
