#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kvisi/engine.hpp"
#include "kvisi/io.hpp"
#include "kvisi/model.hpp"

using namespace kvisi;

namespace {

bool has_error(const std::vector<Violation>& vs, const std::string& code) {
    for (const Violation& v : vs)
        if (v.code == code && !v.warning) return true;
    return false;
}

SemiBarRep semi_bar(std::vector<long long> lens, int k) {
    SemiBarRep rep;
    rep.k = k;
    for (long long v : lens) rep.lengths.push_back(Rational(v));
    return rep;
}

}  // namespace

TEST_CASE("validate flags coincident endpoint angles") {
    ArcRep rep;
    rep.k = 0;
    rep.arcs.push_back({1, Rational(1, 2), Rational(1, 4), false});
    rep.arcs.push_back({2, Rational(1, 2), Rational(1, 8), false});
    auto vs = validate(rep);
    CHECK(has_error(vs, "coincident endpoint angle"));
}

TEST_CASE("validate accepts a well-formed semi-bar stack") {
    CHECK(validate(Representation(semi_bar({3, 1, 2}, 0))).empty());
}

TEST_CASE("validate rejects a full circle inside an arc representation") {
    ArcRep rep;
    rep.k = 0;
    rep.arcs.push_back({1, Rational(0), Rational(2), true});
    CHECK(has_error(validate(rep), "full circle in arc representation"));

    CircleRep ok;
    ok.k = 0;
    ok.arcs.push_back({1, Rational(0), Rational(2), true});
    CHECK(validate(ok).empty());
}

TEST_CASE("validate flags duplicate ranks and warns on point arcs") {
    ArcRep rep;
    rep.k = 0;
    rep.arcs.push_back({1, Rational(0), Rational(1, 2), false});
    rep.arcs.push_back({1, Rational(1), Rational(1, 4), false});
    CHECK(has_error(validate(rep), "duplicate radius rank"));

    SemiArcRep sa;
    sa.k = 1;
    sa.arcs.push_back({AxisSide::pos, Rational(0)});
    auto vs = validate(sa);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].warning);
    CHECK(vs[0].code == "degenerate point arc");
    CHECK(valid(Representation(sa)));  // warnings do not invalidate
}

TEST_CASE("canonicalize_semi_bar dense-ranks lengths") {
    SemiBarRep rep;
    rep.k = 0;
    rep.lengths = {Rational(5, 2), Rational(1, 10), Rational(17, 10)};
    SemiBarRep canon = canonicalize_semi_bar(rep);
    CHECK(canon.lengths == std::vector<Rational>{Rational(3), Rational(1), Rational(2)});

    SemiBarRep tied = semi_bar({2, 1, 2}, 0);
    CHECK(canonicalize_semi_bar(tied).lengths == tied.lengths);
}

TEST_CASE("canonicalize_semi_bar is idempotent and graph-preserving") {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        int n = 1 + int(seed % 10);
        auto rep = std::get<SemiBarRep>(
            random_rep(Family::semi_bar, n, int(seed % 3), seed, /*allow_ties=*/true));
        // Stretch lengths into non-integers so the mapping does real work.
        for (auto& len : rep.lengths) len = len * Rational(7, 3) + Rational(1, 9);
        SemiBarRep canon = canonicalize_semi_bar(rep);
        CHECK(canonicalize_semi_bar(canon).lengths == canon.lengths);
        CHECK(semi_bar_graph(rep) == semi_bar_graph(canon));
    }
}

TEST_CASE("normalize reassigns duplicate ranks") {
    ArcRep rep;
    rep.k = 0;
    rep.arcs.push_back({7, Rational(0), Rational(1, 2), false});
    rep.arcs.push_back({7, Rational(1), Rational(1, 4), false});
    ArcRep out = normalize(rep, 1);
    CHECK(out.arcs[0].rank == 1);
    CHECK(out.arcs[1].rank == 2);
    CHECK(validate(out).empty());
}

TEST_CASE("normalize separates coincident endpoints without deleting edges") {
    ArcRep rep;
    rep.k = 0;
    rep.arcs.push_back({1, Rational(1, 2), Rational(1, 2), false});
    rep.arcs.push_back({2, Rational(1, 2), Rational(1, 4), false});  // same start
    Graph before = arc_graph(rep);
    ArcRep out = normalize(rep, 1);
    CHECK(validate(out).empty());
    Graph after = arc_graph(out);
    CHECK(before.subgraph_of(after));
}

TEST_CASE("normalize is idempotent on valid input and rejects empty reps") {
    auto rep = std::get<ArcRep>(random_rep(Family::arc, 5, 1, 42));
    ArcRep out = normalize(rep, 9);
    for (std::size_t i = 0; i < rep.arcs.size(); ++i) {
        CHECK(out.arcs[i].start == rep.arcs[i].start);
        CHECK(out.arcs[i].extent == rep.arcs[i].extent);
    }
    CHECK_THROWS_AS(normalize(ArcRep{}, 1), std::invalid_argument);
}

TEST_CASE("normalize is graph-non-destructive on degenerate inputs") {
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 200; ++seed) {
        int n = 2 + int(seed % 7);
        auto rep = std::get<ArcRep>(random_rep(Family::arc, n, int(seed % 3), seed));
        // Manufacture degeneracies: clone angles across arcs and collide ranks.
        Prng rng(seed ^ 0xabcdef);
        for (int rounds = 0; rounds < 2; ++rounds) {
            int i = int(rng.below(rep.arcs.size()));
            int j = int(rng.below(rep.arcs.size()));
            if (i != j) {
                rep.arcs[i].start = rep.arcs[j].start;
                rep.arcs[i].rank = rep.arcs[j].rank;
            }
        }
        if (validate(rep).empty()) continue;
        ++checked;
        ArcRep fixed = normalize(rep, seed);
        CHECK(validate(fixed).empty());
        CHECK(arc_graph(rep).subgraph_of(arc_graph(fixed)));
    }
}

TEST_CASE("random_rep always validates and is deterministic per seed") {
    for (Family f : {Family::bar, Family::semi_bar, Family::arc, Family::circle,
                     Family::semi_arc}) {
        for (std::uint64_t seed = 1; seed <= 60; ++seed) {
            int n = 1 + int(seed % 9);
            int k = int(seed % 3);
            Representation a = random_rep(f, n, k, seed);
            Representation b = random_rep(f, n, k, seed);
            CHECK(validate(a).empty());
            CHECK(to_json(a) == to_json(b));
        }
    }
    auto p = std::get<SemiBarRep>(random_rep(Family::semi_bar, 5, 1, 7));
    std::vector<Rational> sorted = p.lengths;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<Rational>{Rational(1), Rational(2), Rational(3),
                                          Rational(4), Rational(5)});
    CHECK_THROWS_AS(random_rep(Family::arc, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("JSON matches the documented schemas") {
    json j1 = json::parse(R"({"family":"semi_bar","k":1,"lengths":[3,1,2]})");
    Representation r1 = rep_from_json(j1);
    CHECK(to_json(r1) == j1);

    json j2 = json::parse(
        R"({"family":"arc","k":0,"arcs":[{"rank":1,"start":{"num":0,"den":1},"extent":{"num":1,"den":2}}]})");
    Representation r2 = rep_from_json(j2);
    auto& arcs = std::get<ArcRep>(r2).arcs;
    REQUIRE(arcs.size() == 1);
    CHECK(arcs[0].start == Rational(0));
    CHECK(arcs[0].extent == Rational(1, 2));
    // start serializes back as the integer 0; extent keeps num/den form.
    json round = to_json(r2);
    CHECK(round["arcs"][0]["extent"] == json({{"num", 1}, {"den", 2}}));

    json j3 = json::parse(
        R"({"family":"semi_arc","k":1,"arcs":[{"side":"pos","extent":{"num":1,"den":3}},{"side":"neg","extent":{"num":1,"den":2}}]})");
    Representation r3 = rep_from_json(j3);
    CHECK(to_json(r3) == j3);
}

TEST_CASE("JSON round-trips every family") {
    for (Family f : {Family::bar, Family::semi_bar, Family::arc, Family::circle,
                     Family::semi_arc}) {
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
            Representation rep = random_rep(f, 1 + int(seed % 8), int(seed % 3), seed);
            Representation back = rep_from_json(to_json(rep));
            CHECK(to_json(back) == to_json(rep));
            CHECK(graph_of(back) == graph_of(rep));
        }
    }
}

TEST_CASE("graph JSON keeps edges sorted and DOT lists isolated vertices") {
    Graph g(4);
    g.add_edge(2, 0);
    g.add_edge(1, 0);
    json gj = graph_to_json(g);
    CHECK(gj == json::parse(R"({"n":4,"edges":[[0,1],[0,2]]})"));
    CHECK(graph_from_json(gj) == g);
    std::string dot = to_dot(g);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("  3;") != std::string::npos);
}
