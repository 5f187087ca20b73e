#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "kvisi/engine.hpp"
#include "kvisi/model.hpp"
#include "kvisi/skyscraper.hpp"

using namespace kvisi;

namespace {

SemiBarRep semi_bar(std::vector<long long> lens, int k) {
    SemiBarRep rep;
    rep.k = k;
    for (long long v : lens) rep.lengths.push_back(Rational(v));
    return rep;
}

template <typename Fn>
void each_permutation(int n, Fn&& fn) {
    std::vector<long long> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
        fn(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

template <typename Fn>
void each_length_sequence(int n, Fn&& fn) {
    std::vector<long long> seq(n, 1);
    for (;;) {
        fn(seq);
        int i = n - 1;
        while (i >= 0 && seq[i] == n) seq[i--] = 1;
        if (i < 0) break;
        ++seq[i];
    }
}

}  // namespace

TEST_CASE("stats on [3,1,2] at k=0") {
    SkyscraperStats st = stats(semi_bar({3, 1, 2}, 0), 0);
    CHECK(st.A[0] == 1);
    CHECK(st.U[0] == 2);
    CHECK(st.Br[0] == 0);
}

TEST_CASE("stats on the tied stack [2,1,2]") {
    SkyscraperStats st = stats(semi_bar({2, 1, 2}, 0), 0);
    CHECK(st.A[0] == 1);
    CHECK(st.U[0] == 1);
    CHECK(st.Br[0] == 1);  // the equal-height pair bridges over the short bar
}

TEST_CASE("a single bar clears everything at every level") {
    SkyscraperStats st = stats(semi_bar({1}, 0), 3);
    for (int j = 0; j <= 3; ++j) {
        CHECK(st.A[j] == 1);
        CHECK(st.U[j] == 1);
        CHECK(st.Br[j] == 0);
    }
}

TEST_CASE("A_j and U_j are nondecreasing in j") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto rep = std::get<SemiBarRep>(
            random_rep(Family::semi_bar, 1 + int(seed % 10), 0, seed, true));
        SkyscraperStats st = stats(rep, 4);
        for (int j = 0; j + 1 <= 4; ++j) {
            CHECK(st.A[j] <= st.A[j + 1]);
            CHECK(st.U[j] <= st.U[j + 1]);
        }
        CHECK(st.A[4] <= (long long)rep.lengths.size());
        CHECK(st.U[4] <= (long long)rep.lengths.size());
    }
}

TEST_CASE("every bar sits in at most two j-bridges per level") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto rep = std::get<SemiBarRep>(
            random_rep(Family::semi_bar, 2 + int(seed % 9), 0, seed, true));
        int n = int(rep.lengths.size());
        for (int j = 0; j <= 2; ++j) {
            std::vector<int> in_bridges(n, 0);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    if (rep.lengths[a] != rep.lengths[b]) continue;
                    int blockers = 0;
                    for (int w = a + 1; w < b; ++w)
                        if (rep.lengths[w] >= rep.lengths[a]) ++blockers;
                    if (blockers == j) { ++in_bridges[a]; ++in_bridges[b]; }
                }
            for (int v = 0; v < n; ++v) CHECK(in_bridges[v] <= 2);
        }
    }
}

TEST_CASE("edge count formula on the worked examples") {
    CHECK(edge_count_formula(semi_bar({3, 1, 2}, 0), 0) == 3);
    CHECK(edge_count_formula(semi_bar({2, 1, 2}, 0), 0) == 3);
    CHECK(edge_count_formula(semi_bar({9}, 0), 5) == 0);
}

TEST_CASE("formula equals the engine exhaustively for small stacks") {
    for (int n = 1; n <= 5; ++n) {
        each_length_sequence(n, [&](const std::vector<long long>& seq) {
            for (int k = 0; k <= 2; ++k) {
                SemiBarRep rep = semi_bar(std::vector<long long>(seq.begin(), seq.end()), k);
                CHECK(edge_count_formula(rep, k) ==
                      (long long)semi_bar_graph(rep).edge_count());
            }
        });
    }
}

TEST_CASE("formula equals the engine on random stacks with ties") {
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        int n = 1 + int(seed % 14);
        int k = int(seed % 5);
        auto rep = std::get<SemiBarRep>(random_rep(Family::semi_bar, n, k, seed, true));
        CHECK(edge_count_formula(rep, k) == (long long)semi_bar_graph(rep).edge_count());
    }
}

TEST_CASE("tie-free 0-visibility specialization") {
    CHECK(edge_count_simple(semi_bar({3, 1, 2}, 0)) == 3);
    // Monotone stacks are paths.
    for (int n = 2; n <= 9; ++n) {
        std::vector<long long> dec(n), inc(n);
        for (int i = 0; i < n; ++i) {
            dec[i] = n - i;
            inc[i] = i + 1;
        }
        CHECK(edge_count_simple(semi_bar(dec, 0)) == n - 1);
        CHECK(edge_count_simple(semi_bar(inc, 0)) == n - 1);
        CHECK((long long)semi_bar_graph(semi_bar(dec, 0)).edge_count() == n - 1);
    }
    CHECK_THROWS_AS(edge_count_simple(semi_bar({2, 1, 2}, 0)), std::invalid_argument);
}

TEST_CASE("permutation maxima match the level-0 statistics") {
    CHECK(perm_maxima({3, 1, 2}) == std::pair<int, int>{1, 2});
    CHECK(perm_maxima({1, 2, 3, 4, 5}) == std::pair<int, int>{5, 1});
    CHECK_THROWS_AS(perm_maxima({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(perm_maxima({0, 1, 2}), std::invalid_argument);

    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        int n = 1 + int(seed % 10);
        auto rep = std::get<SemiBarRep>(random_rep(Family::semi_bar, n, 0, seed));
        std::vector<int> perm;
        for (const Rational& len : rep.lengths) perm.push_back(int(len.num()));
        auto [lr, rl] = perm_maxima(perm);
        SkyscraperStats st = stats(rep, 0);
        CHECK(lr == st.A[0]);
        CHECK(rl == st.U[0]);
    }
}

TEST_CASE("statistics sum lower bound holds when n >= 2k+2") {
    CHECK(corollary_sum_check(semi_bar({1, 2}, 0), 0));
    CHECK(corollary_sum_check(semi_bar({4, 3, 2, 1}, 1), 1));
    CHECK_THROWS_AS(corollary_sum_check(semi_bar({1, 2}, 1), 1), std::invalid_argument);

    for (int n = 2; n <= 7; ++n) {
        each_length_sequence(n, [&](const std::vector<long long>& seq) {
            for (int k = 0; k <= 2; ++k) {
                if (n < 2 * k + 2) continue;
                SemiBarRep rep = semi_bar(std::vector<long long>(seq.begin(), seq.end()), k);
                CHECK(corollary_sum_check(rep, k));
            }
        });
    }
    each_permutation(8, [&](const std::vector<long long>& p) {
        for (int k = 0; k <= 2; ++k)
            CHECK(corollary_sum_check(semi_bar(std::vector<long long>(p.begin(), p.end()), k), k));
    });
}

TEST_CASE("maximum edge count over permutations matches the closed form") {
    for (int k = 0; k <= 2; ++k) {
        for (int n = 2 * k + 2; n <= 7; ++n) {
            long long best = -1;
            each_permutation(n, [&](const std::vector<long long>& p) {
                SemiBarRep rep = semi_bar(std::vector<long long>(p.begin(), p.end()), k);
                best = std::max(best, (long long)semi_bar_graph(rep).edge_count());
            });
            CHECK(best == (long long)(k + 1) * (2 * n - 2 * k - 3));
        }
    }
}
