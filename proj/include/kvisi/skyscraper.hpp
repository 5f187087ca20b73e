#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kvisi/engine.hpp"
#include "kvisi/model.hpp"

// Stacking-order visibility statistics in the style of skyscraper puzzles:
// per-level counts of semi-bars that clear all but at most j bars above
// (A_j) or below (U_j) them, bridge counts between equal-height pairs, and
// the closed-form edge counts these statistics yield.

namespace kvisi {

struct SkyscraperStats {
    int k = 0;
    std::vector<long long> A;   // A_0..A_k
    std::vector<long long> U;   // U_0..U_k
    std::vector<long long> Br;  // Br_0..Br_k
    // Per-bar flags: a_flags[j][s] == 1 iff bar s clears all but at most j
    // bars above it; u_flags likewise below.
    std::vector<std::vector<char>> a_flags;
    std::vector<std::vector<char>> u_flags;
};

// Ties defeat clearance: a bar above of equal length counts against s.
inline SkyscraperStats stats(const SemiBarRep& rep, int k) {
    if (k < 0) throw std::invalid_argument("stats: k must be >= 0");
    int n = int(rep.lengths.size());
    SkyscraperStats st;
    st.k = k;
    st.A.assign(k + 1, 0);
    st.U.assign(k + 1, 0);
    st.Br.assign(k + 1, 0);
    st.a_flags.assign(k + 1, std::vector<char>(n, 0));
    st.u_flags.assign(k + 1, std::vector<char>(n, 0));

    for (int s = 0; s < n; ++s) {
        int above = 0, below = 0;
        for (int t = 0; t < s; ++t)
            if (rep.lengths[t] >= rep.lengths[s]) ++above;
        for (int t = s + 1; t < n; ++t)
            if (rep.lengths[t] >= rep.lengths[s]) ++below;
        for (int j = 0; j <= k; ++j) {
            if (above <= j) { st.a_flags[j][s] = 1; ++st.A[j]; }
            if (below <= j) { st.u_flags[j][s] = 1; ++st.U[j]; }
        }
    }

    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (rep.lengths[a] != rep.lengths[b]) continue;
            int blockers = 0;
            for (int w = a + 1; w < b; ++w)
                if (rep.lengths[w] >= rep.lengths[a]) ++blockers;
            if (blockers <= k) ++st.Br[blockers];
        }
    }
    return st;
}

// Edge count of the k-visibility graph from the statistics alone:
// 2(k+1)n - sum_{j=0..k} (A_j + U_j + Br_j).
inline long long edge_count_formula(const SemiBarRep& rep, int k) {
    SkyscraperStats st = stats(rep, k);
    long long n = (long long)rep.lengths.size();
    long long total = 2 * (long long)(k + 1) * n;
    for (int j = 0; j <= k; ++j) total -= st.A[j] + st.U[j] + st.Br[j];
    return total;
}

// The 0-visibility, tie-free specialization: 2n - A - U.
inline long long edge_count_simple(const SemiBarRep& rep) {
    std::vector<Rational> sorted = rep.lengths;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("edge_count_simple: lengths must be distinct");
    SkyscraperStats st = stats(rep, 0);
    return 2 * (long long)rep.lengths.size() - st.A[0] - st.U[0];
}

// Left-to-right and right-to-left maxima of a permutation of 1..n; the first
// term is the topmost bar of the corresponding stack, so the counts equal
// A_0 and U_0.
inline std::pair<int, int> perm_maxima(const std::vector<int>& perm) {
    int n = int(perm.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : perm) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("perm_maxima: not a permutation of 1..n");
        seen[v] = 1;
    }
    int lr = 0, rl = 0;
    int best = 0;
    for (int i = 0; i < n; ++i)
        if (perm[i] > best) { best = perm[i]; ++lr; }
    best = 0;
    for (int i = n - 1; i >= 0; --i)
        if (perm[i] > best) { best = perm[i]; ++rl; }
    return {lr, rl};
}

// For n >= 2k+2 the statistics sum is at least (k+1)(2k+3).
inline bool corollary_sum_check(const SemiBarRep& rep, int k) {
    long long n = (long long)rep.lengths.size();
    if (n < 2 * (long long)k + 2)
        throw std::invalid_argument("corollary_sum_check: requires n >= 2k+2");
    SkyscraperStats st = stats(rep, k);
    long long sum = 0;
    for (int j = 0; j <= k; ++j) sum += st.A[j] + st.U[j] + st.Br[j];
    return sum >= (long long)(k + 1) * (2 * (long long)k + 3);
}

}  // namespace kvisi
