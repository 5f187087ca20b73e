#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kvisi/engine.hpp"
#include "kvisi/model.hpp"
#include "kvisi/prng.hpp"

// Witness search over representation spaces.
//
// Semi-arc searches enumerate the complete combinatorial discretization of
// the family: a side for every arc, the order of the positive endpoints
// around the circle, and how many of them lie below angle pi. Two generic
// representations with the same combinatorial data have the same graph, so
// exhausting the grid exhausts the family up to genericity. Arc and bar
// searches enumerate endpoint interleavings the same way (arc orders are
// taken up to rotation). Every certificate is re-verified through the real
// engine before it is emitted; the fast bitmask evaluators only steer the
// search.

namespace kvisi {

struct Certificate {
    Representation rep;
    int n = 0;
    int k = 0;
    std::string property;  // "complete" or "max_edges"
    long long edges = 0;
    bool engine_verified = false;
    std::string strategy;  // "exhaustive" or "hill_climb"
    std::uint64_t seed = 0;
    std::uint64_t nodes = 0;
};

struct SearchResult {
    std::optional<Certificate> certificate;
    bool exhausted = false;  // the discretized space was fully enumerated
    std::uint64_t nodes = 0;
    long long best_edges = -1;
    std::optional<Representation> best_rep;
};

// ---------------------------------------------------------------------------
// Semi-arc configurations.
// ---------------------------------------------------------------------------

struct SemiArcConfig {
    int n = 0;
    std::uint32_t neg_mask = 0;  // bit i set: arc i starts at angle pi
    std::vector<int> perm;       // perm[j] = arc whose endpoint is j-th around
    int split = 0;               // endpoints 0..split-1 lie in (0, pi)
};

// Geometric realization on the fixed rational grid.
inline SemiArcRep realize(const SemiArcConfig& c) {
    SemiArcRep rep;
    rep.k = 0;
    rep.arcs.resize(c.n);
    for (int j = 0; j < c.n; ++j) {
        Angle theta = (j < c.split)
                          ? Angle(Rational(j + 1, c.split + 1))
                          : Angle(Rational(1) + Rational(j - c.split + 1,
                                                         c.n - c.split + 1));
        SemiArc a;
        a.side = (c.neg_mask >> c.perm[j]) & 1u ? AxisSide::neg : AxisSide::pos;
        a.extent = ccw_gap(semi_arc_start(a), theta);
        rep.arcs[c.perm[j]] = a;
    }
    return rep;
}

// Random geometric realization with the same combinatorial data; used to
// check that the grid point determines the graph.
inline SemiArcRep realize_random(const SemiArcConfig& c, Prng& rng) {
    int denom = 16 * (c.n + 2);
    std::vector<int> lo = detail::sample_distinct(rng, denom - 1, c.split);
    std::vector<int> hi = detail::sample_distinct(rng, denom - 1, c.n - c.split);
    std::sort(lo.begin(), lo.end());
    std::sort(hi.begin(), hi.end());
    SemiArcRep rep;
    rep.k = 0;
    rep.arcs.resize(c.n);
    for (int j = 0; j < c.n; ++j) {
        Angle theta = (j < c.split)
                          ? Angle(Rational(lo[j] + 1, denom))
                          : Angle(Rational(1) + Rational(hi[j - c.split] + 1, denom));
        SemiArc a;
        a.side = (c.neg_mask >> c.perm[j]) & 1u ? AxisSide::neg : AxisSide::pos;
        a.extent = ccw_gap(semi_arc_start(a), theta);
        rep.arcs[c.perm[j]] = a;
    }
    return rep;
}

namespace detail {

// Per-interval presence bitmasks for a semi-arc configuration. Events in
// circular order: 0, the split endpoints, pi, the remaining endpoints; the
// graph only depends on this interleaving.
inline void semi_arc_presence(const SemiArcConfig& c, std::vector<std::uint32_t>& col) {
    int n = c.n;
    int m = n + 2;
    col.assign(m, 0);
    for (int j = 0; j < n; ++j) {
        int arc = c.perm[j];
        int ev = (j < c.split) ? (j + 1) : (j + 2);
        bool neg = (c.neg_mask >> arc) & 1u;
        int from = neg ? (c.split + 1) : 0;
        for (int t = from; t != ev; t = (t + 1) % m) col[t] |= (1u << arc);
    }
}

inline std::uint32_t between_mask(int u, int v) {
    if (u > v) std::swap(u, v);
    return ((1u << v) - 1u) & ~((1u << (u + 1)) - 1u);
}

// Edge count of the configuration's graph at visibility k.
inline int semi_arc_config_edges(const SemiArcConfig& c, int k,
                                 std::vector<std::uint32_t>& col) {
    semi_arc_presence(c, col);
    int n = c.n, edges = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            std::uint32_t need = (1u << u) | (1u << v);
            std::uint32_t btw = between_mask(u, v);
            for (std::uint32_t mask : col) {
                if ((mask & need) != need) continue;
                if (std::popcount(mask & btw) <= k) { ++edges; break; }
            }
        }
    }
    return edges;
}

inline bool semi_arc_config_complete(const SemiArcConfig& c, int k,
                                     std::vector<std::uint32_t>& col) {
    return semi_arc_config_edges(c, k, col) == c.n * (c.n - 1) / 2;
}

template <typename Fn>
bool for_each_semi_arc_config(int n, Fn&& fn) {
    SemiArcConfig c;
    c.n = n;
    c.perm.resize(n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        c.neg_mask = mask;
        for (int i = 0; i < n; ++i) c.perm[i] = i;
        do {
            for (int split = 0; split <= n; ++split) {
                c.split = split;
                if (!fn(c)) return false;  // early stop
            }
        } while (std::next_permutation(c.perm.begin(), c.perm.end()));
    }
    return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Arc configurations: 2n equally spaced endpoint slots, arc 0's negative
// endpoint pinned to slot 0 (rotation symmetry), every other slot assigned a
// role. role 2i = negative endpoint of arc i, role 2i+1 = positive endpoint.
// ---------------------------------------------------------------------------

struct ArcConfig {
    int n = 0;
    std::vector<int> role_of_slot;  // size 2n, role_of_slot[0] == 0
};

inline ArcRep realize(const ArcConfig& c) {
    int slots = 2 * c.n;
    std::vector<int> start_slot(c.n), end_slot(c.n);
    for (int s = 0; s < slots; ++s) {
        int role = c.role_of_slot[s];
        if (role % 2 == 0) start_slot[role / 2] = s;
        else end_slot[role / 2] = s;
    }
    ArcRep rep;
    rep.k = 0;
    for (int i = 0; i < c.n; ++i) {
        Arc a;
        a.rank = i + 1;
        a.start = Rational(2LL * start_slot[i], slots);
        Angle end = Rational(2LL * end_slot[i], slots);
        a.extent = ccw_gap(a.start, end);
        rep.arcs.push_back(a);
    }
    return rep;
}

namespace detail {

inline int arc_config_edges(const ArcConfig& c, int k, std::vector<std::uint32_t>& col) {
    int n = c.n, m = 2 * n;
    std::vector<int> start_slot(n), end_slot(n);
    for (int s = 0; s < m; ++s) {
        int role = c.role_of_slot[s];
        if (role % 2 == 0) start_slot[role / 2] = s;
        else end_slot[role / 2] = s;
    }
    col.assign(m, 0);
    for (int i = 0; i < n; ++i)
        for (int t = start_slot[i]; t != end_slot[i]; t = (t + 1) % m)
            col[t] |= (1u << i);
    int edges = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            std::uint32_t need = (1u << u) | (1u << v);
            std::uint32_t btw = between_mask(u, v);
            for (std::uint32_t mask : col) {
                if ((mask & need) != need) continue;
                if (std::popcount(mask & btw) <= k) { ++edges; break; }
            }
        }
    }
    return edges;
}

template <typename Fn>
bool for_each_arc_config(int n, Fn&& fn) {
    ArcConfig c;
    c.n = n;
    int slots = 2 * n;
    std::vector<int> rest(slots - 1);
    for (int i = 1; i < slots; ++i) rest[i - 1] = i;  // roles 1..2n-1
    c.role_of_slot.assign(slots, 0);
    do {
        for (int s = 1; s < slots; ++s) c.role_of_slot[s] = rest[s - 1];
        if (!fn(c)) return false;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Bar configurations: 2n x-slots on a line assigned to stack positions, the
// stacking order fixed top-to-bottom. Covers every combinatorial type.
// ---------------------------------------------------------------------------

namespace detail {

template <typename Fn>
bool for_each_bar_config(int n, Fn&& fn) {
    int slots = 2 * n;
    std::vector<int> owner(slots);  // owner[slot] = bar index, each twice
    for (int s = 0; s < slots; ++s) owner[s] = s / 2;
    // Enumerate distinct multiset permutations.
    std::sort(owner.begin(), owner.end());
    do {
        BarRep rep;
        rep.k = 0;
        rep.bars.assign(n, Bar{});
        std::vector<int> seen(n, 0);
        for (int s = 0; s < slots; ++s) {
            int b = owner[s];
            if (seen[b]++ == 0) rep.bars[b].x_left = Rational(s);
            else rep.bars[b].x_right = Rational(s);
        }
        for (int b = 0; b < n; ++b) rep.bars[b].y = Rational(n - b);
        if (!fn(rep)) return false;
    } while (std::next_permutation(owner.begin(), owner.end()));
    return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// find_complete: engine-verified K_n certificates, or NotFound with an
// exhausted flag when the whole discretization was scanned.
// ---------------------------------------------------------------------------

inline SearchResult find_complete(Family family, int n, int k,
                                  std::uint64_t seed = 1,
                                  std::uint64_t budget = 2'000'000) {
    if (n < 1) throw std::invalid_argument("find_complete: n must be >= 1");
    SearchResult res;
    const long long want = (long long)n * (n - 1) / 2;

    auto emit = [&](const Representation& rep, const std::string& strategy) {
        Graph g = graph_of(rep);
        Certificate cert;
        cert.rep = rep;
        cert.n = n;
        cert.k = k;
        cert.property = "complete";
        cert.edges = (long long)g.edge_count();
        cert.engine_verified = g.is_complete() && g.n == n;
        cert.strategy = strategy;
        cert.seed = seed;
        cert.nodes = res.nodes;
        if (cert.engine_verified) res.certificate = cert;
        return cert.engine_verified;
    };

    if (family == Family::semi_arc) {
        if (n <= 7) {
            std::vector<std::uint32_t> col;
            detail::for_each_semi_arc_config(n, [&](const SemiArcConfig& c) {
                ++res.nodes;
                if (detail::semi_arc_config_complete(c, k, col)) {
                    SemiArcRep rep = realize(c);
                    rep.k = k;
                    if (emit(rep, "exhaustive")) return false;
                }
                return true;
            });
            res.exhausted = !res.certificate.has_value();
            return res;
        }
        // Hill climbing with restarts: flip sides, swap endpoint order,
        // shift the split point.
        Prng rng(seed);
        std::vector<std::uint32_t> col;
        while (res.nodes < budget && !res.certificate) {
            SemiArcConfig c;
            c.n = n;
            c.neg_mask = std::uint32_t(rng.next() & ((1u << n) - 1));
            c.perm.resize(n);
            for (int i = 0; i < n; ++i) c.perm[i] = i;
            for (int i = n - 1; i > 0; --i)
                std::swap(c.perm[i], c.perm[rng.below(std::uint64_t(i + 1))]);
            c.split = int(rng.below(std::uint64_t(n + 1)));
            int cur = detail::semi_arc_config_edges(c, k, col);
            ++res.nodes;
            for (int stall = 0; stall < 40 * n && res.nodes < budget; ++stall) {
                SemiArcConfig c2 = c;
                switch (rng.below(3)) {
                    case 0: c2.neg_mask ^= (1u << rng.below(std::uint64_t(n))); break;
                    case 1: {
                        int i = int(rng.below(std::uint64_t(n)));
                        int j = int(rng.below(std::uint64_t(n)));
                        std::swap(c2.perm[i], c2.perm[j]);
                        break;
                    }
                    default: c2.split = int(rng.below(std::uint64_t(n + 1)));
                }
                int e2 = detail::semi_arc_config_edges(c2, k, col);
                ++res.nodes;
                if (e2 >= cur) { c = std::move(c2); cur = e2; }
                if (cur == want) break;
            }
            if (cur == want) {
                SemiArcRep rep = realize(c);
                rep.k = k;
                emit(rep, "hill_climb");
            }
            if (res.best_edges < cur) {
                res.best_edges = cur;
                SemiArcRep rep = realize(c);
                rep.k = k;
                res.best_rep = rep;
            }
        }
        return res;
    }

    if (family == Family::arc) {
        if (n <= 5) {
            std::vector<std::uint32_t> col;
            detail::for_each_arc_config(n, [&](const ArcConfig& c) {
                ++res.nodes;
                if (detail::arc_config_edges(c, k, col) == want) {
                    ArcRep rep = realize(c);
                    rep.k = k;
                    if (emit(rep, "exhaustive")) return false;
                }
                return true;
            });
            res.exhausted = !res.certificate.has_value();
            return res;
        }
        Prng rng(seed);
        std::vector<std::uint32_t> col;
        while (res.nodes < budget && !res.certificate) {
            ArcConfig c;
            c.n = n;
            int slots = 2 * n;
            c.role_of_slot.resize(slots);
            for (int s = 0; s < slots; ++s) c.role_of_slot[s] = s;
            for (int s = slots - 1; s > 1; --s)
                std::swap(c.role_of_slot[s],
                          c.role_of_slot[1 + rng.below(std::uint64_t(s))]);
            int cur = detail::arc_config_edges(c, k, col);
            ++res.nodes;
            for (int stall = 0; stall < 60 * n && res.nodes < budget; ++stall) {
                ArcConfig c2 = c;
                int i = 1 + int(rng.below(std::uint64_t(slots - 1)));
                int j = 1 + int(rng.below(std::uint64_t(slots - 1)));
                std::swap(c2.role_of_slot[i], c2.role_of_slot[j]);
                int e2 = detail::arc_config_edges(c2, k, col);
                ++res.nodes;
                if (e2 >= cur) { c = c2; cur = e2; }
                if (cur == want) break;
            }
            if (cur == want) {
                ArcRep rep = realize(c);
                rep.k = k;
                emit(rep, "hill_climb");
            }
            if (res.best_edges < cur) res.best_edges = cur;
        }
        return res;
    }

    if (family == Family::bar) {
        if (n <= 4) {
            detail::for_each_bar_config(n, [&](BarRep rep) {
                ++res.nodes;
                rep.k = k;
                Graph g = bar_graph(rep);
                if ((long long)g.edge_count() == want) {
                    if (emit(Representation(rep), "exhaustive")) return false;
                }
                return true;
            });
            res.exhausted = !res.certificate.has_value();
            return res;
        }
        Prng rng(seed);
        while (res.nodes < budget && !res.certificate) {
            Representation rep = random_rep(Family::bar, n, k, rng.next());
            ++res.nodes;
            Graph g = graph_of(rep);
            if ((long long)g.edge_count() == want) emit(rep, "hill_climb");
            if (res.best_edges < (long long)g.edge_count())
                res.best_edges = (long long)g.edge_count();
        }
        return res;
    }

    throw std::invalid_argument("find_complete: family must be semi_arc, arc, or bar");
}

// ---------------------------------------------------------------------------
// Maximum-edge search over semi-arc configurations.
// ---------------------------------------------------------------------------

inline SearchResult max_edges_search(int n, int k, std::uint64_t budget = 2'000'000,
                                     std::uint64_t seed = 1) {
    if (n < 1) throw std::invalid_argument("max_edges_search: n must be >= 1");
    SearchResult res;
    SemiArcConfig best;
    res.best_edges = -1;

    if (n <= 7) {
        std::vector<std::uint32_t> col;
        detail::for_each_semi_arc_config(n, [&](const SemiArcConfig& c) {
            ++res.nodes;
            int e = detail::semi_arc_config_edges(c, k, col);
            if (e > res.best_edges) {
                res.best_edges = e;
                best = c;
            }
            return true;
        });
        res.exhausted = true;
    } else {
        Prng rng(seed);
        std::vector<std::uint32_t> col;
        while (res.nodes < budget) {
            SemiArcConfig c;
            c.n = n;
            c.neg_mask = std::uint32_t(rng.next() & ((1u << n) - 1));
            c.perm.resize(n);
            for (int i = 0; i < n; ++i) c.perm[i] = i;
            for (int i = n - 1; i > 0; --i)
                std::swap(c.perm[i], c.perm[rng.below(std::uint64_t(i + 1))]);
            c.split = int(rng.below(std::uint64_t(n + 1)));
            int cur = detail::semi_arc_config_edges(c, k, col);
            ++res.nodes;
            for (int stall = 0; stall < 40 * n && res.nodes < budget; ++stall) {
                SemiArcConfig c2 = c;
                switch (rng.below(3)) {
                    case 0: c2.neg_mask ^= (1u << rng.below(std::uint64_t(n))); break;
                    case 1: {
                        int i = int(rng.below(std::uint64_t(n)));
                        int j = int(rng.below(std::uint64_t(n)));
                        std::swap(c2.perm[i], c2.perm[j]);
                        break;
                    }
                    default: c2.split = int(rng.below(std::uint64_t(n + 1)));
                }
                int e2 = detail::semi_arc_config_edges(c2, k, col);
                ++res.nodes;
                if (e2 >= cur) { c = c2; cur = e2; }
            }
            if (cur > res.best_edges) {
                res.best_edges = cur;
                best = c;
            }
        }
    }

    if (res.best_edges >= 0 && best.n == n) {
        SemiArcRep rep = realize(best);
        rep.k = k;
        Graph g = semi_arc_graph(rep);
        Certificate cert;
        cert.rep = rep;
        cert.n = n;
        cert.k = k;
        cert.property = "max_edges";
        cert.edges = (long long)g.edge_count();
        cert.engine_verified = (cert.edges == res.best_edges);
        cert.strategy = res.exhausted ? "exhaustive" : "hill_climb";
        cert.seed = seed;
        cert.nodes = res.nodes;
        res.certificate = cert;
        res.best_rep = Representation(rep);
    }
    return res;
}

// ---------------------------------------------------------------------------
// Conjecture probe: does K_{3k+4} appear anywhere in the semi-arc grid?
// ---------------------------------------------------------------------------

struct RefuteReport {
    int n = 0;
    int k = 0;
    bool witness_found = false;
    bool exhausted = false;
    std::uint64_t nodes = 0;
    std::optional<Certificate> witness;
};

inline RefuteReport refute_complete(int k, std::uint64_t budget = 2'000'000,
                                    std::uint64_t seed = 1) {
    RefuteReport rep;
    rep.k = k;
    rep.n = 3 * k + 4;
    SearchResult r = find_complete(Family::semi_arc, rep.n, k, seed, budget);
    rep.nodes = r.nodes;
    rep.exhausted = r.exhausted;
    rep.witness_found = r.certificate.has_value();
    rep.witness = r.certificate;
    return rep;
}

}  // namespace kvisi
