#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kvisi/engine.hpp"
#include "kvisi/graph.hpp"
#include "kvisi/layout.hpp"
#include "kvisi/model.hpp"
#include "kvisi/rational.hpp"

// Closed-form edge/chromatic/thickness bound evaluators and per-instance
// audits. max_edges returns a rational because the semi-arc expression
// (k+1)(2n - (k+2)/2) can be half-integral; audits compare against its floor.

namespace kvisi {

inline Rational binom2(long long n) { return Rational(n * (n - 1), 2); }

// Piecewise maximum-edge bound per family; the small-n side of each
// threshold is n choose 2.
inline Rational max_edges(Family family, long long n, long long k) {
    if (n < 1 || k < 0) throw std::invalid_argument("max_edges: need n >= 1, k >= 0");
    switch (family) {
        case Family::bar:
            if (n >= 4 * k + 4) return Rational((k + 1) * (3 * n - 4 * k - 6));
            return binom2(n);
        case Family::semi_bar:
            if (n >= 2 * k + 2) return Rational((k + 1) * (2 * n - 2 * k - 3));
            return binom2(n);
        case Family::arc:
        case Family::circle:
            if (n > 4 * k + 4) return Rational((k + 1) * (3 * n - k - 2));
            return binom2(n);
        case Family::semi_arc:
            if (n > 3 * k + 3)
                return Rational(k + 1) * (Rational(2 * n) - Rational(k + 2, 2));
            return binom2(n);
    }
    throw std::invalid_argument("max_edges: unknown family");
}

// Witnessed lower bound on the semi-arc maximum: (k+1)(2n - (3k+6)/2),
// valid for n >= 3k+3.
inline Rational semi_arc_lower(long long n, long long k) {
    if (n < 3 * k + 3)
        throw std::invalid_argument("semi_arc_lower: requires n >= 3k+3");
    return Rational(k + 1) * (Rational(2 * n) - Rational(3 * k + 6, 2));
}

// Chromatic upper bound implied by the degeneracy of each family, where one
// is known: arcs/circles 6k+6, semi-arcs 4k+4.
inline std::optional<long long> chromatic_upper(Family family, long long k) {
    switch (family) {
        case Family::arc:
        case Family::circle: return 6 * k + 6;
        case Family::semi_arc: return 4 * k + 4;
        default: return std::nullopt;
    }
}

struct Coloring {
    std::vector<int> color;  // 0-based color per vertex
    int colors_used = 0;
    int degeneracy = 0;
};

// Smallest-last ordering followed by greedy coloring; uses at most
// degeneracy+1 colors and is always proper.
inline Coloring degeneracy_coloring(const Graph& g) {
    int n = g.n;
    Coloring out;
    out.color.assign(n, -1);
    if (n == 0) return out;

    auto adj = g.adjacency();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = int(adj[v].size());
    std::vector<bool> removed(n, false);
    std::vector<int> order;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
        out.degeneracy = std::max(out.degeneracy, deg[best]);
        removed[best] = true;
        order.push_back(best);
        for (int w : adj[best])
            if (!removed[w]) --deg[w];
    }

    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        std::vector<bool> used(n + 1, false);
        for (int w : adj[v])
            if (out.color[w] >= 0) used[out.color[w]] = true;
        int c = 0;
        while (used[c]) ++c;
        out.color[v] = c;
        out.colors_used = std::max(out.colors_used, c + 1);
    }
    return out;
}

// ceil(m / (3n-6)): planar subgraph capacity argument.
inline long long thickness_lower(long long m, long long n) {
    if (n < 3) throw std::invalid_argument("thickness_lower: requires n >= 3");
    if (m <= 0) return 0;
    return Rational(m, 3 * n - 6).ceil();
}

// Smallest n at which the extremal edge-count arithmetic certifies the
// family's thickness target: k+1 for bars via (k+1)(3n-4k-6), and
// ceil(2(k+1)/3) for semi-bars via (k+1)(2n-2k-3).
inline long long thickness_witness_n(long long k, Family family) {
    if (k < 0) throw std::invalid_argument("thickness_witness_n: k must be >= 0");
    long long target;
    if (family == Family::bar) {
        target = k + 1;
    } else if (family == Family::semi_bar) {
        target = Rational(2 * (k + 1), 3).ceil();
    } else {
        throw std::invalid_argument("thickness_witness_n: bar or semi_bar only");
    }
    for (long long n = 3; n <= 4000; ++n) {
        long long m = (family == Family::bar) ? (k + 1) * (3 * n - 4 * k - 6)
                                              : (k + 1) * (2 * n - 2 * k - 3);
        if (m <= 0) continue;
        if (thickness_lower(m, n) >= target) return n;
    }
    throw std::runtime_error("thickness_witness_n: no witness up to n = 4000");
}

// ---------------------------------------------------------------------------
// Per-instance audit: apply every applicable bound to one representation and
// its engine graph. A violation here falsifies a theorem or reveals a bug.
// ---------------------------------------------------------------------------

struct BoundReport {
    Family family = Family::bar;
    long long n = 0;
    long long k = 0;
    long long edges = 0;
    Rational edge_upper;
    long long edge_lower_witnessed = 0;  // the instance itself
    int chromatic_used = 0;
    std::optional<long long> chromatic_bound;
    long long thickness_lower_bound = 0;
    std::optional<long long> thickness_upper_bound;  // semi-bar decomposition
    std::vector<std::string> violations;
};

inline BoundReport audit(const Representation& rep, const Graph& g) {
    BoundReport r;
    r.family = family_of(rep);
    r.n = rep_size(rep);
    r.k = rep_k(rep);
    r.edges = (long long)g.edge_count();
    r.edge_lower_witnessed = r.edges;

    if (r.n >= 1) {
        r.edge_upper = max_edges(r.family, r.n, r.k);
        if (Rational(r.edges) > r.edge_upper)
            r.violations.push_back("edge count " + std::to_string(r.edges) +
                                   " exceeds bound " + r.edge_upper.str());
    }

    Coloring col = degeneracy_coloring(g);
    r.chromatic_used = col.colors_used;
    r.chromatic_bound = chromatic_upper(r.family, r.k);
    if (r.chromatic_bound && col.colors_used > *r.chromatic_bound)
        r.violations.push_back("coloring used " + std::to_string(col.colors_used) +
                               " colors, bound is " + std::to_string(*r.chromatic_bound));
    for (auto [u, v] : g.edges)
        if (col.color[u] == col.color[v])
            r.violations.push_back("improper coloring at edge " + std::to_string(u) +
                                   "-" + std::to_string(v));

    if (r.n >= 3) r.thickness_lower_bound = thickness_lower(r.edges, r.n);

    // Semi-bar decomposition realizes thickness <= 2k; only defined for
    // k >= 1 and distinct lengths.
    if (auto* sb = std::get_if<SemiBarRep>(&rep); sb && sb->k >= 1) {
        std::vector<Rational> sorted = sb->lengths;
        std::sort(sorted.begin(), sorted.end());
        bool distinct =
            std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        if (distinct) {
            try {
                Decomposition dec = decompose(*sb);
                r.thickness_upper_bound = dec.classes_used;
                if (dec.classes_used > 2 * sb->k)
                    r.violations.push_back("decomposition used " +
                                           std::to_string(dec.classes_used) +
                                           " classes, bound is " +
                                           std::to_string(2 * sb->k));
                OneBendDrawing drawing = one_bend(*sb);
                if (!crossing_check(drawing, dec).empty())
                    r.violations.push_back("decomposition has a same-class crossing");
            } catch (const std::logic_error& e) {
                r.violations.push_back(std::string("decomposition failed: ") + e.what());
            }
        }
    }
    return r;
}

}  // namespace kvisi
