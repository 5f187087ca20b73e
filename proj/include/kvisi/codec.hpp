#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "kvisi/engine.hpp"
#include "kvisi/model.hpp"

// Cross-family conversions, the classical five-arc complete-graph candidate,
// and the rotating-line signed-integer encoding of semi-arc representations.

namespace kvisi {

// Scale a bar representation onto the upper half circle: bar i with
// endpoints a_i, b_i and height h_i becomes the arc of radius h_i between
// angles pi*a_i/M and pi*b_i/M, M = max endpoint. Radial order follows bar
// height. Graph-preserving whenever all endpoint abscissas are pairwise
// distinct (which random_rep guarantees); a shared abscissa is a legal
// single-segment witness for bars but has no positive-width cone.
inline ArcRep bar_to_arc(const BarRep& rep) {
    if (rep.bars.empty()) throw std::invalid_argument("bar_to_arc: empty representation");
    Rational M(0);
    for (const Bar& b : rep.bars) {
        if (b.x_left < Rational(0) || !(b.x_left < b.x_right))
            throw std::invalid_argument("bar_to_arc: bars need 0 <= x_left < x_right");
        if (!(Rational(0) < b.y))
            throw std::invalid_argument("bar_to_arc: bar heights must be positive");
        M = max(M, max(b.x_left, b.x_right));
    }
    if (M == Rational(0)) throw std::invalid_argument("bar_to_arc: all bars degenerate");

    ArcRep out;
    out.k = rep.k;
    // BarRep lists bars by decreasing y, so list order is already radial order.
    for (std::size_t i = 0; i < rep.bars.size(); ++i) {
        const Bar& b = rep.bars[i];
        Arc a;
        a.rank = int(i) + 1;
        a.start = b.x_left / M;                 // angle pi * a_i / M
        a.extent = (b.x_right - b.x_left) / M;  // up to pi * b_i / M
        out.arcs.push_back(a);
    }
    return out;
}

// Semi-bars are the a_i = 0 special case: every arc starts on the positive
// x-axis with extent pi * len_i / M.
inline SemiArcRep semi_bar_to_semi_arc(const SemiBarRep& rep) {
    SemiArcRep out;
    out.k = rep.k;
    if (rep.lengths.empty()) return out;
    Rational M(0);
    for (const Rational& len : rep.lengths) M = max(M, len);
    for (const Rational& len : rep.lengths) {
        SemiArc a;
        a.side = AxisSide::pos;
        a.extent = len / M;
        out.arcs.push_back(a);
    }
    return out;
}

// The five concentric arcs historically offered as a complete-graph witness,
// verbatim, with radius values 1..5 mapped to ranks 5..1 (rank 1 = greatest
// radius). Listed endpoint pairs (alpha1, alpha2):
//   r=1: (0, pi/2)   r=2: (pi/6, 2pi/3)   r=3: (pi/4, 5pi/4)
//   r=4: (pi/3, 7pi/4)   r=5: (0, pi/2)
// The plain reading takes each pair as the arc [alpha1, alpha2]; the wrapped
// reading lets pairs spanning more than pi run the other way around through
// angle zero. Run both through the engine and compare; completeness is not
// assumed.
enum class K5Reading { plain, wrapped };

inline ArcRep k5_candidate(K5Reading reading) {
    struct Raw {
        long long radius;
        Rational a1, a2;
    };
    const Raw raw[5] = {
        {1, Rational(0), Rational(1, 2)},
        {2, Rational(1, 6), Rational(2, 3)},
        {3, Rational(1, 4), Rational(5, 4)},
        {4, Rational(1, 3), Rational(7, 4)},
        {5, Rational(0), Rational(1, 2)},
    };
    ArcRep out;
    out.k = 0;
    for (const Raw& r : raw) {
        Arc a;
        a.rank = int(6 - r.radius);  // radius 5 is outermost
        Rational span = r.a2 - r.a1;
        if (reading == K5Reading::wrapped && span > Rational(1)) {
            a.start = r.a2;
            a.extent = Rational(2) - span;
        } else {
            a.start = r.a1;
            a.extent = span;
        }
        out.arcs.push_back(a);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rotating-line encoding. Sweep a full line through the origin, blue half at
// angle t and red half at t + pi, for t in [0, pi). Each time a half meets a
// positive endpoint, the arc receives the next signed magnitude: positive
// for blue hits, negative for red hits. Output in radius order.
//
// Decoding additionally needs the sides vector: the signed sequence records
// which half-line met each positive endpoint, which conflates the start side
// with extents of pi or more, so the dependency is explicit.
// ---------------------------------------------------------------------------

struct SignedCode {
    std::vector<int> codes;  // one nonzero integer per semi-arc, radius order
    friend bool operator==(const SignedCode& a, const SignedCode& b) {
        return a.codes == b.codes;
    }
};

inline SignedCode encode(const SemiArcRep& rep) {
    int n = int(rep.arcs.size());
    struct Hit {
        Angle t;
        bool blue;
        int arc;
    };
    std::vector<Hit> hits;
    for (int i = 0; i < n; ++i) {
        Angle theta = semi_arc_positive_endpoint(rep.arcs[i]);
        bool blue = theta < Rational(1);
        hits.push_back({blue ? theta : theta - Rational(1), blue, i});
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
        if (a.t != b.t) return a.t < b.t;
        return a.blue && !b.blue;  // blue half reported first on a tie
    });
    for (std::size_t i = 0; i + 1 < hits.size(); ++i)
        if (hits[i].t == hits[i + 1].t && hits[i].blue == hits[i + 1].blue)
            throw std::invalid_argument("encode: coincident positive endpoints");

    SignedCode code;
    code.codes.assign(n, 0);
    int magnitude = 0;
    for (const Hit& h : hits) {
        ++magnitude;
        code.codes[h.arc] = h.blue ? magnitude : -magnitude;
    }
    return code;
}

inline SemiArcRep decode(const SignedCode& code, const std::vector<AxisSide>& sides) {
    int n = int(code.codes.size());
    if (int(sides.size()) != n)
        throw std::invalid_argument("decode: sides vector size mismatch");
    std::vector<char> seen(n + 1, 0);
    for (int c : code.codes) {
        int m = c < 0 ? -c : c;
        if (m < 1 || m > n || seen[m])
            throw std::invalid_argument("decode: magnitudes must be a permutation of 1..n");
        seen[m] = 1;
    }
    SemiArcRep rep;
    rep.k = 0;
    for (int i = 0; i < n; ++i) {
        int c = code.codes[i];
        int m = c < 0 ? -c : c;
        // Hit times on a fixed rational grid in (0, pi).
        Angle t = Rational(m, n + 1);
        Angle theta = (c > 0) ? t : t + Rational(1);
        SemiArc a;
        a.side = sides[i];
        a.extent = ccw_gap(semi_arc_start(a), theta);
        rep.arcs.push_back(a);
    }
    return rep;
}

}  // namespace kvisi
