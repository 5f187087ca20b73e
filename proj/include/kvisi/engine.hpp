#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kvisi/graph.hpp"
#include "kvisi/model.hpp"

// Visibility engines.
//
// Two deliberately different witness notions, mirroring the two definitions
// of the underlying models:
//   * bars/semi-bars: an edge needs ONE vertical segment, and a shared
//     endpoint abscissa is a legal witness (closed intervals);
//   * arcs/circles/semi-arcs: an edge needs a cone of positive area, i.e. a
//     positive-length angular interval on whose interior both arcs are
//     present with at most k present arcs radially between them.
// Presence is evaluated on closed arcs and bars; because elementary-interval
// interiors decide arc visibility, the closed/open distinction only shows up
// in the bar candidate abscissas.

namespace kvisi {

// ---------------------------------------------------------------------------
// Semi-bars. Edge {a,b} present iff at most k semi-bars strictly between the
// two (in stacking order) are at least as long as the shorter of the pair.
// ---------------------------------------------------------------------------

inline int semi_bar_blockers(const SemiBarRep& rep, int a, int b) {
    if (a > b) std::swap(a, b);
    Rational m = min(rep.lengths[a], rep.lengths[b]);
    int cnt = 0;
    for (int w = a + 1; w < b; ++w)
        if (rep.lengths[w] >= m) ++cnt;
    return cnt;
}

inline Graph semi_bar_graph(const SemiBarRep& rep) {
    int n = int(rep.lengths.size());
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (semi_bar_blockers(rep, a, b) <= rep.k) g.add_edge(a, b);
    return g;
}

// j-level of every edge of semi_bar_graph(rep): the exact number of
// non-shorter semi-bars between the endpoints. Always <= k.
inline std::map<std::pair<int, int>, int> j_levels(const SemiBarRep& rep) {
    std::map<std::pair<int, int>, int> out;
    Graph g = semi_bar_graph(rep);
    for (auto [a, b] : g.edges) out[{a, b}] = semi_bar_blockers(rep, a, b);
    return out;
}

// ---------------------------------------------------------------------------
// Bars. Candidate abscissas are every bar endpoint plus the midpoint of every
// elementary x-interval; the blocker predicate is piecewise constant between
// endpoints, so this candidate set is exhaustive.
// ---------------------------------------------------------------------------

inline Graph bar_graph(const BarRep& rep) {
    int n = int(rep.bars.size());
    Graph g(n);
    std::vector<Rational> xs;
    for (const Bar& b : rep.bars) {
        xs.push_back(b.x_left);
        xs.push_back(b.x_right);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Rational> candidates = xs;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        candidates.push_back((xs[i] + xs[i + 1]) / Rational(2));

    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            Rational lo = max(rep.bars[u].x_left, rep.bars[v].x_left);
            Rational hi = min(rep.bars[u].x_right, rep.bars[v].x_right);
            if (hi < lo) continue;
            bool edge = false;
            for (const Rational& x : candidates) {
                if (x < lo || hi < x) continue;
                int blockers = 0;
                for (int w = u + 1; w < v && blockers <= rep.k; ++w)
                    if (rep.bars[w].x_left <= x && x <= rep.bars[w].x_right)
                        ++blockers;
                if (blockers <= rep.k) { edge = true; break; }
            }
            if (edge) g.add_edge(u, v);
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Arcs and circles: circular sweep over elementary angular intervals.
// ---------------------------------------------------------------------------

namespace detail {

struct AngularSweep {
    // Event positions in [0, 2), sorted. Interval i is (event[i], event[i+1])
    // with the last one wrapping to event[0] + 2pi. With no events at all
    // (only full circles) there is a single all-circle interval.
    std::vector<Angle> events;
    std::vector<std::vector<bool>> present;  // [arc][interval]
    std::vector<int> by_rank;                // arc indices sorted by rank
    std::vector<int> rank_pos;               // arc index -> radial position

    int interval_count() const {
        return events.empty() ? 1 : int(events.size());
    }

    Angle interval_lo(int i) const { return events[i]; }

    Angle interval_mid(int i) const {
        if (events.empty()) return Rational(1);
        Angle lo = events[i];
        Angle hi = (i + 1 < int(events.size())) ? events[i + 1] : events[0] + Rational(2);
        return (lo + hi) / Rational(2);
    }

    // Index of the elementary interval containing the event angle `a` as its
    // left endpoint, if any.
    std::optional<int> interval_starting_at(const Angle& a) const {
        auto it = std::lower_bound(events.begin(), events.end(), a);
        if (it == events.end() || *it != a) return std::nullopt;
        return int(it - events.begin());
    }
};

inline bool arc_covers(const Arc& a, const Angle& position) {
    if (a.full_circle) return true;
    return ccw_gap(a.start, position) <= a.extent;
}

inline AngularSweep build_sweep(const std::vector<Arc>& arcs) {
    AngularSweep sw;
    for (const Arc& a : arcs) {
        if (a.full_circle) continue;
        sw.events.push_back(angle_mod(a.start));
        sw.events.push_back(angle_mod(a.start + a.extent));
    }
    std::sort(sw.events.begin(), sw.events.end());
    sw.events.erase(std::unique(sw.events.begin(), sw.events.end()), sw.events.end());

    int m = sw.interval_count();
    sw.present.assign(arcs.size(), std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i) {
        Angle mid = angle_mod(sw.interval_mid(i));
        for (std::size_t a = 0; a < arcs.size(); ++a)
            sw.present[a][i] = arc_covers(arcs[a], mid);
    }

    sw.by_rank.resize(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) sw.by_rank[i] = int(i);
    std::sort(sw.by_rank.begin(), sw.by_rank.end(), [&](int a, int b) {
        if (arcs[a].rank != arcs[b].rank) return arcs[a].rank < arcs[b].rank;
        return a < b;
    });
    sw.rank_pos.assign(arcs.size(), 0);
    for (std::size_t p = 0; p < sw.by_rank.size(); ++p) sw.rank_pos[sw.by_rank[p]] = int(p);
    return sw;
}

// Arcs radially strictly between u and v that are present on interval i.
inline int between_present(const AngularSweep& sw, int u, int v, int i) {
    int pu = sw.rank_pos[u], pv = sw.rank_pos[v];
    if (pu > pv) std::swap(pu, pv);
    int cnt = 0;
    for (int p = pu + 1; p < pv; ++p)
        if (sw.present[sw.by_rank[p]][i]) ++cnt;
    return cnt;
}

inline Graph arc_like_graph(const std::vector<Arc>& arcs, int k) {
    int n = int(arcs.size());
    Graph g(n);
    AngularSweep sw = build_sweep(arcs);
    int m = sw.interval_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int i = 0; i < m; ++i)
                if (sw.present[u][i] && sw.present[v][i] &&
                    between_present(sw, u, v, i) <= k) {
                    g.add_edge(u, v);
                    break;
                }
    return g;
}

}  // namespace detail

inline Graph arc_graph(const ArcRep& rep) {
    return detail::arc_like_graph(rep.arcs, rep.k);
}

inline Graph arc_graph(const CircleRep& rep) {
    return detail::arc_like_graph(rep.arcs, rep.k);
}

// Semi-arc representations are arc representations whose negative endpoints
// sit on the x-axis; position in the list is the radial order.
inline ArcRep induced_arc_rep(const SemiArcRep& rep) {
    ArcRep out;
    out.k = rep.k;
    for (std::size_t i = 0; i < rep.arcs.size(); ++i) {
        Arc a;
        a.rank = int(i) + 1;
        a.start = semi_arc_start(rep.arcs[i]);
        a.extent = rep.arcs[i].extent;
        out.arcs.push_back(a);
    }
    return out;
}

inline Graph semi_arc_graph(const SemiArcRep& rep) {
    return arc_graph(induced_arc_rep(rep));
}

inline Graph graph_of(const Representation& rep) {
    return std::visit([](const auto& r) -> Graph {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, BarRep>) return bar_graph(r);
        else if constexpr (std::is_same_v<T, SemiBarRep>) return semi_bar_graph(r);
        else if constexpr (std::is_same_v<T, ArcRep>) return arc_graph(r);
        else if constexpr (std::is_same_v<T, CircleRep>) return arc_graph(r);
        else return semi_arc_graph(r);
    }, rep);
}

// ---------------------------------------------------------------------------
// Edge classification for arc representations.
//
// Every point of arc i has the unique coordinate alpha in [start, start+extent]
// (values live in [0, 4pi)). A sightline at physical angle theta gets the
// smaller of its two endpoint coordinates, and each edge is charged to the
// sightline attaining the infimum coordinate over its whole visibility
// region. The boundary event attaining that infimum is either the negative
// endpoint of one of the edge's own arcs, or the positive endpoint of a
// blocker whose departure opened the visibility.
// ---------------------------------------------------------------------------

enum class EdgeKind { negative_edge, positive_edge, unclassifiable };

struct EdgeClassification {
    std::pair<int, int> edge;
    EdgeKind kind = EdgeKind::unclassifiable;
    int arc = -1;   // the X of "negative edge of X" / the blocker B
    Angle opening;  // infimum sightline coordinate, in [0, 4pi)
};

namespace detail {

// Coordinate of the point of arc `a` lying at physical angle theta; caller
// guarantees the arc covers theta.
inline Angle coordinate_on(const Arc& a, const Angle& theta) {
    return a.start + ccw_gap(a.start, theta);
}

}  // namespace detail

inline std::vector<EdgeClassification> classify_edges(const ArcRep& rep, const Graph& g) {
    for (const Arc& a : rep.arcs)
        if (a.full_circle)
            throw std::invalid_argument("classify_edges: full circles cannot be classified");

    detail::AngularSweep sw = detail::build_sweep(rep.arcs);
    int m = sw.interval_count();

    // Endpoint lookup by event angle.
    struct EndpointAt {
        int arc;
        bool positive;
    };
    std::map<Angle, std::vector<EndpointAt>> endpoint_at;
    for (std::size_t i = 0; i < rep.arcs.size(); ++i) {
        endpoint_at[angle_mod(rep.arcs[i].start)].push_back({int(i), false});
        endpoint_at[angle_mod(rep.arcs[i].start + rep.arcs[i].extent)].push_back({int(i), true});
    }

    std::vector<EdgeClassification> out;
    for (auto [u, v] : g.edges) {
        std::vector<bool> in_region(m, false);
        for (int i = 0; i < m; ++i)
            in_region[i] = sw.present[u][i] && sw.present[v][i] &&
                           detail::between_present(sw, u, v, i) <= rep.k;

        // Candidate sightline angles: the left boundary of every maximal run
        // of region intervals, plus the negative endpoints of u and v when
        // they lie in the closure of the region. The coordinate function is
        // increasing in the physical angle except for a downward jump at
        // each arc's own negative endpoint, so the infimum is attained at
        // one of these.
        std::vector<Angle> candidates;
        for (int i = 0; i < m; ++i) {
            if (!in_region[i]) continue;
            int prev = (i + m - 1) % m;
            if (!in_region[prev] || m == 1) candidates.push_back(sw.interval_lo(i));
        }
        for (int x : {u, v}) {
            Angle theta = angle_mod(rep.arcs[x].start);
            auto idx = sw.interval_starting_at(theta);
            if (!idx) continue;
            int i = *idx;
            int prev = (i + m - 1) % m;
            if (in_region[i] || in_region[prev]) candidates.push_back(theta);
        }

        EdgeClassification cls;
        cls.edge = {u, v};
        if (candidates.empty()) {
            out.push_back(cls);  // unclassifiable; cannot occur for engine edges
            continue;
        }

        bool first = true;
        Angle best_coord(0), best_theta(0);
        for (const Angle& theta : candidates) {
            Angle coord = min(detail::coordinate_on(rep.arcs[u], theta),
                              detail::coordinate_on(rep.arcs[v], theta));
            if (first || coord < best_coord ||
                (coord == best_coord && theta < best_theta)) {
                best_coord = coord;
                best_theta = theta;
                first = false;
            }
        }

        cls.opening = best_coord;
        auto it = endpoint_at.find(best_theta);
        if (it != endpoint_at.end()) {
            // Negative endpoints of the edge's own arcs take precedence.
            for (const auto& ep : it->second)
                if (!ep.positive && (ep.arc == u || ep.arc == v)) {
                    cls.kind = EdgeKind::negative_edge;
                    cls.arc = ep.arc;
                    break;
                }
            if (cls.kind == EdgeKind::unclassifiable) {
                int pu = sw.rank_pos[u], pv = sw.rank_pos[v];
                if (pu > pv) std::swap(pu, pv);
                for (const auto& ep : it->second) {
                    int pb = sw.rank_pos[ep.arc];
                    if (ep.positive && pu < pb && pb < pv) {
                        cls.kind = EdgeKind::positive_edge;
                        cls.arc = ep.arc;
                        break;
                    }
                }
            }
        }
        out.push_back(cls);
    }
    return out;
}

}  // namespace kvisi
