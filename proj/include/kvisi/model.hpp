#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "kvisi/angle.hpp"
#include "kvisi/prng.hpp"
#include "kvisi/rational.hpp"

namespace kvisi {

// ---------------------------------------------------------------------------
// Representation families.
//
// All five families are plain immutable value types. Operations never mutate
// their inputs, so representations can be shared freely across workers.
// ---------------------------------------------------------------------------

struct Bar {
    Rational y;        // vertical position; doubles as the height for conversions
    Rational x_left;   // >= 0
    Rational x_right;  // > x_left
};

struct BarRep {
    std::vector<Bar> bars;  // ordered by strictly decreasing y
    int k = 0;
};

struct SemiBarRep {
    std::vector<Rational> lengths;  // top to bottom; ties permitted
    int k = 0;
};

// Concentric arc. Radii are kept only as ranks because the graphs depend on
// radial order alone; rank 1 is the outermost (greatest radius) arc.
struct Arc {
    int rank = 1;
    Angle start;               // negative endpoint, in [0, 2pi)
    Angle extent;              // positive endpoint at start + extent
    bool full_circle = false;  // extent == 2pi, only valid inside CircleRep
};

struct ArcRep {
    std::vector<Arc> arcs;
    int k = 0;
};

struct CircleRep {
    std::vector<Arc> arcs;  // may contain full circles
    int k = 0;
};

enum class AxisSide { pos, neg };  // negative endpoint at angle 0 or pi

struct SemiArc {
    AxisSide side = AxisSide::pos;
    Angle extent;  // in [0, 2pi)
};

struct SemiArcRep {
    std::vector<SemiArc> arcs;  // list position = radius order (0 = outermost)
    int k = 0;
};

using Representation = std::variant<BarRep, SemiBarRep, ArcRep, CircleRep, SemiArcRep>;

enum class Family { bar, semi_bar, arc, circle, semi_arc };

inline Family family_of(const Representation& rep) {
    switch (rep.index()) {
        case 0: return Family::bar;
        case 1: return Family::semi_bar;
        case 2: return Family::arc;
        case 3: return Family::circle;
        default: return Family::semi_arc;
    }
}

inline std::string family_name(Family f) {
    switch (f) {
        case Family::bar: return "bar";
        case Family::semi_bar: return "semi_bar";
        case Family::arc: return "arc";
        case Family::circle: return "circle";
        case Family::semi_arc: return "semi_arc";
    }
    return "?";
}

inline std::optional<Family> family_from_name(const std::string& s) {
    if (s == "bar") return Family::bar;
    if (s == "semi_bar") return Family::semi_bar;
    if (s == "arc") return Family::arc;
    if (s == "circle") return Family::circle;
    if (s == "semi_arc") return Family::semi_arc;
    return std::nullopt;
}

inline int rep_size(const Representation& rep) {
    return std::visit([](const auto& r) {
        if constexpr (std::is_same_v<std::decay_t<decltype(r)>, BarRep>)
            return int(r.bars.size());
        else if constexpr (std::is_same_v<std::decay_t<decltype(r)>, SemiBarRep>)
            return int(r.lengths.size());
        else
            return int(r.arcs.size());
    }, rep);
}

inline int rep_k(const Representation& rep) {
    return std::visit([](const auto& r) { return r.k; }, rep);
}

// Positive endpoint angle of a semi-arc, reduced into [0, 2pi).
inline Angle semi_arc_positive_endpoint(const SemiArc& a) {
    Angle start = (a.side == AxisSide::pos) ? Angle(0) : Angle(1);
    return angle_mod(start + a.extent);
}

inline Angle semi_arc_start(const SemiArc& a) {
    return (a.side == AxisSide::pos) ? Angle(0) : Angle(1);
}

// ---------------------------------------------------------------------------
// Validation. Violations are data, not failures: an empty list means every
// invariant of the family holds.
// ---------------------------------------------------------------------------

struct Violation {
    std::string code;
    std::string message;
    bool warning = false;  // warnings do not make a representation invalid
};

namespace detail {

inline void check_angle_range(const Angle& a, const char* what, int index,
                              std::vector<Violation>& out) {
    if (a < Rational(0) || a >= Rational(2))
        out.push_back({"angle out of range",
                       std::string(what) + " of arc " + std::to_string(index) +
                           " is outside [0, 2pi)"});
}

inline void check_assumptions(const std::vector<Arc>& arcs, bool circles_allowed,
                              std::vector<Violation>& out) {
    std::map<int, int> rank_count;
    for (const Arc& a : arcs) ++rank_count[a.rank];
    for (auto& [rank, cnt] : rank_count)
        if (cnt > 1)
            out.push_back({"duplicate radius rank",
                           "radius rank " + std::to_string(rank) + " used " +
                               std::to_string(cnt) + " times"});

    std::map<Angle, std::vector<int>, std::less<Angle>> at;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc& a = arcs[i];
        if (a.full_circle) {
            if (!circles_allowed)
                out.push_back({"full circle in arc representation",
                               "arc " + std::to_string(int(i)) + " is a full circle"});
            if (a.extent != Rational(2))
                out.push_back({"full circle extent",
                               "full circle " + std::to_string(int(i)) +
                                   " must have extent 2pi"});
            continue;
        }
        check_angle_range(a.start, "start", int(i), out);
        if (a.extent < Rational(0) || a.extent >= Rational(2))
            out.push_back({"extent out of range",
                           "extent of arc " + std::to_string(int(i)) +
                               " is outside [0, 2pi)"});
        if (a.extent == Rational(0))
            out.push_back({"degenerate point arc",
                           "arc " + std::to_string(int(i)) + " has extent 0",
                           /*warning=*/true});
        at[angle_mod(a.start)].push_back(int(i));
        if (a.extent != Rational(0))
            at[angle_mod(a.start + a.extent)].push_back(int(i));
    }
    for (auto& [angle, owners] : at) {
        // Coincidences between two different arcs break Assumption 1; an
        // arc's own two endpoints only coincide in the degenerate case
        // already flagged above.
        std::vector<int> uniq = owners;
        std::sort(uniq.begin(), uniq.end());
        bool two_arcs = std::adjacent_find(uniq.begin(), uniq.end(),
                                           std::not_equal_to<int>()) != uniq.end();
        if (owners.size() > 1 && two_arcs)
            out.push_back({"coincident endpoint angle",
                           "endpoint angle " + angle.str() + "*pi shared by " +
                               std::to_string(owners.size()) + " endpoints"});
    }
}

}  // namespace detail

inline std::vector<Violation> validate(const BarRep& rep) {
    std::vector<Violation> out;
    for (std::size_t i = 0; i < rep.bars.size(); ++i) {
        const Bar& b = rep.bars[i];
        if (!(b.x_left < b.x_right))
            out.push_back({"empty bar interval",
                           "bar " + std::to_string(int(i)) + " has x_left >= x_right"});
        if (b.x_left < Rational(0))
            out.push_back({"negative abscissa",
                           "bar " + std::to_string(int(i)) + " has x_left < 0"});
    }
    for (std::size_t i = 0; i + 1 < rep.bars.size(); ++i) {
        if (!(rep.bars[i + 1].y < rep.bars[i].y))
            out.push_back({"bars not ordered by decreasing y",
                           "bars " + std::to_string(int(i)) + " and " +
                               std::to_string(int(i + 1)) + " out of order or tied"});
    }
    if (rep.k < 0) out.push_back({"negative k", "k must be >= 0"});
    return out;
}

inline std::vector<Violation> validate(const SemiBarRep& rep) {
    std::vector<Violation> out;
    for (std::size_t i = 0; i < rep.lengths.size(); ++i)
        if (!(Rational(0) < rep.lengths[i]))
            out.push_back({"nonpositive length",
                           "semi-bar " + std::to_string(int(i)) + " has length <= 0"});
    if (rep.k < 0) out.push_back({"negative k", "k must be >= 0"});
    return out;
}

inline std::vector<Violation> validate(const ArcRep& rep) {
    std::vector<Violation> out;
    detail::check_assumptions(rep.arcs, /*circles_allowed=*/false, out);
    if (rep.k < 0) out.push_back({"negative k", "k must be >= 0"});
    return out;
}

inline std::vector<Violation> validate(const CircleRep& rep) {
    std::vector<Violation> out;
    detail::check_assumptions(rep.arcs, /*circles_allowed=*/true, out);
    if (rep.k < 0) out.push_back({"negative k", "k must be >= 0"});
    return out;
}

inline std::vector<Violation> validate(const SemiArcRep& rep) {
    std::vector<Violation> out;
    std::map<Angle, int> at;
    for (std::size_t i = 0; i < rep.arcs.size(); ++i) {
        const SemiArc& a = rep.arcs[i];
        if (a.extent < Rational(0) || a.extent >= Rational(2))
            out.push_back({"extent out of range",
                           "semi-arc " + std::to_string(int(i)) +
                               " has extent outside [0, 2pi)"});
        if (a.extent == Rational(0))
            out.push_back({"degenerate point arc",
                           "semi-arc " + std::to_string(int(i)) + " has extent 0",
                           /*warning=*/true});
        ++at[semi_arc_positive_endpoint(a)];
    }
    for (auto& [angle, cnt] : at)
        if (cnt > 1)
            out.push_back({"coincident endpoint angle",
                           "positive endpoint angle " + angle.str() +
                               "*pi shared by " + std::to_string(cnt) + " semi-arcs"});
    if (rep.k < 0) out.push_back({"negative k", "k must be >= 0"});
    return out;
}

inline std::vector<Violation> validate(const Representation& rep) {
    return std::visit([](const auto& r) { return validate(r); }, rep);
}

inline bool valid(const Representation& rep) {
    for (const Violation& v : validate(rep))
        if (!v.warning) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Canonical semi-bar form: lengths mapped to integers 1..n by dense ranking,
// ties kept equal. Stacking order is untouched, so the graph is unchanged.
// ---------------------------------------------------------------------------

inline SemiBarRep canonicalize_semi_bar(const SemiBarRep& rep) {
    std::vector<Rational> sorted = rep.lengths;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    SemiBarRep out;
    out.k = rep.k;
    out.lengths.reserve(rep.lengths.size());
    for (const Rational& len : rep.lengths) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), len);
        out.lengths.push_back(Rational(1 + (it - sorted.begin())));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Normalization of arc/circle representations that violate Assumption 1
// (coincident endpoint angles) or Assumption 2 (duplicate radius ranks).
//
// Ranks are re-assigned to 1..n preserving the radial order (ties broken by
// list position). Coincident endpoint angles are separated by deterministic
// rational shifts strictly smaller than half the minimum nonzero angular gap;
// every positive-length visibility window of the input keeps its membership
// pattern around its midpoint, so no edge is deleted. The seed parameter is
// accepted for interface stability; the shift schedule itself is fully
// deterministic.
// ---------------------------------------------------------------------------

namespace detail {

inline void normalize_arcs(std::vector<Arc>& arcs, std::uint64_t /*seed*/) {
    if (arcs.empty()) throw std::invalid_argument("normalize: empty representation");

    // Assumption 2: distinct ranks, stable in (rank, index) order.
    std::vector<int> order(arcs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[int(i)] = int(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return arcs[a].rank < arcs[b].rank;
    });
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        arcs[order[pos]].rank = int(pos) + 1;

    // Assumption 1: separate coincident endpoint angles.
    struct Endpoint {
        int arc;
        bool is_end;  // false = negative endpoint (start), true = positive
    };
    for (;;) {
        std::map<Angle, std::vector<Endpoint>> groups;
        std::vector<Angle> positions;
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            const Arc& a = arcs[i];
            if (a.full_circle) continue;
            groups[angle_mod(a.start)].push_back({int(i), false});
            groups[angle_mod(a.start + a.extent)].push_back({int(i), true});
        }
        for (auto& [pos, eps] : groups) positions.push_back(pos);
        bool any_clash = false;
        for (auto& [pos, eps] : groups)
            if (eps.size() > 1) any_clash = true;
        if (!any_clash) break;

        // Minimum nonzero circular gap between distinct event positions.
        Angle min_gap(2);
        if (positions.size() > 1) {
            for (std::size_t i = 0; i < positions.size(); ++i) {
                Angle next = positions[(i + 1) % positions.size()];
                Angle gap = ccw_gap(positions[i], next);
                if (gap != Rational(0) && gap < min_gap) min_gap = gap;
            }
        }
        Angle delta = min_gap / Rational(4);

        for (auto& [pos, eps] : groups) {
            if (eps.size() < 2) continue;
            // Keep the first endpoint in place; spread the rest forward by
            // j * delta / m. Positive endpoints move CCW (the arc grows);
            // negative endpoints move CW (the arc grows too), so presence on
            // existing windows can only persist.
            long long m = (long long)eps.size();
            for (std::size_t j = 1; j < eps.size(); ++j) {
                Angle shift = delta * Rational((long long)j, m);
                Arc& a = arcs[eps[j].arc];
                // shift < min_gap/4 <= (2pi - extent)/4, so extent stays < 2pi.
                if (eps[j].is_end) {
                    a.extent = a.extent + shift;
                } else {
                    a.start = angle_mod(a.start - shift);
                    a.extent = a.extent + shift;
                }
            }
        }
    }
}

}  // namespace detail

inline ArcRep normalize(ArcRep rep, std::uint64_t seed) {
    detail::normalize_arcs(rep.arcs, seed);
    return rep;
}

inline CircleRep normalize(CircleRep rep, std::uint64_t seed) {
    detail::normalize_arcs(rep.arcs, seed);
    return rep;
}

inline Representation normalize(const Representation& rep, std::uint64_t seed) {
    if (auto* a = std::get_if<ArcRep>(&rep)) return normalize(*a, seed);
    if (auto* c = std::get_if<CircleRep>(&rep)) return normalize(*c, seed);
    throw std::invalid_argument("normalize applies to arc and circle representations");
}

// ---------------------------------------------------------------------------
// Deterministic random representations. Endpoint coordinates are drawn from
// fixed rational grids without replacement, so Assumptions 1-2 hold by
// construction and validate() is empty on every output.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<int> sample_distinct(Prng& rng, int grid, int count) {
    std::vector<int> slots(grid);
    for (int i = 0; i < grid; ++i) slots[i] = i;
    for (int i = 0; i < count; ++i) {
        int j = i + int(rng.below(std::uint64_t(grid - i)));
        std::swap(slots[i], slots[j]);
    }
    slots.resize(count);
    return slots;
}

inline std::vector<int> random_permutation(Prng& rng, int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    for (int i = n - 1; i > 0; --i) {
        int j = int(rng.below(std::uint64_t(i + 1)));
        std::swap(p[i], p[j]);
    }
    return p;
}

}  // namespace detail

inline Representation random_rep(Family family, int n, int k, std::uint64_t seed,
                                 bool allow_ties = false) {
    if (n < 1) throw std::invalid_argument("random_rep: n must be >= 1");
    if (k < 0) throw std::invalid_argument("random_rep: k must be >= 0");
    Prng rng(seed * 0x9E3779B97F4A7C15ULL + std::uint64_t(n) * 131 + std::uint64_t(k));

    switch (family) {
        case Family::semi_bar: {
            SemiBarRep rep;
            rep.k = k;
            if (allow_ties) {
                for (int i = 0; i < n; ++i)
                    rep.lengths.push_back(Rational(rng.range(1, n)));
            } else {
                for (int v : detail::random_permutation(rng, n))
                    rep.lengths.push_back(Rational(v));
            }
            return rep;
        }
        case Family::bar: {
            BarRep rep;
            rep.k = k;
            // Distinct endpoint abscissas on an integer grid keep every
            // visibility witness on a positive-length interval.
            int grid = 8 * n + 4;
            std::vector<int> xs = detail::sample_distinct(rng, grid, 2 * n);
            std::vector<int> ys = detail::random_permutation(rng, n);
            for (int i = 0; i < n; ++i) {
                int a = xs[2 * i], b = xs[2 * i + 1];
                if (a > b) std::swap(a, b);
                Bar bar;
                bar.x_left = Rational(a);
                bar.x_right = Rational(b);
                bar.y = Rational(ys[i]);
                rep.bars.push_back(bar);
            }
            std::sort(rep.bars.begin(), rep.bars.end(),
                      [](const Bar& p, const Bar& q) { return q.y < p.y; });
            return rep;
        }
        case Family::arc:
        case Family::circle: {
            std::vector<Arc> arcs;
            int grid = 8 * n + 5;
            std::vector<int> slots = detail::sample_distinct(rng, grid, 2 * n);
            std::vector<int> ranks = detail::random_permutation(rng, n);
            for (int i = 0; i < n; ++i) {
                Arc a;
                a.rank = ranks[i];
                if (family == Family::circle && rng.below(4) == 0) {
                    a.full_circle = true;
                    a.start = Rational(0);
                    a.extent = Rational(2);
                } else {
                    Angle s = Rational(2LL * slots[2 * i], grid);
                    Angle e = Rational(2LL * slots[2 * i + 1], grid);
                    a.start = s;
                    a.extent = ccw_gap(s, e);
                }
                arcs.push_back(a);
            }
            if (family == Family::arc) {
                ArcRep rep;
                rep.arcs = std::move(arcs);
                rep.k = k;
                return rep;
            }
            CircleRep rep;
            rep.arcs = std::move(arcs);
            rep.k = k;
            return rep;
        }
        case Family::semi_arc: {
            SemiArcRep rep;
            rep.k = k;
            // Odd grid excludes both 0 and pi exactly.
            int grid = 4 * n + 3;
            std::vector<int> slots = detail::sample_distinct(rng, grid - 1, n);
            for (int i = 0; i < n; ++i) {
                SemiArc a;
                a.side = rng.coin() ? AxisSide::pos : AxisSide::neg;
                Angle endpoint = Rational(2LL * (slots[i] + 1), grid);
                a.extent = ccw_gap(semi_arc_start(a), endpoint);
                rep.arcs.push_back(a);
            }
            return rep;
        }
    }
    throw std::invalid_argument("random_rep: unsupported family");
}

}  // namespace kvisi
