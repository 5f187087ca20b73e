#pragma once

#include "kvisi/rational.hpp"

namespace kvisi {

// Angles are stored as exact rational multiples of pi: an Angle value q
// stands for the geometric angle q*pi. A full turn is therefore q = 2 and
// the canonical position range is [0, 2). Keeping the factor of pi symbolic
// makes every event comparison exact.
using Angle = Rational;

// Canonical position on the circle: q reduced into [0, 2).
inline Angle angle_mod(const Angle& a) {
    long long turns = (a / Rational(2)).floor();
    return a - Rational(2) * Rational(turns);
}

// Counterclockwise distance from `from` to `to`, in [0, 2).
inline Angle ccw_gap(const Angle& from, const Angle& to) {
    return angle_mod(to - from);
}

}  // namespace kvisi
