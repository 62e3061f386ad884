#ifndef TRACKZERO_SYMCORE_TRIG_HPP
#define TRACKZERO_SYMCORE_TRIG_HPP

#include "trackzero/symcore/interval.hpp"

namespace tz {

// Binary precision of every transcendental enclosure (outward rounded).
inline constexpr unsigned kEnclosureBits = 128;

// Rational interval containing pi.
const Interval& pi_enclosure();

// Enclosures of t -> sin(2*pi*t) and t -> cos(2*pi*t) over t in x. Monotone pieces
// are split at the quarter-period critical points, which are rational.
Interval sin_2pi(const Interval& x);
Interval cos_2pi(const Interval& x);

// Enclosure of atan(r) for r in the given interval.
Interval atan_enclosure(const Interval& r);

}  // namespace tz

#endif
