#include "trackzero/error.hpp"
#include "trackzero/index/index.hpp"
#include "trackzero/symcore/trig.hpp"

#include <cmath>

namespace tz {

namespace {

// Rotation by a multiple of a quarter turn taking the certified half-plane to u > 0.
enum class Turn { None, Half, Clockwise, Counterclockwise };

std::pair<Interval, Interval> rotate(Turn t, const Interval& a, const Interval& b) {
  switch (t) {
    case Turn::None: return {a, b};
    case Turn::Half: return {-a, -b};
    case Turn::Clockwise: return {b, -a};
    default: return {-b, a};
  }
}

std::optional<Turn> half_plane(const Interval& a, const Interval& b) {
  if (a.positive()) return Turn::None;
  if (a.negative()) return Turn::Half;
  if (b.positive()) return Turn::Clockwise;
  if (b.negative()) return Turn::Counterclockwise;
  return std::nullopt;
}

// v / u for u > 0.
Interval ratio(const Interval& v, const Interval& u) {
  const Rational c1 = v.lo() / u.lo(), c2 = v.lo() / u.hi(), c3 = v.hi() / u.lo(), c4 = v.hi() / u.hi();
  return Interval(min(min(c1, c2), min(c3, c4)), max(max(c1, c2), max(c3, c4)));
}

Interval endpoint_ratio(const VectorField& f, const Point& p, Turn turn, const Interval& seg_a,
                        const Interval& seg_b) {
  const Box at = Box::of_point(p);
  const Interval a = intersect(interval_eval(f.cx(), at), seg_a);
  const Interval b = intersect(interval_eval(f.cy(), at), seg_b);
  const auto [u, v] = rotate(turn, a, b);
  return ratio(v, u);
}

void accumulate(const VectorField& f, const Segment& s, unsigned refine, LoopWinding& out) {
  const auto [a, b] = field_interval_eval(f, s.hull());
  const auto turn = half_plane(a, b);
  if (!turn) {
    if (refine == 0)
      throw CertificationError("zero too close to boundary: field not certified nonzero on segment " +
                               s.to_string());
    auto [first, second] = s.split();
    accumulate(f, first, refine - 1, out);
    accumulate(f, second, refine - 1, out);
    return;
  }
  const Interval start = atan_enclosure(endpoint_ratio(f, s.from, *turn, a, b));
  const Interval end = atan_enclosure(endpoint_ratio(f, s.to, *turn, a, b));
  const Interval inc = end - start;
  out.pieces.push_back({s, inc});
  out.total_angle += inc;
}

// Integer n with total strictly inside (2n - 1/2) pi .. (2n + 1/2) pi, if any.
std::optional<int> resolve_turns(const Interval& total) {
  const Interval& pi = pi_enclosure();
  const double guess = total.mid().get_d() / (2.0 * M_PI);
  const long n = std::lround(guess);
  const Rational lower_factor = Rational(2 * n) - Rational(1, 2);
  const Rational upper_factor = Rational(2 * n) + Rational(1, 2);
  const Rational lower = lower_factor * (sgn(lower_factor) > 0 ? pi.hi() : pi.lo());
  const Rational upper = upper_factor * (sgn(upper_factor) > 0 ? pi.lo() : pi.hi());
  if (total.lo() > lower && total.hi() < upper) return static_cast<int>(n);
  return std::nullopt;
}

}  // namespace

LoopWinding winding_detail(const VectorField& f, const BoundaryLoop& loop, const WindingOptions& opts) {
  LoopWinding out;
  out.kind = loop.kind;
  out.total_angle = Interval(Rational(0));
  for (const Segment& s : loop.segments) accumulate(f, s, opts.max_refine, out);
  auto n = resolve_turns(out.total_angle);
  if (!n)
    throw CertificationError("angle sum " + out.total_angle.to_string() + " not within a quarter turn of a multiple of 2 pi");
  out.winding = *n;
  return out;
}

int winding_number(const VectorField& f, const BoundaryLoop& loop, const WindingOptions& opts) {
  return winding_detail(f, loop, opts).winding;
}

BoundaryLoop box_loop(const Box& b) {
  const Point p00{b.x.lo(), b.y.lo()}, p10{b.x.hi(), b.y.lo()}, p11{b.x.hi(), b.y.hi()}, p01{b.x.lo(), b.y.hi()};
  BoundaryLoop loop;
  loop.kind = LoopKind::Outer;
  loop.segments = {Segment{p00, p10}, Segment{p10, p11}, Segment{p11, p01}, Segment{p01, p00}};
  return loop;
}

}  // namespace tz
