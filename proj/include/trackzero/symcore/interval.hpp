#ifndef TRACKZERO_SYMCORE_INTERVAL_HPP
#define TRACKZERO_SYMCORE_INTERVAL_HPP

#include "trackzero/symcore/rational.hpp"

#include <array>
#include <string>

namespace tz {

// Closed interval with exact rational endpoints; lo <= hi.
class Interval {
 public:
  Interval() = default;
  explicit Interval(const Rational& point) : lo_(point), hi_(point) {}
  Interval(const Rational& lo, const Rational& hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }
  bool contains_zero() const { return sgn(lo_) <= 0 && sgn(hi_) >= 0; }
  bool excludes_zero() const { return !contains_zero(); }
  bool positive() const { return sgn(lo_) > 0; }
  bool negative() const { return sgn(hi_) < 0; }
  bool degenerate() const { return lo_ == hi_; }

  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / 2; }
  // Smallest and largest absolute value over the interval.
  Rational mig() const;
  Rational mag() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator*(const Rational& c, const Interval& a);
  Interval& operator+=(const Interval& b);
  Interval& operator*=(const Interval& b);
  friend bool operator==(const Interval& a, const Interval& b) = default;

  std::string to_string() const;

 private:
  Rational lo_{0};
  Rational hi_{0};
};

// Tight enclosure of x^n (even powers are nonnegative).
Interval pow(const Interval& a, unsigned n);
Interval hull(const Interval& a, const Interval& b);
// Both intervals must intersect.
Interval intersect(const Interval& a, const Interval& b);

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

// Axis-aligned rectangle; degenerate boxes represent segments and points.
struct Box {
  Interval x;
  Interval y;

  static Box from_corners(const Rational& x0, const Rational& y0, const Rational& x1,
                          const Rational& y1);
  static Box of_point(const Point& p) { return {Interval(p.x), Interval(p.y)}; }
  bool has_interior() const { return !x.degenerate() && !y.degenerate(); }
  bool contains(const Point& p) const { return x.contains(p.x) && y.contains(p.y); }
  Point center() const { return {x.mid(), y.mid()}; }
  // Quadrants in the order (lo,lo), (hi,lo), (lo,hi), (hi,hi).
  std::array<Box, 4> quarter() const;
  std::string to_string() const;
  friend bool operator==(const Box&, const Box&) = default;
};

}  // namespace tz

#endif
