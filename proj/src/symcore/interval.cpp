#include "trackzero/symcore/interval.hpp"

#include "trackzero/error.hpp"

namespace tz {

Interval::Interval(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
  if (hi_ < lo_) throw Error("interval with lo > hi: [" + tz::to_string(lo) + ", " + tz::to_string(hi) + "]");
}

Rational Interval::mig() const {
  if (contains_zero()) return 0;
  return sgn(lo_) > 0 ? lo_ : Rational(-hi_);
}

Rational Interval::mag() const { return max(abs(lo_), abs(hi_)); }

Interval operator+(const Interval& a, const Interval& b) {
  Interval r;
  r.lo_ = a.lo_ + b.lo_;
  r.hi_ = a.hi_ + b.hi_;
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r;
  r.lo_ = a.lo_ - b.hi_;
  r.hi_ = a.hi_ - b.lo_;
  return r;
}

Interval operator-(const Interval& a) {
  Interval r;
  r.lo_ = -a.hi_;
  r.hi_ = -a.lo_;
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval r;
  if (a.degenerate()) return a.lo_ * b;
  if (b.degenerate()) return b.lo_ * a;
  const int al = sgn(a.lo_), bl = sgn(b.lo_);
  if (al >= 0 && bl >= 0) {
    r.lo_ = a.lo_ * b.lo_;
    r.hi_ = a.hi_ * b.hi_;
    return r;
  }
  Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
  r.lo_ = min(min(p1, p2), min(p3, p4));
  r.hi_ = max(max(p1, p2), max(p3, p4));
  return r;
}

Interval operator*(const Rational& c, const Interval& a) {
  Interval r;
  if (sgn(c) >= 0) {
    r.lo_ = c * a.lo_;
    r.hi_ = c * a.hi_;
  } else {
    r.lo_ = c * a.hi_;
    r.hi_ = c * a.lo_;
  }
  return r;
}

Interval& Interval::operator+=(const Interval& b) {
  lo_ += b.lo_;
  hi_ += b.hi_;
  return *this;
}

Interval& Interval::operator*=(const Interval& b) { return *this = *this * b; }

std::string Interval::to_string() const { return "[" + tz::to_string(lo_) + ", " + tz::to_string(hi_) + "]"; }

Interval pow(const Interval& a, unsigned n) {
  if (n == 0) return Interval(Rational(1));
  auto power = [n](const Rational& q) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), n);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), n);
    return r;
  };
  const Rational lo_n = power(a.lo());
  const Rational hi_n = power(a.hi());
  if (n % 2 == 1) return Interval(lo_n, hi_n);
  if (sgn(a.lo()) >= 0) return Interval(lo_n, hi_n);
  if (sgn(a.hi()) <= 0) return Interval(hi_n, lo_n);
  return Interval(Rational(0), max(lo_n, hi_n));
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(min(a.lo(), b.lo()), max(a.hi(), b.hi()));
}

Interval intersect(const Interval& a, const Interval& b) {
  return Interval(max(a.lo(), b.lo()), min(a.hi(), b.hi()));
}

Box Box::from_corners(const Rational& x0, const Rational& y0, const Rational& x1,
                      const Rational& y1) {
  return {Interval(min(x0, x1), max(x0, x1)), Interval(min(y0, y1), max(y0, y1))};
}

std::array<Box, 4> Box::quarter() const {
  const Rational mx = x.mid(), my = y.mid();
  const Interval xl(x.lo(), mx), xh(mx, x.hi()), yl(y.lo(), my), yh(my, y.hi());
  return {Box{xl, yl}, Box{xh, yl}, Box{xl, yh}, Box{xh, yh}};
}

std::string Box::to_string() const { return x.to_string() + "x" + y.to_string(); }

}  // namespace tz
