#include "trackzero/symcore/trig.hpp"

#include <mpfr.h>

namespace tz {

namespace {

// RAII wrapper over an mpfr_t at the enclosure precision.
class Mp {
 public:
  Mp() { mpfr_init2(v_, kEnclosureBits); }
  ~Mp() { mpfr_clear(v_); }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  Rational to_rational() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

 private:
  mpfr_t v_;
};

Interval compute_pi() {
  Mp lo, hi;
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return Interval(lo.to_rational(), hi.to_rational());
}

// Enclosure of sin(2*pi*t) at a single rational t in [0, 1).
Interval sin_2pi_point(const Rational& t) {
  // Exact values on the quarter grid.
  Rational four_t = 4 * t;
  if (four_t.get_den() == 1) {
    switch (four_t.get_num().get_si()) {
      case 0: case 2: return Interval(Rational(0));
      case 1: return Interval(Rational(1));
      default: return Interval(Rational(-1));
    }
  }
  Mp t_lo, t_hi, pi_lo, pi_hi, th_lo, th_hi, s_lo, s_hi, w;
  mpfr_set_q(t_lo.get(), t.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(t_hi.get(), t.get_mpq_t(), MPFR_RNDU);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  // t >= 0, so the products below are monotone in each factor.
  mpfr_mul(th_lo.get(), t_lo.get(), pi_lo.get(), MPFR_RNDD);
  mpfr_mul_2ui(th_lo.get(), th_lo.get(), 1, MPFR_RNDD);
  mpfr_mul(th_hi.get(), t_hi.get(), pi_hi.get(), MPFR_RNDU);
  mpfr_mul_2ui(th_hi.get(), th_hi.get(), 1, MPFR_RNDU);
  // |sin(a) - sin(b)| <= |a - b|.
  mpfr_sub(w.get(), th_hi.get(), th_lo.get(), MPFR_RNDU);
  mpfr_sin(s_lo.get(), th_lo.get(), MPFR_RNDD);
  mpfr_sin(s_hi.get(), th_lo.get(), MPFR_RNDU);
  mpfr_sub(s_lo.get(), s_lo.get(), w.get(), MPFR_RNDD);
  mpfr_add(s_hi.get(), s_hi.get(), w.get(), MPFR_RNDU);
  Rational lo = s_lo.to_rational(), hi = s_hi.to_rational();
  if (lo < -1) lo = -1;
  if (hi > 1) hi = 1;
  return Interval(lo, hi);
}

bool contains_critical(const Rational& a, const Rational& b, const Rational& offset) {
  // Is offset + k in [a, b] for some integer k?
  Rational k = Rational(floor(Rational(b - offset)));
  return k + offset >= a;
}

}  // namespace

const Interval& pi_enclosure() {
  static const Interval pi = compute_pi();
  return pi;
}

Interval sin_2pi(const Interval& x) {
  if (x.width() >= 1) return Interval(Rational(-1), Rational(1));
  const Rational shift(floor(x.lo()));
  const Rational a = x.lo() - shift;
  const Rational b = x.hi() - shift;
  Interval r = sin_2pi_point(a);
  if (b != a) {
    Rational bb = b;
    if (bb >= 1) bb -= 1;
    r = hull(r, sin_2pi_point(bb));
  }
  Rational lo = r.lo(), hi = r.hi();
  if (contains_critical(a, b, Rational(1, 4))) hi = 1;
  if (contains_critical(a, b, Rational(3, 4))) lo = -1;
  return Interval(lo, hi);
}

Interval cos_2pi(const Interval& x) {
  const Rational quarter(1, 4);
  return sin_2pi(Interval(x.lo() + quarter, x.hi() + quarter));
}

Interval atan_enclosure(const Interval& r) {
  Mp lo, hi;
  mpfr_set_q(lo.get(), r.lo().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), r.hi().get_mpq_t(), MPFR_RNDU);
  mpfr_atan(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_atan(hi.get(), hi.get(), MPFR_RNDU);
  return Interval(lo.to_rational(), hi.to_rational());
}

}  // namespace tz
