#include "trackzero/error.hpp"
#include "trackzero/symcore/expr.hpp"
#include "trackzero/symcore/trig.hpp"

#include "printers.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace tz;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

Rational random_rational(std::mt19937_64& rng, long bound, long den) {
  std::uniform_int_distribution<long> k(-bound * den, bound * den);
  Rational r(k(rng), den);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("rational text round trip") {
  CHECK(to_string(q(3, 6)) == "1/2");
  CHECK(to_string(q(-4, 2)) == "-2");
  CHECK(parse_rational(" -3/4 ") == q(-3, 4));
  CHECK(parse_rational("0.125") == q(1, 8));
  CHECK(parse_rational("7") == q(7));
  CHECK(parse_rational("010") == q(10));
  CHECK(parse_rational("0.125") == q(1, 8));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("a"), Error);
  CHECK(tz::floor(q(-1, 2)) == -1);
}

TEST_CASE("interval arithmetic encloses pointwise results") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    Rational a = random_rational(rng, 3, 7), b = random_rational(rng, 3, 7);
    Rational c = random_rational(rng, 3, 5), d = random_rational(rng, 3, 5);
    Interval x(min(a, b), max(a, b)), y(min(c, d), max(c, d));
    const Rational px = a, py = c;
    CHECK((x + y).contains(px + py));
    CHECK((x - y).contains(px - py));
    CHECK((x * y).contains(px * py));
    CHECK(pow(x, 2).contains(px * px));
    CHECK(sgn(pow(x, 2).lo()) >= 0);
    CHECK(pow(x, 3).contains(px * px * px));
  }
  Interval z(q(-1), q(2));
  CHECK(z.mig() == 0);
  CHECK(z.mag() == 2);
  CHECK(Interval(q(-3), q(-1)).mig() == 1);
  CHECK(pow(z, 2) == Interval(q(0), q(4)));
}

TEST_CASE("box quarters tile the box") {
  Box b = Box::from_corners(q(0), q(0), q(1), q(2));
  auto qs = b.quarter();
  CHECK(qs[0] == Box::from_corners(q(0), q(0), q(1, 2), q(1)));
  CHECK(qs[3] == Box::from_corners(q(1, 2), q(1), q(1), q(2)));
  CHECK(b.contains({q(1), q(2)}));
  CHECK_FALSE(b.contains({q(1), q(3)}));
}

TEST_CASE("pi enclosure is tight and correct") {
  const Interval& p = pi_enclosure();
  CHECK(p.lo().get_d() <= std::numbers::pi);
  CHECK(p.hi().get_d() >= std::numbers::pi);
  CHECK(p.width() < Rational(1, 1000000000000000000));
}

TEST_CASE("sin_2pi enclosures contain the function and are exact on the quarter grid") {
  CHECK(sin_2pi(Interval(q(1, 4))) == Interval(q(1)));
  CHECK(sin_2pi(Interval(q(1, 2))) == Interval(q(0)));
  CHECK(cos_2pi(Interval(q(0))) == Interval(q(1)));
  CHECK(cos_2pi(Interval(q(3, 4))) == Interval(q(0)));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    Rational a = random_rational(rng, 2, 97), b = random_rational(rng, 2, 89);
    Interval x(min(a, b), max(a, b));
    Interval s = sin_2pi(x), c = cos_2pi(x);
    for (int k = 0; k <= 8; ++k) {
      const long double v = Rational(x.lo() + (x.hi() - x.lo()) * q(k, 8)).get_d();
      const long double sv = std::sin(2 * std::numbers::pi_v<long double> * v);
      const long double cv = std::cos(2 * std::numbers::pi_v<long double> * v);
      CHECK(s.lo().get_d() <= sv + 1e-12L);
      CHECK(s.hi().get_d() >= sv - 1e-12L);
      CHECK(c.lo().get_d() <= cv + 1e-12L);
      CHECK(c.hi().get_d() >= cv - 1e-12L);
    }
    CHECK(s.lo() >= -1);
    CHECK(s.hi() <= 1);
  }
  // Range over a full period is [-1, 1].
  CHECK(sin_2pi(Interval(q(0), q(1))) == Interval(q(-1), q(1)));
}

TEST_CASE("atan enclosure") {
  for (double r : {-5.0, -1.0, -0.25, 0.0, 0.5, 3.0}) {
    Interval e = atan_enclosure(Interval(Rational(r)));
    CHECK(e.lo().get_d() <= std::atan(r) + 1e-12);
    CHECK(e.hi().get_d() >= std::atan(r) - 1e-12);
  }
  Interval wide = atan_enclosure(Interval(q(-1), q(1)));
  CHECK(wide.lo().get_d() <= -std::numbers::pi / 4);
  CHECK(wide.hi().get_d() >= std::numbers::pi / 4);
}

TEST_CASE("expression normal form") {
  Expr x = Expr::var(Var::X), y = Expr::var(Var::Y);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK(((x + 1) * (x + 1)).to_string() == "x^2 + 2*x + 1");
  CHECK((Expr(q(3, 2)) * x * y - 2).to_string() == "3/2*x*y - 2");
  CHECK((x - x).is_zero());
  Expr s = Expr::gen(Gen::SinX), c = Expr::gen(Gen::CosX);
  CHECK(s * s + c * c == Expr(1));
  CHECK(pow(c, 3) == c - s * s * c);
  CHECK(pow(x + y, 3).total_degree() == 3);
}

TEST_CASE("parser accepts the grammar and reports positions") {
  Expr x = Expr::var(Var::X), y = Expr::var(Var::Y);
  CHECK(parse_expr("2*x^2 - (x - y)*3/4", Domain::Plane) == Expr(2) * x * x - Expr(q(3, 4)) * x + Expr(q(3, 4)) * y);
  CHECK(parse_expr("(x + 1)^3", Domain::Plane) == pow(x + 1, 3));
  CHECK(parse_expr("010/04", Domain::Plane) == Expr(q(5, 2)));
  CHECK(parse_expr("-x^2", Domain::Plane) == -pow(Expr::var(Var::X), 2));
  CHECK(parse_expr("pi*sin2px", Domain::Torus) == Expr::gen(Gen::Pi) * Expr::gen(Gen::SinX));
  try {
    parse_expr("x + sin2px", Domain::Plane);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_expr("x", Domain::Torus), ParseError);
  CHECK_THROWS_AS(parse_expr("x +", Domain::Plane), ParseError);
  CHECK_THROWS_AS(parse_expr("(x", Domain::Plane), ParseError);
  CHECK_THROWS_AS(parse_expr("x y", Domain::Plane), ParseError);
  CHECK_THROWS_AS(parse_expr("1/0", Domain::Plane), ParseError);
}

TEST_CASE("to_string round trips through the parser") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> k(-9, 9);
  for (int t = 0; t < 100; ++t) {
    Expr e;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 3; ++b)
        e += Expr(q(k(rng), 1 + t % 4)) * pow(Expr::var(Var::X), a) * pow(Expr::var(Var::Y), b);
    CHECK(parse_expr(e.to_string(), Domain::Plane) == e);
  }
  Expr trig = Expr(q(-1, 3)) * Expr::gen(Gen::SinX) * Expr::gen(Gen::CosY) + Expr::gen(Gen::Pi, 2);
  CHECK(parse_expr(trig.to_string(), Domain::Torus) == trig);
}

TEST_CASE("derivatives") {
  Expr x = Expr::var(Var::X), y = Expr::var(Var::Y);
  CHECK(derive(pow(x, 3) * y, Var::X) == Expr(3) * x * x * y);
  CHECK(derive(pow(x, 3) * y, Var::Y) == pow(x, 3));
  Expr two_pi = Expr(2) * Expr::gen(Gen::Pi);
  CHECK(derive(Expr::gen(Gen::SinX), Var::X) == two_pi * Expr::gen(Gen::CosX));
  CHECK(derive(Expr::gen(Gen::CosY), Var::Y) == -two_pi * Expr::gen(Gen::SinY));
  CHECK(derive(Expr::gen(Gen::SinY), Var::X).is_zero());
  // Product rule, exactly.
  Expr f = x * x + Expr::gen(Gen::Pi) * y, g = x - Expr(q(1, 2)) * y * y;
  CHECK(derive(f * g, Var::Y) == derive(f, Var::Y) * g + f * derive(g, Var::Y));
}

TEST_CASE("exact evaluation") {
  Expr x = Expr::var(Var::X), y = Expr::var(Var::Y);
  CHECK(eval(x * x - y, {q(1, 3), q(1, 9)}) == 0);
  Expr s = Expr::gen(Gen::SinX);
  CHECK(eval(s * s, {q(1, 8), q(0)}) == q(1, 2));
  CHECK(eval(s, {q(1, 4), q(0)}) == 1);
  CHECK(eval(Expr::gen(Gen::CosY), {q(0), q(1, 2)}) == -1);
  CHECK_THROWS_AS(eval(s, {q(1, 8), q(0)}), DomainError);
  CHECK_THROWS_AS(eval(s, {q(1, 3), q(0)}), DomainError);
  CHECK_THROWS_AS(eval(Expr::gen(Gen::Pi), {q(0), q(0)}), DomainError);
  CHECK(std::abs(eval_double(Expr::gen(Gen::Pi) * s, 0.1, 0.0) - std::numbers::pi * std::sin(0.2 * std::numbers::pi)) <
        1e-12);
}

TEST_CASE("interval evaluation encloses point values") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> k(-5, 5);
  for (int t = 0; t < 60; ++t) {
    Expr e;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 3; ++b) e += Expr(k(rng)) * pow(Expr::var(Var::X), a) * pow(Expr::var(Var::Y), b);
    Expr tr = Expr(k(rng)) * Expr::gen(Gen::SinX) * Expr::gen(Gen::CosY) + Expr(k(rng)) * pow(Expr::gen(Gen::CosX), 3) +
              Expr::gen(Gen::Pi) * Expr::gen(Gen::SinY);
    Rational x0 = random_rational(rng, 1, 64), y0 = random_rational(rng, 1, 64);
    Box b = Box::from_corners(x0, y0, x0 + q(1, 16), y0 + q(1, 32));
    Interval ie = interval_eval(e, b), it = interval_eval(tr, b);
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; j <= 4; ++j) {
        const double px = Rational(x0 + q(i, 64)).get_d(), py = Rational(y0 + q(j, 128)).get_d();
        const double ve = eval_double(e, px, py), vt = eval_double(tr, px, py);
        CHECK(ie.lo().get_d() <= ve + 1e-9);
        CHECK(ie.hi().get_d() >= ve - 1e-9);
        CHECK(it.lo().get_d() <= vt + 1e-9);
        CHECK(it.hi().get_d() >= vt - 1e-9);
      }
  }
}

TEST_CASE("exact division and gcd") {
  Expr x = Expr::var(Var::X), y = Expr::var(Var::Y);
  Expr a = (x * x + y * y + 1) * (x - y), b = x - y;
  auto quo = divide_exact(a, b);
  REQUIRE(quo.has_value());
  CHECK(*quo == x * x + y * y + 1);
  CHECK_FALSE(divide_exact(x * x + 1, x).has_value());
  Expr g = gcd((x + y) * (x - 1) * (x - 1), (x - 1) * (y + 2));
  CHECK(divide_exact(g, x - 1).has_value());
  CHECK(divide_exact(x - 1, g).has_value());
  CHECK(gcd(x * x + 1, y).is_constant());
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> k(-4, 4);
  for (int t = 0; t < 40; ++t) {
    Expr p = Expr(k(rng)) * x + Expr(k(rng)) * y + Expr(1 + t % 3), r = x * y + Expr(k(rng)) * x + 1;
    auto d = divide_exact(p * r, r);
    REQUIRE(d.has_value());
    CHECK(*d == p);
  }
}
