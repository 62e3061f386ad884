#include "trackzero/error.hpp"
#include "trackzero/vfield/vfield.hpp"

#include "oracles.hpp"
#include "printers.hpp"

#include <doctest.h>

#include <random>

using namespace tz;

namespace {

VectorField plane(const std::string& s) { return parse_field(s, Domain::Plane); }
VectorField torus(const std::string& s) { return parse_field(s, Domain::Torus); }

VectorField random_field(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<long> k(-4, 4);
  Expr c[2];
  for (Expr& e : c)
    for (int a = 0; a <= degree; ++a)
      for (int b = 0; a + b <= degree; ++b) e += Expr(k(rng)) * pow(Expr::var(Var::X), a) * pow(Expr::var(Var::Y), b);
  return VectorField(c[0], c[1], Domain::Plane);
}

}  // namespace

TEST_CASE("field parsing") {
  VectorField f = plane("(x^2 - y, 2*x*y)");
  CHECK(f.to_string() == "(x^2 - y, 2*x*y)");
  CHECK(f.domain() == Domain::Plane);
  CHECK(plane(f.to_string()) == f);
  CHECK(torus("(sin2px, cos2py + 1/2)")[1] == Expr::gen(Gen::CosY) + Expr(Rational(1, 2)));
  CHECK_THROWS_AS(plane("(x, y"), ParseError);
  CHECK_THROWS_AS(plane("(x)"), ParseError);
  CHECK_THROWS_AS(plane("x, y"), ParseError);
  CHECK_THROWS_AS(torus("(x, sin2py)"), ParseError);
  CHECK_THROWS_AS(plane("(sin2px, y)"), ParseError);
  CHECK(plane("(0, 0)").is_zero());
}

TEST_CASE("bracket matches a dense integer oracle") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    oracle::Field a{oracle::random_poly(rng, 3, 5), oracle::random_poly(rng, 3, 5)};
    oracle::Field b{oracle::random_poly(rng, 3, 5), oracle::random_poly(rng, 3, 5)};
    CHECK(lie_bracket(plane(oracle::text(a)), plane(oracle::text(b))) == plane(oracle::text(oracle::bracket(a, b))));
  }
}

TEST_CASE("bracket algebra") {
  std::mt19937_64 rng(23);
  const VectorField e = euler_field();
  for (int t = 0; t < 40; ++t) {
    VectorField a = random_field(rng, 3), b = random_field(rng, 2), c = random_field(rng, 2);
    CHECK(lie_bracket(a, b) == -lie_bracket(b, a));
    CHECK(lie_bracket(a, a).is_zero());
    CHECK((lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) + lie_bracket(c, lie_bracket(a, b)))
              .is_zero());
    // [pX, X] = -X(p) X
    Expr p = random_field(rng, 2)[0];
    CHECK(lie_bracket(p * a, a) == (-apply(a, p)) * a);
  }
  // Euler identity on homogeneous fields.
  for (unsigned k = 1; k <= 6; ++k) {
    Expr x = Expr::var(Var::X), y = Expr::var(Var::Y);
    VectorField h(pow(x, k) - Expr(3) * pow(y, k), Expr(2) * pow(x, k - 1) * y, Domain::Plane);
    CHECK(lie_bracket(e, h) == Expr(long(k) - 1) * h);
  }
  // Translations commute with periodic fields of the other coordinate.
  CHECK(lie_bracket(torus("(1, 0)"), torus("(sin2py, 0)")).is_zero());
  CHECK(lie_bracket(torus("(1, 0)"), torus("(sin2px, 0)")) ==
        VectorField(Expr(2) * Expr::gen(Gen::Pi) * Expr::gen(Gen::CosX), Expr(0), Domain::Torus));
}

TEST_CASE("jacobian, wedge, dot") {
  VectorField f = plane("(x^2 - y^2, 2*x*y)");
  JacobianMatrix j = jacobian(f);
  CHECK(j.entry[0][0] == plane("(2*x, 0)")[0]);
  CHECK(j.entry[0][1] == plane("(-2*y, 0)")[0]);
  CHECK(j.determinant() == plane("(4*x^2 + 4*y^2, 0)")[0]);
  CHECK(j.trace() == plane("(4*x, 0)")[0]);
  CHECK(wedge(f, euler_field()) == plane("(-x^2*y - y^3, 0)")[0]);
  CHECK(dot(f, rotation_field()) == plane("(-x^2*y + y^3 + 2*x^2*y, 0)")[0]);
  CHECK(apply(euler_field(), Expr::var(Var::X) * Expr::var(Var::Y)) == Expr(2) * Expr::var(Var::X) * Expr::var(Var::Y));
}

TEST_CASE("field enclosures contain sampled values") {
  std::mt19937_64 rng(31);
  VectorField f = torus("(sin2px*cos2py - 1/3, sin2py^2 + cos2px)");
  std::uniform_int_distribution<long> k(0, 255);
  for (int t = 0; t < 100; ++t) {
    Rational x0(k(rng), 256), y0(k(rng), 256);
    x0.canonicalize();
    y0.canonicalize();
    Box b = Box::from_corners(x0, y0, x0 + Rational(1, 64), y0 + Rational(1, 64));
    auto [ex, ey] = field_interval_eval(f, b);
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j <= 3; ++j) {
        const double px = x0.get_d() + i / 192.0, py = y0.get_d() + j / 192.0;
        auto v = eval_double(f, px, py);
        CHECK(ex.lo().get_d() <= v[0] + 1e-12);
        CHECK(ex.hi().get_d() >= v[0] - 1e-12);
        CHECK(ey.lo().get_d() <= v[1] + 1e-12);
        CHECK(ey.hi().get_d() >= v[1] - 1e-12);
      }
  }
}

TEST_CASE("field arithmetic rejects mixed domains") {
  CHECK_THROWS_AS(plane("(1, 0)") + torus("(1, 0)"), DomainError);
  CHECK((plane("(x, y)") - plane("(x, 0)")) == plane("(0, y)"));
}
