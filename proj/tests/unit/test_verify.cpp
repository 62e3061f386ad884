#include "trackzero/error.hpp"
#include "trackzero/verify/harness.hpp"

#include "printers.hpp"

#include <doctest.h>

#include <cmath>

using namespace tz;

namespace {

VectorField plane(const std::string& s) { return parse_field(s, Domain::Plane); }
VectorField torus(const std::string& s) { return parse_field(s, Domain::Torus); }
const Box kUnit = Box::from_corners(-1, -1, 1, 1);

double rotation_error(double h) {
  Trajectory t = flow_integrate(rotation_field(), {1.0, 0.0}, 1.0, h);
  const Vec2& p = t.points.back();
  return std::hypot(p[0] - std::cos(1.0), p[1] - std::sin(1.0));
}

}  // namespace

TEST_CASE("rk4 trajectories") {
  Trajectory t = flow_integrate(rotation_field(), {1.0, 0.0}, 1.0, 0.3);
  CHECK(t.step == doctest::Approx(0.25));
  CHECK(t.times.size() == 5);
  CHECK(t.times.front() == 0.0);
  CHECK(t.times.back() == doctest::Approx(1.0));
  CHECK(t.integrator == "rk4");
  CHECK(rotation_error(1e-3) < 1e-12);
  const double ratio = rotation_error(0.1) / rotation_error(0.05);
  CHECK(ratio > 8.0);
  CHECK(ratio < 32.0);
  // Zero horizon returns the start point only.
  Trajectory z = flow_integrate(rotation_field(), {0.5, 0.5}, 0.0, 0.1);
  CHECK(z.points.size() == 1);
  CHECK_THROWS_AS(flow_integrate(rotation_field(), {1.0, 0.0}, 1.0, 0.0), Error);
  CHECK_THROWS_AS(flow_integrate(euler_field(), {1.0, 0.0}, 3.0, 0.01, FloatBox{-2, -2, 2, 2}), Error);
}

TEST_CASE("torus flows wrap") {
  Trajectory t = flow_integrate(torus("(1, 0)"), {0.75, 0.25}, 0.5, 0.01);
  for (const Vec2& p : t.points) {
    CHECK(p[0] >= 0.0);
    CHECK(p[0] < 1.0);
  }
  CHECK(t.points.back()[0] == doctest::Approx(0.25));
}

TEST_CASE("catalog parsing") {
  auto entries = parse_catalog(R"(
# comment
[entry]
name = a
suites = main, ph
x = (x, y)
tracker = (-y, x)
tracker = (x, y)
region = -1, -1, 1, 1
expect_blocks = 1
expect_indices = 1

[entry]
name = t
domain = torus
x = (sin2px, sin2py)
expect_indices = 1, -1, 1, -1
)");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].trackers.size() == 2);
  CHECK(entries[0].in_suite("ph"));
  CHECK_FALSE(entries[0].in_suite("stability"));
  CHECK(*entries[0].expect_blocks == 1);
  CHECK(entries[1].region == torus_region());
  CHECK(entries[1].expect_indices == std::vector<int>{-1, -1, 1, 1});
  CHECK_THROWS_AS(parse_catalog("[entry]\nname = a\nx = (x, y)\n"), Error);  // plane entry without region
  CHECK_THROWS_AS(parse_catalog("[entry]\nname = a\nregion = 0,0,1,1\n"), Error);
  CHECK_THROWS_AS(parse_catalog("x = (x, y)\n"), Error);
  CHECK_THROWS_AS(parse_catalog("[entry]\nname = a\nx = (x, y\nregion = 0,0,1,1\n"), Error);
  CHECK_THROWS_AS(parse_catalog("[entry]\nname = a\nbogus = 1\n"), Error);
  CHECK(parse_region("0, -1/2, 1, 1/2") == Box::from_corners(0, Rational(-1, 2), 1, Rational(1, 2)));
  CHECK_THROWS_AS(parse_region("1,0,0,1"), Error);
  CHECK_THROWS_AS(parse_region("0,0,1"), Error);
}

TEST_CASE("shipped catalog loads") {
  auto entries = load_catalog(TZ_CATALOG);
  CHECK(entries.size() >= 20);
  std::size_t main = 0, ph = 0;
  for (const auto& e : entries) {
    main += e.in_suite("main");
    ph += e.in_suite("ph");
  }
  CHECK(main >= 11);
  CHECK(ph >= 5);
}

TEST_CASE("stability") {
  VectorField x = plane("(x^2 - y^2, 2*x*y)");
  IsolationResult iso = isolate_zeros(x, kUnit, 7);
  BoundaryBounds bb = boundary_norm_bounds(x, iso.blocks[0]);
  CHECK(sgn(bb.min_norm) > 0);
  CHECK(bb.max_norm >= bb.min_norm);
  StabilityReport r = stability_test(x, iso.blocks[0], 10, 99);
  CHECK(r.base_index == 2);
  CHECK(r.trials.size() == 10);
  CHECK_FALSE(r.falsified());
  for (const StabilityTrial& t : r.trials) CHECK(sgn(t.epsilon) > 0);
  // Same seed, same perturbations.
  StabilityReport again = stability_test(x, iso.blocks[0], 10, 99);
  for (std::size_t k = 0; k < 10; ++k) CHECK(again.trials[k].epsilon == r.trials[k].epsilon);
  std::mt19937_64 rng(1);
  VectorField p = random_perturbation(Domain::Torus, rng);
  CHECK(p.domain() == Domain::Torus);
  CHECK_FALSE(p[0].has_xy());
  CHECK(stability_trial(x, iso.blocks[0], plane("(0, 0)"), bb.min_norm).epsilon == 0);
}

TEST_CASE("random polynomials") {
  std::mt19937_64 rng(4);
  Expr h = random_polynomial(Domain::Plane, 3, 5, 1, rng, true);
  for (const auto& [m, c] : h.terms()) CHECK(m.total_degree() == 3);
  Expr g = random_polynomial(Domain::Plane, 2, 5, Rational(1, 10), rng);
  CHECK(g.total_degree() <= 2);
}

TEST_CASE("poincare-hopf") {
  PoincareHopfReport r = poincare_hopf_check(torus("(cos2px, sin2py)"), 6);
  CHECK(r.holds());
  CHECK(r.blocks.size() == 4);
  CHECK(poincare_hopf_check(torus("(1, 0)"), 5).blocks.empty());
  CHECK_THROWS_AS(poincare_hopf_check(plane("(x, y)"), 5), PreconditionError);
}

TEST_CASE("invariance of zero and dependency sets") {
  InvarianceOptions o;
  o.step = 1e-2;
  InvarianceReport z = invariance_test(plane("(x^2 - y^2, 2*x*y)"), euler_field(), kUnit, o);
  CHECK(z.passed);
  CHECK_FALSE(z.seeds.empty());
  CHECK(z.max_residual < 1e-6);
  o.target = InvarianceTarget::Dependency;
  InvarianceReport d = invariance_test(plane("((x^2 + y^2 - 1/4)*x, (x^2 + y^2 - 1/4)*y)"), rotation_field(), kUnit, o);
  CHECK(d.passed);
  CHECK_THROWS_AS(invariance_test(plane("(x, y)"), plane("(x - 1/2, y)"), kUnit, o), PreconditionError);
}

TEST_CASE("algebra suite") {
  AlgebraReport r = algebra_suite(20, 5);
  CHECK(r.euler_checked == 6);
  CHECK(r.multiple_checked == 20);
  CHECK(r.jacobi_checked == 20);
  CHECK(r.closure_checked == 20);
  CHECK_FALSE(r.falsified());
}

TEST_CASE("main theorem harness") {
  auto entries = parse_catalog(R"(
[entry]
name = zsq
x = (x^2 - y^2, 2*x*y)
tracker = (x, y)
region = -1, -1, 1, 1
[entry]
name = control
x = (x, y)
tracker = (x - 1/2, y)
region = -1, -1, 1, 1
[entry]
name = zero_tracker
x = (x, -y)
tracker = (0, 0)
region = -1, -1, 1, 1
)");
  MainTheoremReport a = main_theorem_check(entries[0], 8);
  CHECK(a.hypotheses);
  CHECK(a.conclusion);
  CHECK_FALSE(a.falsified());
  CHECK(a.essential.size() == 1);
  CHECK(a.trackers[0].witnesses.size() == 1);
  MainTheoremReport b = main_theorem_check(entries[1], 8);
  CHECK_FALSE(b.hypotheses);
  CHECK_FALSE(b.trackers[0].meets[0]);
  CHECK_FALSE(b.falsified());
  MainTheoremReport c = main_theorem_check(entries[2], 8);
  CHECK(c.trackers[0].meets[0]);
}
