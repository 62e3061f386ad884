#include "trackzero/error.hpp"
#include "trackzero/index/index.hpp"
#include "trackzero/symcore/trig.hpp"

#include "oracles.hpp"
#include "printers.hpp"

#include <doctest.h>

#include <complex>
#include <random>

using namespace tz;

namespace {

VectorField plane(const std::string& s) { return parse_field(s, Domain::Plane); }
VectorField torus(const std::string& s) { return parse_field(s, Domain::Torus); }
const Box kUnit = Box::from_corners(-1, -1, 1, 1);

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

// (Re, Im) of z^k or conj(z)^k as a field, expanded binomially.
VectorField power_field(unsigned k, bool conjugate) {
  Expr re, im;
  const Expr x = Expr::var(Var::X), y = Expr::var(Var::Y);
  long binom = 1;
  for (unsigned j = 0; j <= k; ++j) {
    // term C(k,j) x^(k-j) (i y)^j
    const Expr t = Expr(binom) * pow(x, k - j) * pow(y, j);
    switch (j % 4) {
      case 0: re += t; break;
      case 1: im += t; break;
      case 2: re -= t; break;
      case 3: im -= t; break;
    }
    binom = binom * long(k - j) / long(j + 1);
  }
  return VectorField(re, conjugate ? -im : im, Domain::Plane);
}

}  // namespace

TEST_CASE("box loop orientation and winding of simple fields") {
  BoundaryLoop loop = box_loop(Box::from_corners(q(-1, 2), q(-1, 2), q(1, 2), q(1, 2)));
  REQUIRE(loop.segments.size() == 4);
  CHECK(loop.segments[0].from == Point{q(-1, 2), q(-1, 2)});
  CHECK(loop.segments[0].to == Point{q(1, 2), q(-1, 2)});
  CHECK(winding_number(plane("(x, y)"), loop) == 1);
  CHECK(winding_number(plane("(-y, x)"), loop) == 1);
  CHECK(winding_number(plane("(x, -y)"), loop) == -1);
  CHECK(winding_number(plane("(x - 2, y)"), loop) == 0);
  CHECK(winding_number(plane("(1, 0)"), loop) == 0);
  LoopWinding w = winding_detail(plane("(x, y)"), loop);
  const Interval two_pi = Rational(2) * pi_enclosure();
  CHECK(w.total_angle.lo() <= two_pi.hi());
  CHECK(w.total_angle.hi() >= two_pi.lo());
  CHECK_FALSE(w.pieces.empty());
  CHECK_THROWS_AS(winding_number(plane("(x - 1/2, y)"), loop), CertificationError);
}

TEST_CASE("powers of z agree with the dense oracle") {
  for (unsigned k = 1; k <= 5; ++k)
    for (bool conj : {false, true}) {
      VectorField f = power_field(k, conj);
      IsolationResult iso = isolate_zeros(f, kUnit, 8);
      REQUIRE(iso.blocks.size() == 1);
      const int expected = conj ? -int(k) : int(k);
      CHECK(block_index(f, iso.blocks[0]).index == expected);
      const long dense = oracle::dense_winding(
          [&](double x, double y) {
            std::complex<double> z(x, y);
            return conj ? std::pow(std::conj(z), int(k)) : std::pow(z, int(k));
          },
          -0.5, -0.5, 0.5, 0.5);
      CHECK(dense == expected);
      CHECK(winding_number(f, box_loop(Box::from_corners(q(-1, 2), q(-1, 2), q(1, 2), q(1, 2)))) == dense);
    }
}

TEST_CASE("property: linear index is the sign of the determinant") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> k(-9, 9);
  int checked = 0;
  while (checked < 60) {
    long a = k(rng), b = k(rng), c = k(rng), d = k(rng);
    const long det = a * d - b * c;
    if (det == 0) continue;
    ++checked;
    VectorField f(Expr(a) * Expr::var(Var::X) + Expr(b) * Expr::var(Var::Y),
                  Expr(c) * Expr::var(Var::X) + Expr(d) * Expr::var(Var::Y), Domain::Plane);
    IsolationResult iso = isolate_zeros(f, kUnit, 6);
    REQUIRE(iso.blocks.size() == 1);
    IndexReport r = block_index(f, iso.blocks[0]);
    CHECK(r.index == (det > 0 ? 1 : -1));
    int sum = 0;
    for (const LoopWinding& w : r.loops) sum += w.winding;
    CHECK(sum == r.index);
  }
}

TEST_CASE("annular blocks sum outer and hole windings") {
  VectorField f = plane("((x^2 + y^2 - 1/4)*x, (x^2 + y^2 - 1/4)*y)");
  IsolationResult iso = isolate_zeros(f, kUnit, 7);
  REQUIRE(iso.blocks.size() == 2);
  int total = 0;
  for (std::size_t k = 0; k < iso.blocks.size(); ++k) {
    IndexReport r = block_index(f, iso.blocks[k], k);
    total += r.index;
    if (r.loops.size() == 2) {
      // Around the circle: field points outward outside and inward inside.
      CHECK(r.index == 0);
      CHECK(r.loops[0].winding + r.loops[1].winding == 0);
    } else {
      CHECK(r.index == 1);  // -Id near the origin
    }
  }
  CHECK(total == 1);
  CHECK(oracle::dense_winding([](double x, double y) {
          const double g = x * x + y * y - 0.25;
          return std::complex<double>(g * x, g * y);
        }, -1, -1, 1, 1) == total);
}

TEST_CASE("coarse blocks are refused") {
  VectorField f = plane("(x - 1, y)");
  IsolationResult iso = isolate_zeros(f, kUnit, 6);
  REQUIRE(iso.blocks.size() == 1);
  CHECK_THROWS_AS(block_index(f, iso.blocks[0]), CertificationError);
}

TEST_CASE("region index is additive over blocks") {
  for (const char* s : {"(x^2 - 1/4, y)", "(x^2 - 1/4, y^2 - 1/4)", "(x^3 - 3*x*y^2 - 1/4*x, 3*x^2*y - y^3 - 1/4*y)",
                        "(x^2 - y^2 - 1/4, 2*x*y)"}) {
    VectorField f = plane(s);
    RegionIndexReport r = region_index(f, kUnit, 8);
    CHECK(r.additive);
    CHECK(r.boundary_winding == r.index);
  }
  CHECK(region_index(plane("(x^2 - y^2 - 1/4, 2*x*y)"), kUnit, 8).index == 2);
  CHECK_THROWS_AS(region_index(plane("(x - 1, y)"), kUnit, 6), CertificationError);
  CHECK_THROWS_AS(region_index(torus("(sin2px, sin2py)"), torus_region(), 5), PreconditionError);
}

TEST_CASE("torus indices") {
  VectorField f = torus("(sin2px, sin2py)");
  IsolationResult iso = isolate_zeros(f, torus_region(), 6);
  REQUIRE(iso.blocks.size() == 4);
  int sum = 0, pos = 0;
  for (const ZeroBlock& blk : iso.blocks) {
    const int i = block_index(f, blk).index;
    sum += i;
    pos += i > 0;
  }
  CHECK(sum == 0);
  CHECK(pos == 2);
  VectorField band = torus("(sin2py, 0)");
  for (const ZeroBlock& blk : isolate_zeros(band, torus_region(), 5).blocks) CHECK(block_index(band, blk).index == 0);
}

TEST_CASE("index transfer") {
  VectorField x = plane("(x, y)");
  IsolationResult iso = isolate_zeros(x, kUnit, 6);
  const ZeroBlock& blk = iso.blocks[0];
  TransferReport a = index_transfer_check(x, plane("((1 + x^2)*x, (1 + x^2)*y)"), blk, TransferMode::NoNegativeRatio);
  CHECK(a.certified);
  CHECK(a.indices_agree);
  CHECK(a.index_x == a.index_y);
  TransferReport b = index_transfer_check(x, plane("(-x, -y)"), blk, TransferMode::NoPositiveRatio);
  CHECK(b.certified);
  CHECK(b.index_neg_y == b.index_x);
  CHECK(b.indices_agree);
  TransferReport c = index_transfer_check(x, plane("(x, -y)"), blk, TransferMode::NoNegativeRatio);
  CHECK_FALSE(c.certified);
  CHECK(c.inconclusive.has_value());
  CHECK(c.index_x != c.index_y);
  CHECK_THROWS_AS(index_transfer_check(x, plane("(x, 0)"), blk, TransferMode::NoNegativeRatio), PreconditionError);
}

TEST_CASE("scalar factor implication") {
  VectorField y = plane("((x^2 + y^2 - 1/4)*x, (x^2 + y^2 - 1/4)*y)");
  IsolationResult iso = isolate_zeros(y, kUnit, 7);
  for (const ZeroBlock& blk : iso.blocks) {
    ScalarFactorReport r = scalar_factor_index_check(y, parse_expr("x^2 + 2", Domain::Plane), blk);
    CHECK(r.index_x == r.index_y);
    CHECK(r.implication);
  }
  VectorField lin = plane("(x, y)");
  ZeroBlock blk = isolate_zeros(lin, kUnit, 6).blocks[0];
  ScalarFactorReport neg = scalar_factor_index_check(lin, Expr(-1), blk);
  CHECK(neg.index_x == 1);  // -Id has degree +1 in the plane
  CHECK_THROWS_AS(scalar_factor_index_check(lin, parse_expr("x", Domain::Plane), blk), PreconditionError);
}
