#include "trackzero/track/track.hpp"

#include "trackzero/error.hpp"

namespace tz {

std::string_view to_string(TrackStatus s) {
  switch (s) {
    case TrackStatus::PolyTracking: return "POLY_TRACKING";
    case TrackStatus::RationalTracking: return "RATIONAL_TRACKING";
    default: return "NOT_TRACKING";
  }
}

std::string TrackReport::cofactor_string() const {
  if (status == TrackStatus::NotTracking) return "";
  if (denominator == Expr(1)) return numerator.to_string();
  return "(" + numerator.to_string() + ")/(" + denominator.to_string() + ")";
}

namespace {

// f with b == f * x, tried on each nonzero component of x.
std::optional<Expr> polynomial_cofactor(const VectorField& b, const VectorField& x) {
  for (std::size_t i = 0; i < 2; ++i) {
    if (x[i].is_zero()) continue;
    auto f = divide_exact(b[i], x[i]);
    if (f && *f * x[1 - i] == b[1 - i]) return f;
  }
  return std::nullopt;
}

}  // namespace

TrackReport track_check(const VectorField& y, const VectorField& x) {
  if (x.is_zero()) throw PreconditionError("track_check needs X different from the zero field");
  TrackReport rep;
  rep.bracket = lie_bracket(y, x);
  rep.wedge_residual = wedge(rep.bracket, x);
  if (!rep.wedge_residual.is_zero()) {
    rep.status = TrackStatus::NotTracking;
    return rep;
  }
  if (auto f = polynomial_cofactor(rep.bracket, x)) {
    rep.status = TrackStatus::PolyTracking;
    rep.numerator = *f;
    return rep;
  }
  // wedge == 0 makes B^1/X^1 and B^2/X^2 the same rational function.
  const std::size_t i = x[0].is_zero() ? 1 : 0;
  const Expr g = gcd(rep.bracket[i], x[i]);
  Expr num = *divide_exact(rep.bracket[i], g);
  Expr den = *divide_exact(x[i], g);
  const Rational lc = leading_coefficient(den);
  num = num * Expr(1 / lc);
  den = den * Expr(1 / lc);
  if (den.is_constant()) {
    // Only reachable when division in the quotient trig ring beat the free ring.
    rep.status = TrackStatus::PolyTracking;
    rep.numerator = num * Expr(1 / den.constant_value());
    return rep;
  }
  rep.status = TrackStatus::RationalTracking;
  rep.numerator = num;
  rep.denominator = den;
  rep.warning = "cofactor is rational; continuity on the zero set of its denominator is not certified";
  return rep;
}

ClosureReport bracket_closure_track(const VectorField& y, const VectorField& z, const VectorField& x) {
  if (!track_check(y, x).tracking()) throw PreconditionError("Y does not track X");
  if (!track_check(z, x).tracking()) throw PreconditionError("Z does not track X");
  ClosureReport rep;
  rep.yz = track_check(lie_bracket(y, z), x);
  rep.falsified = !rep.yz.tracking();
  return rep;
}

DependencyReport dep_set(const VectorField& x, const VectorField& y, const Box& region, unsigned max_depth) {
  DependencyReport rep;
  rep.wedge = wedge(x, y);
  if (rep.wedge.is_zero()) {
    rep.identically_dependent = true;
    rep.isolation.domain = x.domain();
    rep.isolation.frame = GridFrame(region, 0, false);
    return rep;
  }
  rep.isolation = scalar_zero_blocks(rep.wedge, region, max_depth, x.domain());
  return rep;
}

IsolationResult common_zeros(const LieAlgebraSpec& spec, const Box& region, unsigned max_depth) {
  if (spec.generators.empty()) throw PreconditionError("Lie algebra '" + spec.name + "' has no generators");
  const Domain d = spec.generators.front().domain();
  for (const auto& g : spec.generators)
    if (g.domain() != d) throw DomainError("generators of '" + spec.name + "' live on different domains");
  std::vector<VanishTest> tests;
  for (const auto& g : spec.generators)
    if (!g.is_zero()) tests.push_back(field_vanish_test(g));
  if (tests.empty()) throw PreconditionError("all generators of '" + spec.name + "' are zero");
  return isolate_with(
      [tests](const Box& b) {
        for (const auto& t : tests)
          if (!t(b)) return false;
        return true;
      },
      region, max_depth, d);
}

IdealReport ideal_check(const VectorField& x, const LieAlgebraSpec& spec) {
  IdealReport rep;
  rep.tracks = true;
  for (const auto& y : spec.generators) {
    rep.per_generator.push_back(track_check(y, x));
    if (!rep.per_generator.back().tracking()) rep.tracks = false;
  }
  return rep;
}

namespace {

bool certify_nonzero(const Expr& e, const Box& b, unsigned depth) {
  if (interval_eval(e, b).excludes_zero()) return true;
  if (depth == 0) return false;
  for (const Box& q : b.quarter())
    if (!certify_nonzero(e, q, depth - 1)) return false;
  return true;
}

}  // namespace

bool denominator_nonvanishing(const TrackReport& rep, const Box& region, Domain, unsigned max_depth) {
  if (rep.status != TrackStatus::RationalTracking) return rep.tracking();
  return certify_nonzero(rep.denominator, region, max_depth);
}

}  // namespace tz
