#include "trackzero/verify/harness.hpp"

#include "trackzero/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace tz {

// ---- invariance ----

namespace {

// Residual a refined seed must reach before it is flowed.
constexpr double kSeedTolerance = 1e-10;

double norm(const Vec2& v) { return std::hypot(v[0], v[1]); }

// Newton / Levenberg-Marquardt projection onto {X = 0}; handles rank-deficient
// Jacobians along curves of zeros.
Vec2 project_to_zeros(const VectorField& x, const JacobianMatrix& jac, Vec2 p) {
  for (int it = 0; it < 200; ++it) {
    const Vec2 f = eval_double(x, p[0], p[1]);
    if (norm(f) < 1e-15) break;
    const double a = eval_double(jac.entry[0][0], p[0], p[1]), b = eval_double(jac.entry[0][1], p[0], p[1]);
    const double c = eval_double(jac.entry[1][0], p[0], p[1]), d = eval_double(jac.entry[1][1], p[0], p[1]);
    // A = J J^T + mu I
    double a11 = a * a + b * b, a12 = a * c + b * d, a22 = c * c + d * d;
    const double mu = 1e-13 * (a11 + a22) + 1e-300;
    a11 += mu;
    a22 += mu;
    const double det = a11 * a22 - a12 * a12;
    if (det == 0.0 || !std::isfinite(det)) break;
    const double z1 = (a22 * f[0] - a12 * f[1]) / det;
    const double z2 = (-a12 * f[0] + a11 * f[1]) / det;
    p[0] -= a * z1 + c * z2;
    p[1] -= b * z1 + d * z2;
  }
  return p;
}

Vec2 project_to_curve(const Expr& w, const Expr& wx, const Expr& wy, Vec2 p) {
  for (int it = 0; it < 200; ++it) {
    const double v = eval_double(w, p[0], p[1]);
    if (std::abs(v) < 1e-15) break;
    const double gx = eval_double(wx, p[0], p[1]), gy = eval_double(wy, p[0], p[1]);
    const double g2 = gx * gx + gy * gy;
    if (g2 == 0.0) break;
    p[0] -= v * gx / g2;
    p[1] -= v * gy / g2;
  }
  return p;
}

std::vector<Cell> spread(const std::vector<Cell>& cells, std::size_t k) {
  if (cells.size() <= k) return cells;
  std::vector<Cell> out;
  for (std::size_t n = 0; n < k; ++n) out.push_back(cells[n * cells.size() / k]);
  return out;
}

}  // namespace

InvarianceReport invariance_test(const VectorField& x, const VectorField& y, const Box& region,
                                 const InvarianceOptions& opts) {
  InvarianceReport rep;
  rep.target = opts.target;
  rep.tol = opts.tol;
  const TrackReport tr = track_check(y, x);
  rep.status = tr.status;
  if (!tr.tracking()) throw PreconditionError("invariance_test refused: Y does not track X");

  const Expr w = wedge(x, y);
  auto residual = [&](const Vec2& p) {
    return opts.target == InvarianceTarget::ZeroSet ? norm(eval_double(x, p[0], p[1]))
                                                    : std::abs(eval_double(w, p[0], p[1]));
  };

  std::vector<Cell> cells;
  GridFrame frame;
  if (opts.target == InvarianceTarget::ZeroSet) {
    const IsolationResult iso = isolate_zeros(x, region, opts.depth);
    cells = iso.retained;
    frame = iso.frame;
  } else if (!w.is_zero()) {
    const IsolationResult iso = scalar_zero_blocks(w, region, opts.depth, x.domain());
    cells = iso.retained;
    frame = iso.frame;
  } else {
    // Identically dependent: every point is a seed.
    frame = GridFrame(region, 2, false);
    for (std::int64_t i = 0; i < 4; ++i)
      for (std::int64_t j = 0; j < 4; ++j) cells.push_back({i, j});
  }

  const JacobianMatrix jac = jacobian(x);
  const Expr wx = derive(w, Var::X), wy = derive(w, Var::Y);
  for (const Cell& c : spread(cells, opts.max_seeds)) {
    const Point ctr = frame.cell_box(c).center();
    Vec2 p{ctr.x.get_d(), ctr.y.get_d()};
    p = opts.target == InvarianceTarget::ZeroSet ? project_to_zeros(x, jac, p) : project_to_curve(w, wx, wy, p);
    const double r0 = residual(p);
    if (!(r0 < kSeedTolerance))
      throw Error("seed refinement failed near " + frame.cell_box(c).to_string() + " (residual " +
                  std::to_string(r0) + ")");
    rep.seeds.push_back(p);
    rep.max_seed_residual = std::max(rep.max_seed_residual, r0);
  }

  const double wx_span = region.x.width().get_d(), wy_span = region.y.width().get_d();
  const std::optional<FloatBox> bounds =
      x.domain() == Domain::Torus
          ? std::nullopt
          : std::optional<FloatBox>(FloatBox{region.x.lo().get_d() - wx_span, region.y.lo().get_d() - wy_span,
                                             region.x.hi().get_d() + wx_span, region.y.hi().get_d() + wy_span});
  const VectorField back = -y;
  for (const Vec2& s : rep.seeds) {
    for (const VectorField* g : {&y, &back}) {
      const Trajectory tr_flow = flow_integrate(*g, s, opts.horizon, opts.step, bounds);
      for (const Vec2& p : tr_flow.points) rep.max_residual = std::max(rep.max_residual, residual(p));
    }
  }
  rep.passed = rep.max_residual < opts.tol;
  return rep;
}

// ---- stability ----

namespace {

void lower_bound_segment(const VectorField& f, const Segment& s, unsigned refine, Rational& best) {
  const auto [a, b] = field_interval_eval(f, s.hull());
  const Rational lb = max(a.mig(), b.mig());
  if (sgn(lb) > 0) {
    if (lb < best || sgn(best) < 0) best = lb;
    return;
  }
  if (refine == 0) throw CertificationError("|X| not bounded away from zero on " + s.to_string());
  auto [p, q] = s.split();
  lower_bound_segment(f, p, refine - 1, best);
  lower_bound_segment(f, q, refine - 1, best);
}

Rational upper_bound(const VectorField& f, const ZeroBlock& blk) {
  Rational best = 0;
  for (const BoundaryLoop& loop : boundary_loops(blk))
    for (const Segment& s : loop.segments) {
      const auto [a, b] = field_interval_eval(f, s.hull());
      best = max(best, a.mag() + b.mag());
    }
  return best;
}

}  // namespace

BoundaryBounds boundary_norm_bounds(const VectorField& f, const ZeroBlock& blk, unsigned max_refine) {
  BoundaryBounds out;
  out.min_norm = -1;
  for (const BoundaryLoop& loop : boundary_loops(blk))
    for (const Segment& s : loop.segments) lower_bound_segment(f, s, max_refine, out.min_norm);
  if (sgn(out.min_norm) <= 0) throw CertificationError("block has no boundary to bound");
  out.max_norm = upper_bound(f, blk);
  return out;
}

Expr random_polynomial(Domain d, unsigned max_degree, long bound, const Rational& scale, std::mt19937_64& rng,
                       bool homogeneous) {
  std::uniform_int_distribution<long> coef(-bound, bound);
  const std::vector<Gen> gens =
      d == Domain::Plane ? std::vector<Gen>{Gen::X, Gen::Y} : std::vector<Gen>{Gen::SinX, Gen::CosX, Gen::SinY, Gen::CosY};
  // Monomials by degree, each level sorted so the draw order is fixed.
  std::vector<Monomial> monos{Monomial{}};
  std::vector<Monomial> level{Monomial{}};
  for (unsigned deg = 1; deg <= max_degree; ++deg) {
    std::vector<Monomial> next;
    for (const Monomial& m : level)
      for (Gen g : gens) {
        Monomial n = m;
        ++n[g];
        next.push_back(n);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (homogeneous) monos.clear();
    monos.insert(monos.end(), next.begin(), next.end());
    level = std::move(next);
  }
  Expr out;
  for (const Monomial& m : monos) out.add_term(m, coef(rng) * scale);
  return out;
}

VectorField random_perturbation(Domain d, std::mt19937_64& rng) {
  Expr a = random_polynomial(d, 3, 1000, Rational(1, 1000), rng);
  Expr b = random_polynomial(d, 3, 1000, Rational(1, 1000), rng);
  return VectorField(a, b, d);
}

AlgebraReport algebra_suite(std::size_t trials, std::uint64_t seed) {
  AlgebraReport rep;
  std::mt19937_64 rng(seed);
  const Domain P = Domain::Plane;
  const VectorField e = euler_field();
  auto random_field = [&](unsigned deg, bool homogeneous) {
    Expr a = random_polynomial(P, deg, 5, 1, rng, homogeneous);
    Expr b = random_polynomial(P, deg, 5, 1, rng, homogeneous);
    return VectorField(a, b, P);
  };
  for (unsigned k = 1; k <= 6; ++k) {
    VectorField x = random_field(k, true);
    if (x.is_zero()) x = VectorField(pow(Expr::var(Var::X), k), Expr(0), P);
    ++rep.euler_checked;
    if (!(lie_bracket(e, x) == Expr(long(k) - 1) * x)) ++rep.euler_failed;
  }
  for (std::size_t t = 0; t < trials; ++t) {
    VectorField x = random_field(1 + t % 3, false);
    if (x.is_zero()) x = e;
    const Expr p = random_polynomial(P, 2, 5, 1, rng);
    ++rep.multiple_checked;
    if (!(lie_bracket(p * x, x) == (-apply(x, p)) * x)) ++rep.multiple_failed;

    const VectorField a = random_field(3, false), b = random_field(3, false), c = random_field(3, false);
    ++rep.jacobi_checked;
    const VectorField j = lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) +
                          lie_bracket(c, lie_bracket(a, b));
    if (!j.is_zero()) ++rep.jacobi_failed;

    // Trackers of a homogeneous field: combinations of E and multiples of X.
    VectorField h = random_field(1 + t % 3, true);
    if (h.is_zero()) h = e;
    std::uniform_int_distribution<long> small(-3, 3);
    VectorField y, z;
    while (y.is_zero() || z.is_zero()) {
      y = random_polynomial(P, 1 + t % 2, 3, 1, rng) * h + Expr(small(rng)) * e;
      z = random_polynomial(P, 1, 3, 1, rng) * h + Expr(small(rng)) * e;
    }
    const ClosureReport cl = bracket_closure_track(y, z, h);
    ++rep.closure_checked;
    if (cl.falsified) ++rep.closure_falsified;
  }
  return rep;
}

StabilityTrial stability_trial(const VectorField& x, const ZeroBlock& blk, const VectorField& p, const Rational& min_norm) {
  StabilityTrial t;
  const Rational s = upper_bound(p, blk);
  if (sgn(s) == 0) {
    t.epsilon = 0;
    t.index = block_index(x, blk).index;
    return t;
  }
  t.epsilon = min_norm / (2 * s);
  t.index = block_index(x + t.epsilon * p, blk).index;
  return t;
}

StabilityReport stability_test(const VectorField& x, const ZeroBlock& blk, std::size_t trials, std::uint64_t seed) {
  StabilityReport rep;
  rep.base_index = block_index(x, blk).index;
  rep.min_norm = boundary_norm_bounds(x, blk).min_norm;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < trials; ++k) {
    const VectorField p = random_perturbation(x.domain(), rng);
    rep.trials.push_back(stability_trial(x, blk, p, rep.min_norm));
    if (rep.trials.back().index != rep.base_index) ++rep.changed;
  }
  return rep;
}

// ---- Poincare-Hopf ----

PoincareHopfReport poincare_hopf_check(const VectorField& f, unsigned max_depth) {
  if (f.domain() != Domain::Torus) throw PreconditionError("poincare_hopf_check needs a torus field");
  PoincareHopfReport rep;
  rep.isolation = isolate_zeros(f, torus_region(), max_depth);
  if (rep.isolation.coarse()) throw CertificationError("coarse blocks on the torus");
  for (std::size_t k = 0; k < rep.isolation.blocks.size(); ++k) {
    rep.blocks.push_back(block_index(f, rep.isolation.blocks[k], k));
    rep.sum += rep.blocks.back().index;
  }
  return rep;
}

// ---- common zeros of trackers ----

namespace {

std::optional<Cell> shared_cell(const std::vector<Cell>& sorted_cells, const ZeroBlock& blk) {
  for (const Cell& c : blk.cells)
    if (std::binary_search(sorted_cells.begin(), sorted_cells.end(), c)) return c;
  return std::nullopt;
}

}  // namespace

MainTheoremReport main_theorem_check(const CatalogEntry& entry, unsigned max_depth) {
  MainTheoremReport rep;
  rep.name = entry.name;
  rep.isolation = isolate_zeros(entry.x, entry.region, max_depth);
  if (rep.isolation.coarse()) throw CertificationError("coarse X-blocks in entry '" + entry.name + "'");
  for (std::size_t k = 0; k < rep.isolation.blocks.size(); ++k) {
    rep.indices.push_back(block_index(entry.x, rep.isolation.blocks[k], k));
    if (rep.indices.back().index != 0) rep.essential.push_back(k);
  }

  rep.hypotheses = !entry.trackers.empty() && !rep.essential.empty();
  bool conclusion = true;
  for (std::size_t t = 0; t < entry.trackers.size(); ++t) {
    const VectorField& y = entry.trackers[t];
    TrackerWitness w;
    w.tracker = t;
    w.track = track_check(y, entry.x);
    w.hypothesis = w.track.tracking() && denominator_nonvanishing(w.track, entry.region, entry.domain, 8);
    rep.hypotheses = rep.hypotheses && w.hypothesis;
    std::vector<Cell> zy;
    if (!y.is_zero()) zy = isolate_with(field_vanish_test(y), entry.region, max_depth, entry.domain).retained;
    for (std::size_t k : rep.essential) {
      const ZeroBlock& blk = rep.isolation.blocks[k];
      const auto hit = y.is_zero() ? std::optional<Cell>(blk.cells.front()) : shared_cell(zy, blk);
      w.meets.push_back(hit.has_value());
      if (hit) w.witnesses.push_back(blk.frame.cell_box(*hit));
      conclusion = conclusion && hit.has_value();
    }
    rep.trackers.push_back(std::move(w));
  }

  if (!entry.trackers.empty()) {
    // Zero trackers vanish everywhere and do not constrain the common zero set.
    LieAlgebraSpec spec{entry.name, {}};
    for (const VectorField& y : entry.trackers)
      if (!y.is_zero()) spec.generators.push_back(y);
    std::vector<Cell> common;
    if (!spec.generators.empty()) common = common_zeros(spec, entry.region, max_depth).retained;
    for (std::size_t k : rep.essential) {
      const bool hit = spec.generators.empty() || shared_cell(common, rep.isolation.blocks[k]).has_value();
      rep.common_meets.push_back(hit);
      conclusion = conclusion && hit;
    }
  }
  rep.conclusion = conclusion && !rep.essential.empty();
  return rep;
}

}  // namespace tz
