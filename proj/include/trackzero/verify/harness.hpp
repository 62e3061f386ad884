#ifndef TRACKZERO_VERIFY_HARNESS_HPP
#define TRACKZERO_VERIFY_HARNESS_HPP

#include "trackzero/index/index.hpp"
#include "trackzero/track/track.hpp"
#include "trackzero/verify/catalog.hpp"
#include "trackzero/verify/flow.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace tz {

// ---- invariance of Z(X) and Dep(X, Y) under the Y-flow ----

enum class InvarianceTarget { ZeroSet, Dependency };

struct InvarianceOptions {
  InvarianceTarget target = InvarianceTarget::ZeroSet;
  double tol = 1e-6;
  double step = 1e-3;
  double horizon = 1.0;  // integrate over [-horizon, horizon]
  unsigned depth = 8;
  std::size_t max_seeds = 16;
};

struct InvarianceReport {
  InvarianceTarget target = InvarianceTarget::ZeroSet;
  TrackStatus status = TrackStatus::NotTracking;
  std::vector<Vec2> seeds;
  double max_seed_residual = 0.0;
  double max_residual = 0.0;
  double tol = 0.0;
  bool passed = false;
};

// Throws PreconditionError when Y does not track X, Error when a seed cannot be
// refined onto the target set or a trajectory escapes.
InvarianceReport invariance_test(const VectorField& x, const VectorField& y, const Box& region,
                                 const InvarianceOptions& opts = {});

// ---- index stability under certified perturbations ----

struct BoundaryBounds {
  Rational min_norm;  // certified lower bound of |X| on the boundary (max-component norm)
  Rational max_norm;  // certified upper bound of |X| on the boundary (l1 norm)
};

// Bounds over all boundary segments of the block; min_norm is refined until
// positive. Throws CertificationError when |X| cannot be bounded away from 0.
BoundaryBounds boundary_norm_bounds(const VectorField& f, const ZeroBlock& blk, unsigned max_refine = 16);

struct StabilityTrial {
  Rational epsilon;  // 0 when the perturbation vanishes identically
  int index = 0;
};

struct StabilityReport {
  int base_index = 0;
  Rational min_norm;
  std::vector<StabilityTrial> trials;
  std::size_t changed = 0;
  bool falsified() const { return changed != 0; }
};

// Random polynomial in the domain's generators with coefficients k * scale,
// |k| <= bound; only monomials of exactly max_degree when homogeneous.
Expr random_polynomial(Domain d, unsigned max_degree, long bound, const Rational& scale, std::mt19937_64& rng,
                       bool homogeneous = false);

// Random polynomial perturbation of total degree <= 3 with coefficients k/1000,
// |k| <= 1000, in the generators of the field's domain.
VectorField random_perturbation(Domain d, std::mt19937_64& rng);

// Index of X + eps P with eps = m / (2 s), m and s as in boundary_norm_bounds.
StabilityTrial stability_trial(const VectorField& x, const ZeroBlock& blk, const VectorField& p, const Rational& min_norm);
StabilityReport stability_test(const VectorField& x, const ZeroBlock& blk, std::size_t trials, std::uint64_t seed);

// ---- tracking algebra ----

struct AlgebraReport {
  std::size_t euler_checked = 0, euler_failed = 0;        // [E,X] = (k-1) X, X homogeneous of degree k
  std::size_t multiple_checked = 0, multiple_failed = 0;  // [pX, X] = -X(p) X
  std::size_t jacobi_checked = 0, jacobi_failed = 0;
  std::size_t closure_checked = 0, closure_falsified = 0;  // [Y,Z] tracks X when Y and Z do
  bool falsified() const { return euler_failed + multiple_failed + jacobi_failed + closure_falsified != 0; }
};

// Euler identity for k = 1..6 plus `trials` random instances of the other laws.
AlgebraReport algebra_suite(std::size_t trials, std::uint64_t seed);

// ---- Poincare-Hopf on the flat torus ----

struct PoincareHopfReport {
  IsolationResult isolation;
  std::vector<IndexReport> blocks;
  int sum = 0;
  bool holds() const { return sum == 0; }
};

PoincareHopfReport poincare_hopf_check(const VectorField& f, unsigned max_depth);

// ---- common-zero theorem harness ----

struct TrackerWitness {
  std::size_t tracker = 0;
  TrackReport track;
  bool hypothesis = false;          // tracks, with a certified-continuous cofactor on the region
  std::vector<bool> meets;          // per essential block
  std::vector<Box> witnesses;       // first shared cell per essential block that meets
};

struct MainTheoremReport {
  std::string name;
  IsolationResult isolation;
  std::vector<IndexReport> indices;
  std::vector<std::size_t> essential;  // block ids with index != 0
  std::vector<TrackerWitness> trackers;
  std::vector<bool> common_meets;      // common zeros of all trackers vs each essential block
  bool hypotheses = false;
  bool conclusion = false;
  bool falsified() const { return hypotheses && !conclusion; }
};

MainTheoremReport main_theorem_check(const CatalogEntry& entry, unsigned max_depth);

}  // namespace tz

#endif
