#ifndef TRACKZERO_TRACK_TRACK_HPP
#define TRACKZERO_TRACK_TRACK_HPP

#include "trackzero/isolate/isolate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tz {

enum class TrackStatus { PolyTracking, RationalTracking, NotTracking };
std::string_view to_string(TrackStatus s);

// Outcome of testing [Y,X] = f X.
struct TrackReport {
  TrackStatus status = TrackStatus::NotTracking;
  VectorField bracket;  // [Y,X]
  // f = numerator / denominator; denominator == 1 for PolyTracking.
  Expr numerator;
  Expr denominator{1};
  Expr wedge_residual;  // wedge([Y,X], X)
  std::string warning;

  bool tracking() const { return status != TrackStatus::NotTracking; }
  std::string cofactor_string() const;
};

// Throws PreconditionError when X is the zero field.
TrackReport track_check(const VectorField& y, const VectorField& x);

struct ClosureReport {
  TrackReport yz;  // track_check([Y,Z], X)
  bool falsified = false;  // both trackers track X but [Y,Z] does not
};

// Throws PreconditionError when Y or Z does not track X.
ClosureReport bracket_closure_track(const VectorField& y, const VectorField& z, const VectorField& x);

struct DependencyReport {
  Expr wedge;
  bool identically_dependent = false;  // wedge == 0: the whole region
  IsolationResult isolation;           // blocks of {wedge = 0}; empty when identically dependent
};

DependencyReport dep_set(const VectorField& x, const VectorField& y, const Box& region, unsigned max_depth);

struct LieAlgebraSpec {
  std::string name;
  std::vector<VectorField> generators;
};

// Blocks of the common zero set: a box is kept only while every generator's
// enclosure contains the origin.
IsolationResult common_zeros(const LieAlgebraSpec& spec, const Box& region, unsigned max_depth);

struct IdealReport {
  std::vector<TrackReport> per_generator;
  bool tracks = false;
};

IdealReport ideal_check(const VectorField& x, const LieAlgebraSpec& spec);

// Interval certificate that a rational cofactor's denominator has no zero in the
// region; subdivides up to max_depth.
bool denominator_nonvanishing(const TrackReport& rep, const Box& region, Domain domain, unsigned max_depth);

}  // namespace tz

#endif
