#ifndef TRACKZERO_INDEX_INDEX_HPP
#define TRACKZERO_INDEX_INDEX_HPP

#include "trackzero/isolate/isolate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tz {

struct WindingOptions {
  // Halvings allowed per boundary segment before giving up.
  unsigned max_refine = 20;
};

// Certified angle variation of the field along one sub-segment whose field
// enclosure lies in an open half-plane.
struct SegmentAngle {
  Segment segment;
  Interval increment;
};

struct LoopWinding {
  LoopKind kind = LoopKind::Outer;
  int winding = 0;
  Interval total_angle;
  std::vector<SegmentAngle> pieces;
};

// Degree of the direction map of f along a closed loop. Each segment is refined
// until its field enclosure misses the origin (angle variation < pi); the signed
// increments are then summed with 128-bit outward-rounded atan bounds. Throws
// CertificationError when a segment cannot be certified ("zero too close to
// boundary").
LoopWinding winding_detail(const VectorField& f, const BoundaryLoop& loop, const WindingOptions& opts = {});
int winding_number(const VectorField& f, const BoundaryLoop& loop, const WindingOptions& opts = {});

// Counterclockwise boundary of a box.
BoundaryLoop box_loop(const Box& b);

struct IndexReport {
  std::size_t block_id = 0;
  int index = 0;
  std::vector<LoopWinding> loops;  // windings sum to index
  std::string method = "winding";
};

// Index of f in the block's neighborhood: the sum of windings over its boundary
// loops, each oriented with the neighborhood on its left (outer loops
// counterclockwise, holes clockwise).
IndexReport block_index(const VectorField& f, const ZeroBlock& blk, std::size_t block_id = 0,
                        const WindingOptions& opts = {});

struct RegionIndexReport {
  int index = 0;  // sum of block indices
  int boundary_winding = 0;
  bool additive = false;  // index == boundary_winding
  IsolationResult isolation;
  std::vector<IndexReport> blocks;
};

// Throws CertificationError when the region boundary cannot be certified or
// blocks are coarse.
RegionIndexReport region_index(const VectorField& f, const Box& region, unsigned max_depth,
                               const WindingOptions& opts = {});

enum class TransferMode {
  NoNegativeRatio,  // X != lambda Y for lambda < 0 on the boundary
  NoPositiveRatio,  // X != lambda Y for lambda > 0 on the boundary
};
std::string_view to_string(TransferMode m);

struct TransferReport {
  TransferMode mode = TransferMode::NoNegativeRatio;
  bool certified = false;
  std::optional<Segment> inconclusive;
  std::size_t segments_checked = 0;
  int index_x = 0;
  int index_y = 0;
  // Index of -Y; in the no-positive-ratio mode the straight deformation joins X to -Y.
  int index_neg_y = 0;
  // For a certified transfer, the deformation target's index equals index_x.
  bool indices_agree = false;
};

// Throws PreconditionError when the block is not isolating for both fields.
TransferReport index_transfer_check(const VectorField& x, const VectorField& y, const ZeroBlock& blk,
                                    TransferMode mode, unsigned max_refine = 16);

struct ScalarFactorReport {
  int index_y = 0;
  int index_x = 0;  // index of g*Y
  bool premise = false;      // index_y == 0
  bool implication = false;  // index_y == 0 implies index_x == 0
};

// X := g*Y. Throws PreconditionError when the block is not isolating for both
// fields and CertificationError when g cannot be shown nonzero on the boundary.
ScalarFactorReport scalar_factor_index_check(const VectorField& y, const Expr& g, const ZeroBlock& blk,
                                             unsigned max_refine = 16);

}  // namespace tz

#endif
