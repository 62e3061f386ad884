#ifndef TRACKZERO_ISOLATE_ISOLATE_HPP
#define TRACKZERO_ISOLATE_ISOLATE_HPP

#include "trackzero/vfield/vfield.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tz {

struct Cell {
  std::int64_t i = 0;
  std::int64_t j = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Uniform grid of 2^level cells per axis over a region. When wrapping (the full
// flat torus) cell and vertex indices are taken mod 2^level.
class GridFrame {
 public:
  GridFrame() = default;
  GridFrame(Box region, unsigned level, bool wrap);

  const Box& region() const { return region_; }
  unsigned level() const { return level_; }
  bool wraps() const { return wrap_; }
  std::int64_t cells_per_axis() const { return std::int64_t{1} << level_; }

  Rational cell_width() const;
  Rational cell_height() const;
  Box cell_box(Cell c) const;
  // Vertex (i, j) is the lower-left corner of cell (i, j); indices are not wrapped.
  Point vertex(std::int64_t i, std::int64_t j) const;
  Cell normalize(Cell c) const;
  bool inside(Cell c) const;

 private:
  Box region_;
  unsigned level_ = 0;
  bool wrap_ = false;
};

// Oriented straight segment.
struct Segment {
  Point from;
  Point to;
  Box hull() const { return Box::from_corners(from.x, from.y, to.x, to.y); }
  std::pair<Segment, Segment> split() const;
  std::string to_string() const;
};

enum class LoopKind { Outer, Hole, Wrapping };
std::string_view to_string(LoopKind k);

// Closed chain of segments with the enclosed region on the left.
struct BoundaryLoop {
  std::vector<Segment> segments;
  LoopKind kind = LoopKind::Outer;
};

// Connected union of grid cells covering one component of the zero set, plus a
// collar (halo) of certified-nonzero cells. The isolating neighborhood is the
// union of cells and halo.
struct ZeroBlock {
  GridFrame frame;
  std::vector<Cell> cells;  // sorted
  std::vector<Cell> halo;   // sorted, disjoint from cells
  bool coarse = false;
  std::string coarse_reason;

  unsigned resolution() const { return frame.level(); }
  std::vector<Box> boxes() const;
  std::vector<Cell> neighborhood() const;
  Box bounding_box() const;  // of the core cells, unwrapped indices
  bool overlaps(const ZeroBlock& other) const;  // share a core cell (same frame)

  // A single user-supplied box taken as its own isolating neighborhood.
  static ZeroBlock from_box(const Box& b);
};

// Boundary of the neighborhood, each loop with the neighborhood on its left.
std::vector<BoundaryLoop> boundary_loops(const ZeroBlock& blk);

struct IsolationResult {
  GridFrame frame;
  Domain domain = Domain::Plane;
  std::vector<ZeroBlock> blocks;
  std::vector<Box> certified_empty;
  std::vector<Cell> retained;  // sorted; union of all block cells
  bool coarse() const;
};

// True when the predicate cannot rule out a zero in the closed box.
using VanishTest = std::function<bool(const Box&)>;

// Quadtree subdivision of region down to max_depth. Boxes where the test fails are
// certified empty; the rest are grouped into blocks by closed-box contact
// (8-neighborhood), wrapping on the full torus.
IsolationResult isolate_with(const VanishTest& may_vanish, const Box& region, unsigned max_depth, Domain domain);

IsolationResult isolate_zeros(const VectorField& f, const Box& region, unsigned max_depth);
IsolationResult scalar_zero_blocks(const Expr& e, const Box& region, unsigned max_depth, Domain domain);

// Full period square for the torus.
Box torus_region();

struct IsolatingCertificate {
  bool ok = false;
  std::optional<Segment> offending;
  std::size_t segments_checked = 0;
};

// Certifies that f is nonzero on every boundary segment of the block's
// neighborhood, halving segments up to max_refine times.
IsolatingCertificate certify_isolating(const VectorField& f, const ZeroBlock& blk, unsigned max_refine = 16);

// Grows the collar to all cells within Chebyshev distance `layers` of the core,
// skipping retained cells. Cells outside the region are certified on the spot;
// failure marks the block coarse.
ZeroBlock dilate(const VanishTest& may_vanish, const IsolationResult& iso, const ZeroBlock& blk, unsigned layers);
ZeroBlock dilate(const VectorField& f, const IsolationResult& iso, const ZeroBlock& blk, unsigned layers);

VanishTest field_vanish_test(const VectorField& f);

}  // namespace tz

#endif
