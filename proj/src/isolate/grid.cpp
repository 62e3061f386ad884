#include "trackzero/error.hpp"
#include "trackzero/isolate/isolate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tz {

GridFrame::GridFrame(Box region, unsigned level, bool wrap) : region_(std::move(region)), level_(level), wrap_(wrap) {
  if (!region_.has_interior()) throw Error("grid region must have nonempty interior: " + region_.to_string());
  if (level_ > 40) throw Error("grid level too deep");
}

Rational GridFrame::cell_width() const { return region_.x.width() / Rational(Integer(cells_per_axis())); }

Rational GridFrame::cell_height() const { return region_.y.width() / Rational(Integer(cells_per_axis())); }

Point GridFrame::vertex(std::int64_t i, std::int64_t j) const {
  return {region_.x.lo() + cell_width() * Rational(Integer(static_cast<long>(i))),
          region_.y.lo() + cell_height() * Rational(Integer(static_cast<long>(j)))};
}

Box GridFrame::cell_box(Cell c) const {
  const Point a = vertex(c.i, c.j);
  const Point b = vertex(c.i + 1, c.j + 1);
  return {Interval(a.x, b.x), Interval(a.y, b.y)};
}

Cell GridFrame::normalize(Cell c) const {
  if (!wrap_) return c;
  const std::int64_t n = cells_per_axis();
  return {((c.i % n) + n) % n, ((c.j % n) + n) % n};
}

bool GridFrame::inside(Cell c) const {
  if (wrap_) return true;
  const std::int64_t n = cells_per_axis();
  return c.i >= 0 && c.j >= 0 && c.i < n && c.j < n;
}

std::pair<Segment, Segment> Segment::split() const {
  const Point mid{(from.x + to.x) / 2, (from.y + to.y) / 2};
  return {Segment{from, mid}, Segment{mid, to}};
}

std::string Segment::to_string() const {
  return "(" + tz::to_string(from.x) + "," + tz::to_string(from.y) + ")->(" + tz::to_string(to.x) + "," +
         tz::to_string(to.y) + ")";
}

std::string_view to_string(LoopKind k) {
  switch (k) {
    case LoopKind::Outer: return "outer";
    case LoopKind::Hole: return "hole";
    default: return "wrapping";
  }
}

std::vector<Box> ZeroBlock::boxes() const {
  std::vector<Box> out;
  out.reserve(cells.size());
  for (const auto& c : cells) out.push_back(frame.cell_box(c));
  return out;
}

std::vector<Cell> ZeroBlock::neighborhood() const {
  std::vector<Cell> all;
  all.reserve(cells.size() + halo.size());
  std::merge(cells.begin(), cells.end(), halo.begin(), halo.end(), std::back_inserter(all));
  return all;
}

Box ZeroBlock::bounding_box() const {
  if (cells.empty()) return frame.region();
  std::int64_t i0 = cells.front().i, i1 = i0, j0 = cells.front().j, j1 = j0;
  for (const auto& c : cells) {
    i0 = std::min(i0, c.i);
    i1 = std::max(i1, c.i);
    j0 = std::min(j0, c.j);
    j1 = std::max(j1, c.j);
  }
  const Point a = frame.vertex(i0, j0), b = frame.vertex(i1 + 1, j1 + 1);
  return Box::from_corners(a.x, a.y, b.x, b.y);
}

bool ZeroBlock::overlaps(const ZeroBlock& other) const {
  auto a = cells.begin(), b = other.cells.begin();
  while (a != cells.end() && b != other.cells.end()) {
    if (*a == *b) return true;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return false;
}

ZeroBlock ZeroBlock::from_box(const Box& b) {
  ZeroBlock blk;
  blk.frame = GridFrame(b, 0, false);
  blk.cells = {Cell{0, 0}};
  return blk;
}

namespace {

struct Edge {
  std::int64_t fi, fj, ti, tj;  // unwrapped vertex indices
  int dir;                      // 0 bottom (+x), 1 right (+y), 2 top (-x), 3 left (-y)
};

}  // namespace

std::vector<BoundaryLoop> boundary_loops(const ZeroBlock& blk) {
  const GridFrame& fr = blk.frame;
  const std::vector<Cell> hood = blk.neighborhood();
  const std::set<Cell> members(hood.begin(), hood.end());
  const std::int64_t n = fr.cells_per_axis();
  auto wrap_index = [&](std::int64_t v) { return fr.wraps() ? ((v % n) + n) % n : v; };

  std::vector<Edge> edges;
  for (const Cell& c : hood) {
    const std::int64_t i = c.i, j = c.j;
    if (!members.count(fr.normalize({i, j - 1}))) edges.push_back({i, j, i + 1, j, 0});
    if (!members.count(fr.normalize({i + 1, j}))) edges.push_back({i + 1, j, i + 1, j + 1, 1});
    if (!members.count(fr.normalize({i, j + 1}))) edges.push_back({i + 1, j + 1, i, j + 1, 2});
    if (!members.count(fr.normalize({i - 1, j}))) edges.push_back({i, j + 1, i, j, 3});
  }

  using Key = std::pair<std::int64_t, std::int64_t>;
  std::map<Key, std::vector<std::size_t>> outgoing;
  for (std::size_t k = 0; k < edges.size(); ++k)
    outgoing[{wrap_index(edges[k].fi), wrap_index(edges[k].fj)}].push_back(k);

  std::vector<bool> used(edges.size(), false);
  std::vector<BoundaryLoop> loops;
  for (std::size_t start = 0; start < edges.size(); ++start) {
    if (used[start]) continue;
    BoundaryLoop loop;
    std::vector<std::size_t> chain;
    const Key start_key{wrap_index(edges[start].fi), wrap_index(edges[start].fj)};
    std::size_t cur = start;
    for (;;) {
      used[cur] = true;
      chain.push_back(cur);
      const Key end_key{wrap_index(edges[cur].ti), wrap_index(edges[cur].tj)};
      if (end_key == start_key) break;
      // Prefer a left turn, then straight, then right, so pinched corners split.
      std::size_t next = edges.size();
      int best_rank = 4;
      for (std::size_t cand : outgoing[end_key]) {
        if (used[cand]) continue;
        const int turn = (edges[cand].dir - edges[cur].dir + 4) % 4;  // 1 left, 0 straight, 3 right
        const int rank = turn == 1 ? 0 : turn == 0 ? 1 : 2;
        if (rank < best_rank) {
          best_rank = rank;
          next = cand;
        }
      }
      if (next == edges.size()) throw Error("open boundary chain while tracing block boundary");
      cur = next;
    }
    // Shoelace on the lifted (universal cover) path, in cell units.
    std::int64_t area2 = 0;
    std::int64_t px = edges[chain.front()].fi, py = edges[chain.front()].fj;
    const std::int64_t sx = px, sy = py;
    for (std::size_t k : chain) {
      const Edge& e = edges[k];
      loop.segments.push_back(Segment{fr.vertex(e.fi, e.fj), fr.vertex(e.ti, e.tj)});
      const std::int64_t qx = px + (e.ti - e.fi), qy = py + (e.tj - e.fj);
      area2 += px * qy - qx * py;
      px = qx;
      py = qy;
    }
    if (px != sx || py != sy)
      loop.kind = LoopKind::Wrapping;
    else
      loop.kind = area2 > 0 ? LoopKind::Outer : LoopKind::Hole;
    loops.push_back(std::move(loop));
  }
  return loops;
}

}  // namespace tz
