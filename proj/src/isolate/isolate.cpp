#include "trackzero/error.hpp"
#include "trackzero/isolate/isolate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace tz {

namespace {

// Extra quadtree levels used to certify a collar cell outside the region.
constexpr unsigned kCollarCertifyDepth = 6;

bool certify_box_empty(const VanishTest& may_vanish, const Box& b, unsigned depth) {
  if (!may_vanish(b)) return true;
  if (depth == 0) return false;
  for (const Box& q : b.quarter())
    if (!certify_box_empty(may_vanish, q, depth - 1)) return false;
  return true;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

bool is_full_torus(const Box& region) {
  return region.x.lo() == 0 && region.x.hi() == 1 && region.y.lo() == 0 && region.y.hi() == 1;
}

// Collar cells at Chebyshev distance <= layers from the core, minus retained cells.
void build_halo(const VanishTest& may_vanish, const std::set<Cell>& retained, ZeroBlock& blk, unsigned layers) {
  const GridFrame& fr = blk.frame;
  std::set<Cell> halo;
  const auto r = static_cast<std::int64_t>(layers);
  for (const Cell& c : blk.cells) {
    for (std::int64_t di = -r; di <= r; ++di) {
      for (std::int64_t dj = -r; dj <= r; ++dj) {
        const Cell n = fr.normalize({c.i + di, c.j + dj});
        if (retained.count(n)) continue;
        halo.insert(n);
      }
    }
  }
  blk.halo.assign(halo.begin(), halo.end());
  for (const Cell& h : blk.halo) {
    if (fr.inside(h)) continue;
    if (!certify_box_empty(may_vanish, fr.cell_box(h), kCollarCertifyDepth)) {
      blk.coarse = true;
      blk.coarse_reason = "collar cell " + fr.cell_box(h).to_string() + " outside the region is not certified nonzero";
      return;
    }
  }
}

}  // namespace

bool IsolationResult::coarse() const {
  return std::any_of(blocks.begin(), blocks.end(), [](const ZeroBlock& b) { return b.coarse; });
}

Box torus_region() { return Box::from_corners(0, 0, 1, 1); }

namespace {

// v rounded to a multiple of 2^-shift.
Rational dyadic(double v, int shift) {
  Rational r(static_cast<long>(std::llround(std::ldexp(v, shift))));
  if (shift >= 0)
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(shift));
  else
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-shift));
  return r;
}

// Mean-value form of M f over b, with M an approximate inverse of the Jacobian
// at the center. Any M is sound: a nonvanishing component of M f rules out a
// zero of f. Catches boxes that meet both component zero sets but not their
// intersection.
bool preconditioned_excludes(const VectorField& f, const JacobianMatrix& jac, const Box& b) {
  std::array<std::array<Interval, 2>, 2> jb;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) jb[i][j] = interval_eval(jac.entry[i][j], b);
  const double a = jb[0][0].mid().get_d(), bb = jb[0][1].mid().get_d();
  const double c = jb[1][0].mid().get_d(), d = jb[1][1].mid().get_d();
  const double det = a * d - bb * c;
  if (det == 0.0 || !std::isfinite(det)) return false;
  const double inv[2][2] = {{d / det, -bb / det}, {-c / det, a / det}};
  double big = 0.0;
  for (const auto& row : inv)
    for (double v : row) big = std::max(big, std::abs(v));
  if (!std::isfinite(big) || big == 0.0) return false;
  int e = 0;
  std::frexp(big, &e);
  const int shift = std::clamp(24 - e, -60, 60);
  Rational m[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m[i][j] = dyadic(inv[i][j], shift);

  const Point ctr = b.center();
  const Box cb = Box::of_point(ctr);
  const Interval fc[2] = {interval_eval(f.cx(), cb), interval_eval(f.cy(), cb)};
  const Interval dx(b.x.lo() - ctr.x, b.x.hi() - ctr.x), dy(b.y.lo() - ctr.y, b.y.hi() - ctr.y);
  for (int i = 0; i < 2; ++i) {
    const Interval gx = m[i][0] * jb[0][0] + m[i][1] * jb[1][0];
    const Interval gy = m[i][0] * jb[0][1] + m[i][1] * jb[1][1];
    const Interval g = m[i][0] * fc[0] + m[i][1] * fc[1] + gx * dx + gy * dy;
    if (g.excludes_zero()) return true;
  }
  return false;
}

}  // namespace

VanishTest field_vanish_test(const VectorField& f) {
  return [f, jac = jacobian(f)](const Box& b) {
    if (interval_eval(f.cx(), b).excludes_zero()) return false;
    if (interval_eval(f.cy(), b).excludes_zero()) return false;
    return !preconditioned_excludes(f, jac, b);
  };
}

IsolationResult isolate_with(const VanishTest& may_vanish, const Box& region, unsigned max_depth, Domain domain) {
  if (max_depth < 1) throw Error("max_depth must be at least 1");
  if (!region.has_interior()) throw Error("region must have nonempty interior");
  const bool wrap = domain == Domain::Torus && is_full_torus(region);
  if (domain == Domain::Torus && !wrap && (region.x.width() >= 1 || region.y.width() >= 1))
    throw Error("a torus region must be the full period square or narrower than one period");

  IsolationResult out;
  out.domain = domain;
  out.frame = GridFrame(region, max_depth, wrap);

  struct Node {
    unsigned level;
    std::int64_t i, j;
  };
  std::vector<Node> stack{{0, 0, 0}};
  while (!stack.empty()) {
    const Node nd = stack.back();
    stack.pop_back();
    const GridFrame level_frame(region, nd.level, false);
    const Box b = level_frame.cell_box({nd.i, nd.j});
    if (!may_vanish(b)) {
      out.certified_empty.push_back(b);
    } else if (nd.level == max_depth) {
      out.retained.push_back({nd.i, nd.j});
    } else {
      // Reverse push so children pop in (lo,lo), (hi,lo), (lo,hi), (hi,hi) order.
      const std::int64_t i2 = 2 * nd.i, j2 = 2 * nd.j;
      stack.push_back({nd.level + 1, i2 + 1, j2 + 1});
      stack.push_back({nd.level + 1, i2, j2 + 1});
      stack.push_back({nd.level + 1, i2 + 1, j2});
      stack.push_back({nd.level + 1, i2, j2});
    }
  }
  std::sort(out.retained.begin(), out.retained.end());

  UnionFind uf(out.retained.size());
  auto index_of = [&](Cell c) -> std::optional<std::size_t> {
    auto it = std::lower_bound(out.retained.begin(), out.retained.end(), c);
    if (it == out.retained.end() || *it != c) return std::nullopt;
    return static_cast<std::size_t>(it - out.retained.begin());
  };
  for (std::size_t k = 0; k < out.retained.size(); ++k) {
    const Cell c = out.retained[k];
    for (std::int64_t di = -1; di <= 1; ++di)
      for (std::int64_t dj = -1; dj <= 1; ++dj) {
        if (di == 0 && dj == 0) continue;
        if (auto other = index_of(out.frame.normalize({c.i + di, c.j + dj}))) uf.unite(k, *other);
      }
  }

  std::vector<std::size_t> root_to_block(out.retained.size(), SIZE_MAX);
  for (std::size_t k = 0; k < out.retained.size(); ++k) {
    const std::size_t root = uf.find(k);
    if (root_to_block[root] == SIZE_MAX) {
      root_to_block[root] = out.blocks.size();
      out.blocks.emplace_back();
      out.blocks.back().frame = out.frame;
    }
    out.blocks[root_to_block[root]].cells.push_back(out.retained[k]);
  }

  const std::set<Cell> retained(out.retained.begin(), out.retained.end());
  for (ZeroBlock& blk : out.blocks) build_halo(may_vanish, retained, blk, 1);
  return out;
}

IsolationResult isolate_zeros(const VectorField& f, const Box& region, unsigned max_depth) {
  if (f.is_zero()) throw PreconditionError("isolate_zeros needs a field that is not identically zero");
  return isolate_with(field_vanish_test(f), region, max_depth, f.domain());
}

IsolationResult scalar_zero_blocks(const Expr& e, const Box& region, unsigned max_depth, Domain domain) {
  if (e.is_zero()) throw PreconditionError("scalar_zero_blocks needs an expression that is not identically zero");
  return isolate_with([e](const Box& b) { return interval_eval(e, b).contains_zero(); }, region, max_depth, domain);
}

namespace {

bool certify_segment(const VectorField& f, const Segment& s, unsigned refine, IsolatingCertificate& cert) {
  ++cert.segments_checked;
  const auto [ix, iy] = field_interval_eval(f, s.hull());
  if (ix.excludes_zero() || iy.excludes_zero()) return true;
  if (refine == 0) {
    cert.offending = s;
    return false;
  }
  auto [a, b] = s.split();
  return certify_segment(f, a, refine - 1, cert) && certify_segment(f, b, refine - 1, cert);
}

}  // namespace

IsolatingCertificate certify_isolating(const VectorField& f, const ZeroBlock& blk, unsigned max_refine) {
  IsolatingCertificate cert;
  for (const BoundaryLoop& loop : boundary_loops(blk)) {
    for (const Segment& s : loop.segments) {
      if (!certify_segment(f, s, max_refine, cert)) return cert;
    }
  }
  cert.ok = true;
  return cert;
}

ZeroBlock dilate(const VanishTest& may_vanish, const IsolationResult& iso, const ZeroBlock& blk, unsigned layers) {
  ZeroBlock out = blk;
  out.coarse = false;
  out.coarse_reason.clear();
  const std::set<Cell> retained(iso.retained.begin(), iso.retained.end());
  build_halo(may_vanish, retained, out, layers);
  return out;
}

ZeroBlock dilate(const VectorField& f, const IsolationResult& iso, const ZeroBlock& blk, unsigned layers) {
  return dilate(field_vanish_test(f), iso, blk, layers);
}

}  // namespace tz
