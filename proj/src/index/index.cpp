#include "trackzero/error.hpp"
#include "trackzero/index/index.hpp"

namespace tz {

std::string_view to_string(TransferMode m) {
  return m == TransferMode::NoNegativeRatio ? "no-negative-ratio" : "no-positive-ratio";
}

IndexReport block_index(const VectorField& f, const ZeroBlock& blk, std::size_t block_id, const WindingOptions& opts) {
  if (blk.coarse) throw CertificationError("coarse block " + std::to_string(block_id) + ": " + blk.coarse_reason);
  IndexReport rep;
  rep.block_id = block_id;
  for (const BoundaryLoop& loop : boundary_loops(blk)) {
    rep.loops.push_back(winding_detail(f, loop, opts));
    rep.index += rep.loops.back().winding;
  }
  return rep;
}

RegionIndexReport region_index(const VectorField& f, const Box& region, unsigned max_depth,
                               const WindingOptions& opts) {
  RegionIndexReport rep;
  if (f.domain() == Domain::Torus)
    throw PreconditionError("region_index works on plane regions; use the Poincare-Hopf check on the torus");
  try {
    rep.boundary_winding = winding_number(f, box_loop(region), opts);
  } catch (const CertificationError& e) {
    throw CertificationError(std::string("region boundary not certifiable: ") + e.what());
  }
  rep.isolation = isolate_zeros(f, region, max_depth);
  if (rep.isolation.coarse()) throw CertificationError("coarse blocks present in region " + region.to_string());
  for (std::size_t k = 0; k < rep.isolation.blocks.size(); ++k) {
    rep.blocks.push_back(block_index(f, rep.isolation.blocks[k], k, opts));
    rep.index += rep.blocks.back().index;
  }
  rep.additive = rep.index == rep.boundary_winding;
  return rep;
}

namespace {

bool certify_pair(const Expr& w, const Expr& d, TransferMode mode, const Segment& s, unsigned refine,
                  TransferReport& rep) {
  ++rep.segments_checked;
  const Box hull = s.hull();
  if (interval_eval(w, hull).excludes_zero()) return true;
  const Interval dv = interval_eval(d, hull);
  if (mode == TransferMode::NoNegativeRatio ? dv.positive() : dv.negative()) return true;
  if (refine == 0) {
    rep.inconclusive = s;
    return false;
  }
  auto [a, b] = s.split();
  return certify_pair(w, d, mode, a, refine - 1, rep) && certify_pair(w, d, mode, b, refine - 1, rep);
}

void require_isolating(const VectorField& f, const ZeroBlock& blk, const char* which) {
  const IsolatingCertificate c = certify_isolating(f, blk);
  if (!c.ok)
    throw PreconditionError(std::string("block is not isolating for ") + which +
                            (c.offending ? ": zero not excluded on " + c.offending->to_string() : ""));
}

}  // namespace

TransferReport index_transfer_check(const VectorField& x, const VectorField& y, const ZeroBlock& blk,
                                    TransferMode mode, unsigned max_refine) {
  require_isolating(x, blk, "X");
  require_isolating(y, blk, "Y");
  TransferReport rep;
  rep.mode = mode;
  const Expr w = wedge(x, y);
  const Expr d = dot(x, y);
  rep.certified = true;
  for (const BoundaryLoop& loop : boundary_loops(blk)) {
    for (const Segment& s : loop.segments) {
      if (!certify_pair(w, d, mode, s, max_refine, rep)) {
        rep.certified = false;
        break;
      }
    }
    if (!rep.certified) break;
  }
  rep.index_x = block_index(x, blk).index;
  rep.index_y = block_index(y, blk).index;
  rep.index_neg_y = block_index(-y, blk).index;
  const int target = mode == TransferMode::NoNegativeRatio ? rep.index_y : rep.index_neg_y;
  rep.indices_agree = rep.index_x == target && rep.index_x == rep.index_y;
  return rep;
}

ScalarFactorReport scalar_factor_index_check(const VectorField& y, const Expr& g, const ZeroBlock& blk,
                                             unsigned max_refine) {
  const VectorField x = g * y;
  require_isolating(y, blk, "Y");
  require_isolating(x, blk, "X = g*Y");
  const VectorField g_field(g, Expr(0), y.domain());
  const IsolatingCertificate gc = certify_isolating(g_field, blk, max_refine);
  if (!gc.ok)
    throw CertificationError("g is not sign-certifiable on the block boundary" +
                             (gc.offending ? ": " + gc.offending->to_string() : std::string()));
  ScalarFactorReport rep;
  rep.index_y = block_index(y, blk).index;
  rep.index_x = block_index(x, blk).index;
  rep.premise = rep.index_y == 0;
  rep.implication = !rep.premise || rep.index_x == 0;
  return rep;
}

}  // namespace tz
