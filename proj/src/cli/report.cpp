#include "trackzero/cli/report.hpp"

namespace tz::report {

Json exact(const Rational& q) { return tz::to_string(q); }
Json exact(long k) { return std::to_string(k); }

Json to_json(const Interval& i) { return Json::array({exact(i.lo()), exact(i.hi())}); }

Json to_json(const Box& b) { return Json{{"x", to_json(b.x)}, {"y", to_json(b.y)}}; }

Json to_json(const Segment& s) {
  return Json{{"from", Json::array({exact(s.from.x), exact(s.from.y)})},
              {"to", Json::array({exact(s.to.x), exact(s.to.y)})}};
}

Json to_json(const Vec2& p) { return Json::array({p[0], p[1]}); }

namespace {

constexpr std::size_t kMaxListedBoxes = 256;

}  // namespace

Json to_json(const ZeroBlock& blk, std::size_t id) {
  Json j{{"id", id},
         {"cells", blk.cells.size()},
         {"halo_cells", blk.halo.size()},
         {"bounding_box", to_json(blk.bounding_box())},
         {"coarse", blk.coarse}};
  if (blk.cells.size() <= kMaxListedBoxes) {
    Json boxes = Json::array();
    for (const Box& b : blk.boxes()) boxes.push_back(to_json(b));
    j["boxes"] = std::move(boxes);
  }
  if (blk.coarse) j["coarse_reason"] = blk.coarse_reason;
  return j;
}

Json to_json(const IsolationResult& iso) {
  Json blocks = Json::array();
  for (std::size_t k = 0; k < iso.blocks.size(); ++k) blocks.push_back(to_json(iso.blocks[k], k));
  return Json{{"blocks", std::move(blocks)},
              {"certified_empty", iso.blocks.empty()},
              {"coarse", iso.coarse()},
              {"domain", std::string(tz::to_string(iso.domain))},
              {"resolution", iso.frame.level()},
              {"empty_boxes", iso.certified_empty.size()},
              {"retained_cells", iso.retained.size()}};
}

Json to_json(const LoopWinding& w) {
  return Json{{"kind", std::string(tz::to_string(w.kind))},
              {"winding", exact(long{w.winding})},
              {"total_angle", to_json(w.total_angle)},
              {"pieces", w.pieces.size()}};
}

Json to_json(const IndexReport& r) {
  Json loops = Json::array();
  for (const LoopWinding& w : r.loops) loops.push_back(to_json(w));
  return Json{{"id", r.block_id}, {"index", exact(long{r.index})}, {"method", r.method}, {"loops", std::move(loops)}};
}

Json to_json(const TrackReport& r) {
  Json j{{"status", std::string(tz::to_string(r.status))}};
  if (r.tracking()) {
    j["cofactor"] = r.cofactor_string();
    j["numerator"] = r.numerator.to_string();
    j["denominator"] = r.denominator.to_string();
  }
  j["bracket"] = r.bracket.to_string();
  j["wedge_residual"] = r.wedge_residual.to_string();
  if (!r.warning.empty()) j["warning"] = r.warning;
  return j;
}

Json to_json(const TransferReport& r) {
  Json j{{"mode", std::string(tz::to_string(r.mode))},
         {"certified", r.certified},
         {"segments_checked", r.segments_checked},
         {"index_x", exact(long{r.index_x})},
         {"index_y", exact(long{r.index_y})},
         {"index_neg_y", exact(long{r.index_neg_y})},
         {"indices_agree", r.indices_agree}};
  if (r.inconclusive) j["inconclusive"] = to_json(*r.inconclusive);
  return j;
}

Json to_json(const PoincareHopfReport& r) {
  Json blocks = Json::array();
  for (const IndexReport& b : r.blocks) blocks.push_back(to_json(b));
  return Json{{"sum", exact(long{r.sum})},
              {"euler_characteristic", exact(0L)},
              {"holds", r.holds()},
              {"blocks", std::move(blocks)},
              {"isolation", to_json(r.isolation)}};
}

Json to_json(const StabilityReport& r) {
  Json trials = Json::array();
  for (const StabilityTrial& t : r.trials)
    trials.push_back(Json{{"epsilon", exact(t.epsilon)}, {"index", exact(long{t.index})}});
  return Json{{"base_index", exact(long{r.base_index})},
              {"min_norm", exact(r.min_norm)},
              {"changed", r.changed},
              {"falsified", r.falsified()},
              {"trials", std::move(trials)}};
}

Json to_json(const InvarianceReport& r) {
  Json seeds = Json::array();
  for (const Vec2& p : r.seeds) seeds.push_back(to_json(p));
  return Json{{"target", r.target == InvarianceTarget::ZeroSet ? "zero_set" : "dependency"},
              {"status", std::string(tz::to_string(r.status))},
              {"seeds", std::move(seeds)},
              {"max_seed_residual", r.max_seed_residual},
              {"max_residual", r.max_residual},
              {"tol", r.tol},
              {"passed", r.passed}};
}

Json to_json(const MainTheoremReport& r) {
  Json indices = Json::array();
  for (const IndexReport& b : r.indices) indices.push_back(to_json(b));
  Json trackers = Json::array();
  for (const TrackerWitness& w : r.trackers) {
    Json wit = Json::array();
    for (const Box& b : w.witnesses) wit.push_back(to_json(b));
    trackers.push_back(Json{{"tracker", w.tracker},
                            {"track", to_json(w.track)},
                            {"hypothesis", w.hypothesis},
                            {"meets", w.meets},
                            {"witnesses", std::move(wit)}});
  }
  return Json{{"name", r.name},
              {"essential", r.essential},
              {"indices", std::move(indices)},
              {"trackers", std::move(trackers)},
              {"common_meets", r.common_meets},
              {"hypotheses", r.hypotheses},
              {"conclusion", r.conclusion},
              {"falsified", r.falsified()},
              {"isolation", to_json(r.isolation)}};
}

Json to_json(const RegionIndexReport& r) {
  Json blocks = Json::array();
  for (const IndexReport& b : r.blocks) blocks.push_back(to_json(b));
  return Json{{"index", exact(long{r.index})},
              {"boundary_winding", exact(long{r.boundary_winding})},
              {"additive", r.additive},
              {"blocks", std::move(blocks)},
              {"isolation", to_json(r.isolation)}};
}

Json to_json(const AlgebraReport& r) {
  auto law = [](std::size_t checked, std::size_t failed) { return Json{{"checked", checked}, {"failed", failed}}; };
  return Json{{"euler", law(r.euler_checked, r.euler_failed)},
              {"multiple", law(r.multiple_checked, r.multiple_failed)},
              {"jacobi", law(r.jacobi_checked, r.jacobi_failed)},
              {"closure", law(r.closure_checked, r.closure_falsified)},
              {"falsified", r.falsified()}};
}

Json to_json(const Trajectory& t) {
  Json pts = Json::array();
  for (std::size_t k = 0; k < t.points.size(); ++k)
    pts.push_back(Json::array({t.times[k], t.points[k][0], t.points[k][1]}));
  return Json{{"integrator", t.integrator}, {"step", t.step}, {"samples", std::move(pts)}};
}

}  // namespace tz::report
