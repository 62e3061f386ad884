#ifndef TRACKZERO_CLI_REPORT_HPP
#define TRACKZERO_CLI_REPORT_HPP

#include "trackzero/verify/harness.hpp"

#include <json.hpp>

namespace tz::report {

// Keys keep insertion order so identical runs serialize identically.
using Json = nlohmann::ordered_json;

// Exact values are strings: "p/q" for rationals, "k" for integer indices.
Json exact(const Rational& q);
Json exact(long k);
Json to_json(const Interval& i);
Json to_json(const Box& b);
Json to_json(const Segment& s);
Json to_json(const Vec2& p);

Json to_json(const ZeroBlock& blk, std::size_t id);
// {blocks, certified_empty, coarse, resolution, retained_cells}
Json to_json(const IsolationResult& iso);
Json to_json(const LoopWinding& w);
Json to_json(const IndexReport& r);
Json to_json(const TrackReport& r);
Json to_json(const TransferReport& r);
Json to_json(const PoincareHopfReport& r);
Json to_json(const StabilityReport& r);
Json to_json(const InvarianceReport& r);
Json to_json(const MainTheoremReport& r);
Json to_json(const RegionIndexReport& r);
Json to_json(const AlgebraReport& r);
Json to_json(const Trajectory& t);

}  // namespace tz::report

#endif
