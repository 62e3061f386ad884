#ifndef TRACKZERO_VERIFY_FLOW_HPP
#define TRACKZERO_VERIFY_FLOW_HPP

#include "trackzero/vfield/vfield.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tz {

using Vec2 = std::array<double, 2>;

struct FloatBox {
  double x0, y0, x1, y1;
  bool contains(const Vec2& p) const { return p[0] >= x0 && p[0] <= x1 && p[1] >= y0 && p[1] <= y1; }
};

struct Trajectory {
  std::vector<double> times;  // strictly increasing, starting at 0
  std::vector<Vec2> points;
  double step = 0.0;
  std::string integrator = "rk4";
};

// Classical fixed-step RK4 on [0, t1]. The step is t1 / ceil(t1 / h) so the last
// sample lands on t1. Torus points are wrapped into [0, 1). Throws Error when a
// sample leaves `bounds`.
Trajectory flow_integrate(const VectorField& f, const Vec2& p0, double t1, double h,
                          const std::optional<FloatBox>& bounds = std::nullopt);

}  // namespace tz

#endif
