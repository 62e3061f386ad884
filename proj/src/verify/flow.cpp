#include "trackzero/verify/flow.hpp"

#include "trackzero/error.hpp"

#include <cmath>

namespace tz {

Trajectory flow_integrate(const VectorField& f, const Vec2& p0, double t1, double h,
                          const std::optional<FloatBox>& bounds) {
  if (!(h > 0.0)) throw Error("flow step must be positive");
  if (!(t1 >= 0.0)) throw Error("flow duration must be nonnegative");
  const bool torus = f.domain() == Domain::Torus;
  auto wrap = [torus](Vec2 p) {
    if (torus) {
      p[0] -= std::floor(p[0]);
      p[1] -= std::floor(p[1]);
    }
    return p;
  };
  const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil(t1 / h - 1e-12)));
  Trajectory tr;
  tr.step = t1 / static_cast<double>(steps);
  tr.times.reserve(steps + 1);
  tr.points.reserve(steps + 1);
  tr.times.push_back(0.0);
  tr.points.push_back(wrap(p0));
  if (t1 == 0.0) return tr;

  const double dt = tr.step;
  Vec2 p = p0;
  auto rhs = [&f](const Vec2& q) { return eval_double(f, q[0], q[1]); };
  for (std::size_t n = 1; n <= steps; ++n) {
    const Vec2 k1 = rhs(p);
    const Vec2 k2 = rhs({p[0] + 0.5 * dt * k1[0], p[1] + 0.5 * dt * k1[1]});
    const Vec2 k3 = rhs({p[0] + 0.5 * dt * k2[0], p[1] + 0.5 * dt * k2[1]});
    const Vec2 k4 = rhs({p[0] + dt * k3[0], p[1] + dt * k3[1]});
    p[0] += dt / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
    p[1] += dt / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
    p = wrap(p);
    if (bounds && !bounds->contains(p))
      throw Error("trajectory escaped the bounding region at t = " + std::to_string(dt * static_cast<double>(n)));
    tr.times.push_back(dt * static_cast<double>(n));
    tr.points.push_back(p);
  }
  return tr;
}

}  // namespace tz
