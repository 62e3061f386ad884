// Independent reference computations used only by the tests. Nothing here calls
// into the library's arithmetic.
#ifndef TRACKZERO_TESTS_ORACLES_HPP
#define TRACKZERO_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <utility>

namespace oracle {

using Planar = std::function<std::complex<double>(double, double)>;

// Winding of f around the rectangle [x0,x1] x [y0,y1] from `samples` boundary
// points, summing principal atan2 differences.
inline long dense_winding(const Planar& f, double x0, double y0, double x1, double y1, long samples = 100000) {
  auto at = [&](double s) {  // s in [0, 4): counterclockwise perimeter parameter
    if (s < 1) return f(x0 + s * (x1 - x0), y0);
    if (s < 2) return f(x1, y0 + (s - 1) * (y1 - y0));
    if (s < 3) return f(x1 - (s - 2) * (x1 - x0), y1);
    return f(x0, y1 - (s - 3) * (y1 - y0));
  };
  double total = 0.0;
  std::complex<double> prev = at(0.0);
  for (long k = 1; k <= samples; ++k) {
    const std::complex<double> cur = at(4.0 * double(k) / double(samples));
    total += std::arg(cur / prev);
    prev = cur;
  }
  return std::lround(total / (2 * std::numbers::pi));
}

// Dense integer polynomial in x, y: exponent pair -> coefficient.
using Poly = std::map<std::pair<int, int>, long long>;

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  return out;
}

inline Poly add(Poly a, const Poly& b, long long sb = 1) {
  for (const auto& [e, c] : b) a[e] += sb * c;
  return a;
}

inline Poly dx(const Poly& p) {
  Poly out;
  for (const auto& [e, c] : p)
    if (e.first > 0) out[{e.first - 1, e.second}] += c * e.first;
  return out;
}

inline Poly dy(const Poly& p) {
  Poly out;
  for (const auto& [e, c] : p)
    if (e.second > 0) out[{e.first, e.second - 1}] += c * e.second;
  return out;
}

struct Field {
  Poly p, q;
};

// [Y,X]^i = Y(X^i) - X(Y^i)
inline Field bracket(const Field& y, const Field& x) {
  auto der = [](const Field& v, const Poly& f) { return add(mul(v.p, dx(f)), mul(v.q, dy(f))); };
  return {add(der(y, x.p), der(x, y.p), -1), add(der(y, x.q), der(x, y.q), -1)};
}

inline std::string text(const Poly& p) {
  std::ostringstream out;
  out << "0";
  for (const auto& [e, c] : p)
    if (c != 0) out << " + (" << c << ")*x^" << e.first << "*y^" << e.second;
  return out.str();
}

inline std::string text(const Field& f) { return "(" + text(f.p) + ", " + text(f.q) + ")"; }

inline Poly random_poly(std::mt19937_64& rng, int max_degree, int bound) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  Poly p;
  for (int a = 0; a <= max_degree; ++a)
    for (int b = 0; a + b <= max_degree; ++b)
      if (int c = coef(rng)) p[{a, b}] = c;
  return p;
}

inline long double eval(const Poly& p, long double x, long double y) {
  long double s = 0;
  for (const auto& [e, c] : p) s += c * std::pow(x, e.first) * std::pow(y, e.second);
  return s;
}

}  // namespace oracle

#endif
