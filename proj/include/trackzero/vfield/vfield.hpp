#ifndef TRACKZERO_VFIELD_VFIELD_HPP
#define TRACKZERO_VFIELD_VFIELD_HPP

#include "trackzero/symcore/expr.hpp"

#include <array>
#include <string>
#include <string_view>
#include <utility>

namespace tz {

// Planar vector field (X^1, X^2) on the plane or the flat torus.
class VectorField {
 public:
  VectorField() = default;
  VectorField(Expr cx, Expr cy, Domain domain = Domain::Plane);

  const Expr& cx() const { return cx_; }
  const Expr& cy() const { return cy_; }
  const Expr& operator[](std::size_t i) const { return i == 0 ? cx_ : cy_; }
  Domain domain() const { return domain_; }
  bool is_zero() const { return cx_.is_zero() && cy_.is_zero(); }

  // "(e1, e2)" in the expression grammar.
  std::string to_string() const;

  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a);
  friend VectorField operator*(const Expr& f, const VectorField& a);
  friend bool operator==(const VectorField&, const VectorField&) = default;

 private:
  Expr cx_;
  Expr cy_;
  Domain domain_ = Domain::Plane;
};

// Parses "(e1, e2)". Commas nested inside parentheses are not separators.
VectorField parse_field(std::string_view text, Domain domain);

// entry[i][j] = d_j X^i
struct JacobianMatrix {
  std::array<std::array<Expr, 2>, 2> entry;
  Expr determinant() const;
  Expr trace() const;
  friend bool operator==(const JacobianMatrix&, const JacobianMatrix&) = default;
};

JacobianMatrix jacobian(const VectorField& f);

// [Y,X]^i = sum_j (Y^j d_j X^i - X^j d_j Y^i); with this sign [E,X] = (k-1)X for
// the Euler field E and X homogeneous of degree k.
VectorField lie_bracket(const VectorField& y, const VectorField& x);

// X^1 Y^2 - X^2 Y^1
Expr wedge(const VectorField& x, const VectorField& y);
// X^1 Y^1 + X^2 Y^2
Expr dot(const VectorField& x, const VectorField& y);
// Directional derivative X . grad(p)
Expr apply(const VectorField& x, const Expr& p);

std::pair<Interval, Interval> field_interval_eval(const VectorField& f, const Box& b);
std::array<double, 2> eval_double(const VectorField& f, double x, double y);

// Euler field (x, y) and rotation field (-y, x).
VectorField euler_field();
VectorField rotation_field();

}  // namespace tz

#endif
