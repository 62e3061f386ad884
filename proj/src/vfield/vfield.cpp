#include "trackzero/vfield/vfield.hpp"

#include "trackzero/error.hpp"

namespace tz {

namespace {

void check_same_domain(const VectorField& a, const VectorField& b) {
  if (a.domain() != b.domain())
    throw DomainError("vector fields live on different domains (" + std::string(to_string(a.domain())) + " vs " +
                      std::string(to_string(b.domain())) + ")");
}

void check_generators(const Expr& e, Domain d) {
  if (d == Domain::Plane && e.has_trig()) throw DomainError("torus generator in a plane field: " + e.to_string());
  if (d == Domain::Torus && e.has_xy()) throw DomainError("non-periodic x or y in a torus field: " + e.to_string());
}

}  // namespace

VectorField::VectorField(Expr cx, Expr cy, Domain domain) : cx_(std::move(cx)), cy_(std::move(cy)), domain_(domain) {
  check_generators(cx_, domain_);
  check_generators(cy_, domain_);
}

std::string VectorField::to_string() const { return "(" + cx_.to_string() + ", " + cy_.to_string() + ")"; }

VectorField operator+(const VectorField& a, const VectorField& b) {
  check_same_domain(a, b);
  return VectorField(a.cx_ + b.cx_, a.cy_ + b.cy_, a.domain_);
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  check_same_domain(a, b);
  return VectorField(a.cx_ - b.cx_, a.cy_ - b.cy_, a.domain_);
}

VectorField operator-(const VectorField& a) { return VectorField(-a.cx_, -a.cy_, a.domain_); }

VectorField operator*(const Expr& f, const VectorField& a) { return VectorField(f * a.cx_, f * a.cy_, a.domain_); }

VectorField parse_field(std::string_view text, Domain domain) {
  std::size_t open = text.find_first_not_of(" \t\n");
  std::size_t close = text.find_last_not_of(" \t\n");
  if (open == std::string_view::npos || text[open] != '(') throw ParseError("expected '(' opening a field", open == std::string_view::npos ? 0 : open);
  if (text[close] != ')') throw ParseError("expected ')' closing a field", close);
  int depth = 0;
  std::size_t comma = std::string_view::npos;
  for (std::size_t i = open + 1; i < close; ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      if (comma != std::string_view::npos) throw ParseError("a field has exactly two components", i);
      comma = i;
    }
  }
  if (comma == std::string_view::npos) throw ParseError("expected ',' between field components", close);
  auto component = [&](std::size_t from, std::size_t to) {
    try {
      return parse_expr(text.substr(from, to - from), domain);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")), from + e.position());
    }
  };
  return VectorField(component(open + 1, comma), component(comma + 1, close), domain);
}

Expr JacobianMatrix::determinant() const { return entry[0][0] * entry[1][1] - entry[0][1] * entry[1][0]; }

Expr JacobianMatrix::trace() const { return entry[0][0] + entry[1][1]; }

JacobianMatrix jacobian(const VectorField& f) {
  JacobianMatrix j;
  for (std::size_t i = 0; i < 2; ++i) {
    j.entry[i][0] = derive(f[i], Var::X);
    j.entry[i][1] = derive(f[i], Var::Y);
  }
  return j;
}

VectorField lie_bracket(const VectorField& y, const VectorField& x) {
  check_same_domain(y, x);
  const JacobianMatrix jx = jacobian(x);
  const JacobianMatrix jy = jacobian(y);
  std::array<Expr, 2> out;
  for (std::size_t i = 0; i < 2; ++i) {
    out[i] = y.cx() * jx.entry[i][0] + y.cy() * jx.entry[i][1] - x.cx() * jy.entry[i][0] - x.cy() * jy.entry[i][1];
  }
  return VectorField(out[0], out[1], x.domain());
}

Expr wedge(const VectorField& x, const VectorField& y) {
  check_same_domain(x, y);
  return x.cx() * y.cy() - x.cy() * y.cx();
}

Expr dot(const VectorField& x, const VectorField& y) {
  check_same_domain(x, y);
  return x.cx() * y.cx() + x.cy() * y.cy();
}

Expr apply(const VectorField& x, const Expr& p) { return x.cx() * derive(p, Var::X) + x.cy() * derive(p, Var::Y); }

std::pair<Interval, Interval> field_interval_eval(const VectorField& f, const Box& b) {
  return {interval_eval(f.cx(), b), interval_eval(f.cy(), b)};
}

std::array<double, 2> eval_double(const VectorField& f, double x, double y) {
  return {eval_double(f.cx(), x, y), eval_double(f.cy(), x, y)};
}

VectorField euler_field() { return VectorField(Expr::var(Var::X), Expr::var(Var::Y)); }

VectorField rotation_field() { return VectorField(-Expr::var(Var::Y), Expr::var(Var::X)); }

}  // namespace tz
