#ifndef TRACKZERO_SYMCORE_EXPR_HPP
#define TRACKZERO_SYMCORE_EXPR_HPP

#include "trackzero/symcore/interval.hpp"
#include "trackzero/symcore/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace tz {

enum class Domain { Plane, Torus };

std::string_view to_string(Domain d);
Domain parse_domain(std::string_view text);

// Generators of the expression ring. On the torus the trig generators are
// sin(2*pi*x), cos(2*pi*x), sin(2*pi*y), cos(2*pi*y); Pi is the exact scalar pi.
enum class Gen : std::uint8_t { X, Y, SinX, CosX, SinY, CosY, Pi };
inline constexpr std::size_t kGenCount = 7;

enum class Var : std::uint8_t { X, Y };

struct Monomial {
  std::array<std::uint16_t, kGenCount> exp{};

  std::uint16_t operator[](Gen g) const { return exp[static_cast<std::size_t>(g)]; }
  std::uint16_t& operator[](Gen g) { return exp[static_cast<std::size_t>(g)]; }
  bool is_one() const;
  unsigned total_degree() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend Monomial operator*(Monomial a, const Monomial& b);
};

// Exact function on the plane or torus: a finite sum of Rational * monomial in the
// generators. The normal form keeps terms sorted by monomial, drops zero
// coefficients, and rewrites cos^2 = 1 - sin^2 so that every cos exponent is 0 or 1.
// With pi transcendental this makes equality of normal forms equality of functions.
class Expr {
 public:
  using Terms = std::map<Monomial, Rational>;

  Expr() = default;
  Expr(const Rational& c);  // NOLINT(google-explicit-constructor)
  Expr(long c) : Expr(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Expr(int c) : Expr(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Expr gen(Gen g, unsigned power = 1);
  static Expr var(Var v) { return gen(v == Var::X ? Gen::X : Gen::Y); }
  static Expr term(const Rational& c, const Monomial& m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term value when is_constant().
  Rational constant_value() const;
  bool uses(Gen g) const;
  bool has_trig() const;
  bool has_xy() const;
  unsigned degree(Gen g) const;
  unsigned total_degree() const;
  std::size_t size() const { return terms_.size(); }

  Expr& operator+=(const Expr& b);
  Expr& operator-=(const Expr& b);
  Expr& operator*=(const Expr& b);
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend bool operator==(const Expr&, const Expr&) = default;

  // Text in the input grammar, highest monomial first; parse(to_string()) == *this.
  std::string to_string() const;

  // Adds c*m, applying the cos^2 rewrite. Public for builders in polyops.
  void add_term(const Monomial& m, const Rational& c);

 private:
  Terms terms_;
};

Expr pow(const Expr& e, unsigned n);

// Exact partial derivative. d/dx sin(2 pi x) = 2 pi cos(2 pi x), pi kept symbolic.
Expr derive(const Expr& e, Var v);

// Exact value. On the torus the point must lie on the 1/8 grid (where sin and cos
// are in Q(sqrt 2)); throws DomainError when the value is not a rational number.
Rational eval(const Expr& e, const Point& p);

// Floating evaluation for trajectories and plots.
double eval_double(const Expr& e, double x, double y);

// Enclosure of {e(p) : p in b}.
Interval interval_eval(const Expr& e, const Box& b);

// q with a == q*b, or nullopt when b does not divide a. Throws Error when b is zero.
// Division is carried out recursively over the generators as variables.
std::optional<Expr> divide_exact(const Expr& a, const Expr& b);

// Greatest common divisor (content / primitive-part recursion), normalized so its
// leading coefficient is 1. gcd(0, 0) == 0.
Expr gcd(const Expr& a, const Expr& b);

// Leading coefficient by monomial order (highest monomial).
Rational leading_coefficient(const Expr& e);

Expr parse_expr(std::string_view text, Domain domain);

}  // namespace tz

#endif
