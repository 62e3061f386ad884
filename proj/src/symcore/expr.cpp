#include "trackzero/symcore/expr.hpp"

#include "trackzero/error.hpp"
#include "trackzero/symcore/trig.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace tz {

namespace {

constexpr std::array<std::string_view, kGenCount> kGenNames = {"x",      "y",      "sin2px", "cos2px",
                                                               "sin2py", "cos2py", "pi"};

constexpr std::size_t idx(Gen g) { return static_cast<std::size_t>(g); }

}  // namespace

std::string_view to_string(Domain d) { return d == Domain::Plane ? "plane" : "torus"; }

Domain parse_domain(std::string_view text) {
  if (text == "plane") return Domain::Plane;
  if (text == "torus") return Domain::Torus;
  throw Error("unknown domain '" + std::string(text) + "' (expected plane or torus)");
}

bool Monomial::is_one() const {
  for (auto e : exp)
    if (e != 0) return false;
  return true;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

Monomial operator*(Monomial a, const Monomial& b) {
  for (std::size_t i = 0; i < kGenCount; ++i) a.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
  return a;
}

Expr::Expr(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Expr Expr::gen(Gen g, unsigned power) {
  Monomial m;
  m[g] = static_cast<std::uint16_t>(power);
  return term(Rational(1), m);
}

Expr Expr::term(const Rational& c, const Monomial& m) {
  Expr e;
  e.add_term(m, c);
  return e;
}

void Expr::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  for (auto [cos_gen, sin_gen] : {std::pair{Gen::CosX, Gen::SinX}, std::pair{Gen::CosY, Gen::SinY}}) {
    if (m[cos_gen] >= 2) {
      // cos^2 = 1 - sin^2
      Monomial reduced = m;
      reduced[cos_gen] = static_cast<std::uint16_t>(reduced[cos_gen] - 2);
      Monomial with_sin = reduced;
      with_sin[sin_gen] = static_cast<std::uint16_t>(with_sin[sin_gen] + 2);
      add_term(reduced, c);
      add_term(with_sin, -c);
      return;
    }
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool Expr::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Rational Expr::constant_value() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Expr::uses(Gen g) const {
  for (const auto& [m, c] : terms_)
    if (m[g] != 0) return true;
  return false;
}

bool Expr::has_trig() const {
  return uses(Gen::SinX) || uses(Gen::CosX) || uses(Gen::SinY) || uses(Gen::CosY);
}

bool Expr::has_xy() const { return uses(Gen::X) || uses(Gen::Y); }

unsigned Expr::degree(Gen g) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[g]);
  return d;
}

unsigned Expr::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

Expr& Expr::operator+=(const Expr& b) {
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

Expr& Expr::operator-=(const Expr& b) {
  for (const auto& [m, c] : b.terms_) add_term(m, -c);
  return *this;
}

Expr operator*(const Expr& a, const Expr& b) {
  Expr r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Expr& Expr::operator*=(const Expr& b) { return *this = *this * b; }

Expr operator-(const Expr& a) {
  Expr r;
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
  return r;
}

std::string Expr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = sgn(c) < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string factors;
    for (std::size_t g = 0; g < kGenCount; ++g) {
      if (m.exp[g] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += kGenNames[g];
      if (m.exp[g] > 1) factors += "^" + std::to_string(m.exp[g]);
    }
    if (factors.empty())
      out += tz::to_string(mag);
    else if (mag == 1)
      out += factors;
    else
      out += tz::to_string(mag) + "*" + factors;
  }
  return out;
}

Expr pow(const Expr& e, unsigned n) {
  Expr r(1);
  Expr base = e;
  while (n > 0) {
    if (n & 1U) r *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return r;
}

Expr derive(const Expr& e, Var v) {
  const Gen coord = v == Var::X ? Gen::X : Gen::Y;
  const Gen sin_gen = v == Var::X ? Gen::SinX : Gen::SinY;
  const Gen cos_gen = v == Var::X ? Gen::CosX : Gen::CosY;
  Expr r;
  for (const auto& [m, c] : e.terms()) {
    if (m[coord] > 0) {
      Monomial d = m;
      d[coord] = static_cast<std::uint16_t>(d[coord] - 1);
      r.add_term(d, c * m[coord]);
    }
    if (m[sin_gen] > 0) {
      // d sin^k = k sin^(k-1) * 2 pi cos
      Monomial d = m;
      d[sin_gen] = static_cast<std::uint16_t>(d[sin_gen] - 1);
      d[cos_gen] = static_cast<std::uint16_t>(d[cos_gen] + 1);
      d[Gen::Pi] = static_cast<std::uint16_t>(d[Gen::Pi] + 1);
      r.add_term(d, c * 2 * m[sin_gen]);
    }
    if (m[cos_gen] > 0) {
      // d cos^k = -k cos^(k-1) * 2 pi sin
      Monomial d = m;
      d[cos_gen] = static_cast<std::uint16_t>(d[cos_gen] - 1);
      d[sin_gen] = static_cast<std::uint16_t>(d[sin_gen] + 1);
      d[Gen::Pi] = static_cast<std::uint16_t>(d[Gen::Pi] + 1);
      r.add_term(d, -c * 2 * m[cos_gen]);
    }
  }
  return r;
}

namespace {

// a + b*sqrt(2)
struct QSqrt2 {
  Rational a;
  Rational b;
  QSqrt2 operator*(const QSqrt2& o) const { return {a * o.a + 2 * b * o.b, a * o.b + b * o.a}; }
};

// sin(2 pi k / 8) for k = 0..7.
QSqrt2 sin_eighth(long k) {
  const Rational half(1, 2);
  switch (((k % 8) + 8) % 8) {
    case 0: case 4: return {0, 0};
    case 1: case 3: return {0, half};
    case 2: return {1, 0};
    case 6: return {-1, 0};
    default: return {0, -half};
  }
}

Rational rational_power(const Rational& q, unsigned n) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), n);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), n);
  return r;
}

QSqrt2 power(QSqrt2 base, unsigned n) {
  QSqrt2 r{1, 0};
  for (unsigned i = 0; i < n; ++i) r = r * base;
  return r;
}

}  // namespace

Rational eval(const Expr& e, const Point& p) {
  std::optional<long> kx, ky;
  auto eighths = [](const Rational& t) -> std::optional<long> {
    Rational s = 8 * t;
    if (s.get_den() != 1) return std::nullopt;
    Integer k = s.get_num() % 8;
    return k.get_si();
  };
  if (e.uses(Gen::SinX) || e.uses(Gen::CosX)) {
    kx = eighths(p.x);
    if (!kx) throw DomainError("exact torus evaluation needs x on the 1/8 grid; use interval_eval");
  }
  if (e.uses(Gen::SinY) || e.uses(Gen::CosY)) {
    ky = eighths(p.y);
    if (!ky) throw DomainError("exact torus evaluation needs y on the 1/8 grid; use interval_eval");
  }
  std::map<unsigned, QSqrt2> by_pi_power;
  for (const auto& [m, c] : e.terms()) {
    QSqrt2 v{c * rational_power(p.x, m[Gen::X]) * rational_power(p.y, m[Gen::Y]), 0};
    if (kx) {
      v = v * power(sin_eighth(*kx), m[Gen::SinX]) * power(sin_eighth(*kx + 2), m[Gen::CosX]);
    }
    if (ky) {
      v = v * power(sin_eighth(*ky), m[Gen::SinY]) * power(sin_eighth(*ky + 2), m[Gen::CosY]);
    }
    auto& slot = by_pi_power[m[Gen::Pi]];
    slot.a += v.a;
    slot.b += v.b;
  }
  Rational value = 0;
  for (const auto& [k, v] : by_pi_power) {
    if (sgn(v.a) == 0 && sgn(v.b) == 0) continue;
    if (k != 0 || sgn(v.b) != 0) throw DomainError("value of " + e.to_string() + " at the point is not rational");
    value = v.a;
  }
  return value;
}

double eval_double(const Expr& e, double x, double y) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const std::array<double, kGenCount> base = {x,
                                              y,
                                              std::sin(two_pi * x),
                                              std::cos(two_pi * x),
                                              std::sin(two_pi * y),
                                              std::cos(two_pi * y),
                                              std::numbers::pi};
  double sum = 0.0;
  for (const auto& [m, c] : e.terms()) {
    double t = c.get_d();
    for (std::size_t g = 0; g < kGenCount; ++g) {
      for (unsigned k = 0; k < m.exp[g]; ++k) t *= base[g];
    }
    sum += t;
  }
  return sum;
}

Interval interval_eval(const Expr& e, const Box& b) {
  if (e.is_zero()) return Interval(Rational(0));
  std::array<unsigned, kGenCount> max_exp{};
  for (const auto& [m, c] : e.terms())
    for (std::size_t g = 0; g < kGenCount; ++g) max_exp[g] = std::max<unsigned>(max_exp[g], m.exp[g]);

  std::array<Interval, kGenCount> base;
  base[idx(Gen::X)] = b.x;
  base[idx(Gen::Y)] = b.y;
  if (max_exp[idx(Gen::SinX)] > 0) base[idx(Gen::SinX)] = sin_2pi(b.x);
  if (max_exp[idx(Gen::CosX)] > 0) base[idx(Gen::CosX)] = cos_2pi(b.x);
  if (max_exp[idx(Gen::SinY)] > 0) base[idx(Gen::SinY)] = sin_2pi(b.y);
  if (max_exp[idx(Gen::CosY)] > 0) base[idx(Gen::CosY)] = cos_2pi(b.y);
  if (max_exp[idx(Gen::Pi)] > 0) base[idx(Gen::Pi)] = pi_enclosure();

  std::array<std::vector<Interval>, kGenCount> powers;
  for (std::size_t g = 0; g < kGenCount; ++g) {
    powers[g].reserve(max_exp[g] + 1);
    for (unsigned k = 0; k <= max_exp[g]; ++k) powers[g].push_back(pow(base[g], k));
  }

  Interval sum(Rational(0));
  for (const auto& [m, c] : e.terms()) {
    Interval t(c);
    for (std::size_t g = 0; g < kGenCount; ++g)
      if (m.exp[g] > 0) t = t * powers[g][m.exp[g]];
    sum += t;
  }
  return sum;
}

}  // namespace tz
