// Exact division and gcd. These work in the free polynomial ring over the
// generators (no cos^2 rewrite), viewing a polynomial recursively as univariate
// in its first generator with coefficients in the remaining ones.
#include "trackzero/error.hpp"
#include "trackzero/symcore/expr.hpp"

namespace tz {

namespace {

using Poly = std::map<Monomial, Rational>;

void accumulate(Poly& p, const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) p.erase(it);
  }
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) accumulate(r, ma * mb, ca * cb);
  return r;
}

Poly sub(Poly a, const Poly& b) {
  for (const auto& [m, c] : b) accumulate(a, m, -c);
  return a;
}

Poly scale(const Poly& a, const Rational& s) {
  Poly r;
  for (const auto& [m, c] : a) r.emplace(m, c * s);
  return r;
}

bool is_constant(const Poly& p) { return p.empty() || (p.size() == 1 && p.begin()->first.is_one()); }

unsigned deg(const Poly& p, Gen g) {
  unsigned d = 0;
  for (const auto& [m, c] : p) d = std::max<unsigned>(d, m[g]);
  return d;
}

// Coefficient of g^k, as a polynomial free of g.
Poly coeff(const Poly& p, Gen g, unsigned k) {
  Poly r;
  for (const auto& [m, c] : p) {
    if (m[g] != k) continue;
    Monomial stripped = m;
    stripped[g] = 0;
    r.emplace(stripped, c);
  }
  return r;
}

Poly shift(const Poly& p, Gen g, unsigned k) {
  Monomial factor;
  factor[g] = static_cast<std::uint16_t>(k);
  Poly r;
  for (const auto& [m, c] : p) r.emplace(m * factor, c);
  return r;
}

std::optional<Gen> main_var(const Poly& a, const Poly& b) {
  for (std::size_t i = 0; i < kGenCount; ++i) {
    const Gen g = static_cast<Gen>(i);
    if (deg(a, g) > 0 || deg(b, g) > 0) return g;
  }
  return std::nullopt;
}

Poly monic(const Poly& p) {
  if (p.empty()) return p;
  return scale(p, 1 / p.rbegin()->second);
}

std::optional<Poly> divide(const Poly& a, const Poly& b) {
  if (b.empty()) throw Error("division by the zero expression");
  if (a.empty()) return Poly{};
  if (is_constant(b)) return scale(a, 1 / b.begin()->second);
  const Gen g = *main_var(a, b);
  const unsigned db = deg(b, g);
  if (db == 0) {
    Poly q;
    for (unsigned k = 0; k <= deg(a, g); ++k) {
      Poly ck = coeff(a, g, k);
      if (ck.empty()) continue;
      auto qk = divide(ck, b);
      if (!qk) return std::nullopt;
      for (const auto& [m, c] : shift(*qk, g, k)) accumulate(q, m, c);
    }
    return q;
  }
  const Poly lb = coeff(b, g, db);
  Poly q;
  Poly r = a;
  while (!r.empty()) {
    const unsigned dr = deg(r, g);
    if (dr < db) return std::nullopt;
    auto c = divide(coeff(r, g, dr), lb);
    if (!c) return std::nullopt;
    const Poly t = shift(*c, g, dr - db);
    for (const auto& [m, cc] : t) accumulate(q, m, cc);
    r = sub(std::move(r), mul(t, b));
  }
  return q;
}

Poly gcd_poly(const Poly& a, const Poly& b);

Poly content(const Poly& p, Gen g) {
  Poly c;
  for (unsigned k = 0; k <= deg(p, g); ++k) {
    Poly ck = coeff(p, g, k);
    if (ck.empty()) continue;
    c = gcd_poly(c, ck);
    if (is_constant(c)) break;
  }
  return c;
}

Poly primitive_part(const Poly& p, Gen g) {
  if (p.empty()) return p;
  return *divide(p, content(p, g));
}

Poly prem(const Poly& a, const Poly& b, Gen g) {
  const unsigned db = deg(b, g);
  const Poly lb = coeff(b, g, db);
  Poly r = a;
  while (!r.empty() && deg(r, g) >= db) {
    const unsigned dr = deg(r, g);
    const Poly lr = coeff(r, g, dr);
    r = sub(mul(lb, r), mul(shift(lr, g, dr - db), b));
  }
  return r;
}

Poly gcd_poly(const Poly& a, const Poly& b) {
  if (a.empty()) return monic(b);
  if (b.empty()) return monic(a);
  auto gv = main_var(a, b);
  if (!gv) return Poly{{Monomial{}, Rational(1)}};
  const Gen g = *gv;
  if (deg(a, g) == 0) return gcd_poly(a, content(b, g));
  if (deg(b, g) == 0) return gcd_poly(content(a, g), b);
  const Poly ca = content(a, g);
  const Poly cb = content(b, g);
  Poly pa = *divide(a, ca);
  Poly pb = *divide(b, cb);
  const Poly c = gcd_poly(ca, cb);
  if (deg(pa, g) < deg(pb, g)) std::swap(pa, pb);
  while (!pb.empty()) {
    if (deg(pb, g) == 0) {
      pa = Poly{{Monomial{}, Rational(1)}};
      break;
    }
    Poly r = prem(pa, pb, g);
    pa = std::move(pb);
    pb = primitive_part(r, g);
  }
  return monic(mul(c, primitive_part(pa, g)));
}

Expr to_expr(const Poly& p) {
  Expr e;
  for (const auto& [m, c] : p) e.add_term(m, c);
  return e;
}

}  // namespace

Rational leading_coefficient(const Expr& e) {
  if (e.is_zero()) return 0;
  return e.terms().rbegin()->second;
}

std::optional<Expr> divide_exact(const Expr& a, const Expr& b) {
  auto q = divide(a.terms(), b.terms());
  if (!q) return std::nullopt;
  Expr out = to_expr(*q);
  if (out * b != a) return std::nullopt;
  return out;
}

Expr gcd(const Expr& a, const Expr& b) { return to_expr(gcd_poly(a.terms(), b.terms())); }

}  // namespace tz
