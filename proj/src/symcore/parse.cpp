#include "trackzero/error.hpp"
#include "trackzero/symcore/expr.hpp"

#include <cctype>

namespace tz {

namespace {

class Parser {
 public:
  Parser(std::string_view text, Domain domain) : text_(text), domain_(domain) {}

  Expr parse() {
    Expr e = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr sum() {
    Expr acc = product();
    for (;;) {
      if (accept('+'))
        acc += product();
      else if (accept('-'))
        acc -= product();
      else
        return acc;
    }
  }

  Expr product() {
    Expr acc = signed_factor();
    while (accept('*')) acc *= signed_factor();
    return acc;
  }

  Expr signed_factor() {
    if (accept('-')) return -signed_factor();
    if (accept('+')) return signed_factor();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      Integer n = digits();
      if (pos_ == start) fail("expected integer exponent");
      if (n > 1000) fail("exponent too large");
      return pow(base, static_cast<unsigned>(n.get_ui()));
    }
    return base;
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) return 0;
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Expr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits();
      const std::size_t save = pos_;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        const std::size_t den_start = pos_;
        Integer den = digits();
        if (pos_ == den_start) fail("expected denominator of ratio literal");
        if (den == 0) fail("zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return Expr(q);
      }
      pos_ = save;
      return Expr(Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      return identifier(name, start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expr identifier(std::string_view name, std::size_t start) {
    auto require = [&](Domain d, Gen g) {
      if (domain_ != d) {
        pos_ = start;
        throw ParseError(std::string(name) + " is not a generator on the " + std::string(to_string(domain_)),
                         start);
      }
      return Expr::gen(g);
    };
    if (name == "pi") return Expr::gen(Gen::Pi);
    if (name == "x") return require(Domain::Plane, Gen::X);
    if (name == "y") return require(Domain::Plane, Gen::Y);
    if (name == "sin2px") return require(Domain::Torus, Gen::SinX);
    if (name == "cos2px") return require(Domain::Torus, Gen::CosX);
    if (name == "sin2py") return require(Domain::Torus, Gen::SinY);
    if (name == "cos2py") return require(Domain::Torus, Gen::CosY);
    pos_ = start;
    fail("unknown identifier '" + std::string(name) + "'");
  }

  std::string_view text_;
  Domain domain_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text, Domain domain) { return Parser(text, domain).parse(); }

}  // namespace tz
