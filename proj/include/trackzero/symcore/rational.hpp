#ifndef TRACKZERO_SYMCORE_RATIONAL_HPP
#define TRACKZERO_SYMCORE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tz {

using Integer = mpz_class;
// Always canonical (lowest terms, positive denominator); GMP maintains this.
using Rational = mpq_class;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q" and finite decimals such as "-0.25".
Rational parse_rational(std::string_view text);

Integer floor(const Rational& q);
int sign(const Rational& q);
Rational abs(const Rational& q);
const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);

}  // namespace tz

#endif
