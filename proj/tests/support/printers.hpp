#ifndef TRACKZERO_TESTS_PRINTERS_HPP
#define TRACKZERO_TESTS_PRINTERS_HPP

#include "trackzero/symcore/expr.hpp"

#include <doctest.h>

namespace doctest {

template <>
struct StringMaker<tz::Expr> {
  static String convert(const tz::Expr& e) { return e.to_string().c_str(); }
};

template <>
struct StringMaker<tz::Rational> {
  static String convert(const tz::Rational& q) { return tz::to_string(q).c_str(); }
};

template <>
struct StringMaker<tz::Interval> {
  static String convert(const tz::Interval& i) { return i.to_string().c_str(); }
};

}  // namespace doctest

#endif
