#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace trussalg {

// Exact arbitrary-precision rational, always reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

// Canonical form "p/q" ("p" when q = 1); parse accepts both.
std::string rat_to_string(const Rational& r);
Rational rat_from_string(const std::string& s);

}  // namespace trussalg
