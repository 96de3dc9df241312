#pragma once

// Exact arithmetic used throughout: arbitrary-precision integers and
// rationals. Angles are stored as rational multiples of pi, so "1/3"
// means an angle of pi/3.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace npcx {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& r);

// Accepts "p" or "p/q"; throws std::invalid_argument on anything else.
Rat parse_rat(const std::string& s);

long long to_i64(const Int& v);  // throws std::overflow_error if out of range

}  // namespace npcx
