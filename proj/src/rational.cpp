#include "npcx/rational.hpp"

#include <stdexcept>

#include "npcx/length.hpp"

namespace npcx {

std::string rat_str(const Rat& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) {
    s += "/";
    s += rat_den(r).str();
  }
  return s;
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
  }
}

long long to_i64(const Int& v) {
  if (v > Int(std::numeric_limits<long long>::max()) ||
      v < Int(std::numeric_limits<long long>::min()))
    throw std::overflow_error("to_i64: value out of range");
  return static_cast<long long>(v);
}

std::string length_str(const Length& len) {
  std::string s = rat_str(len.q);
  if (len.sqrt2) s += "*sqrt2";
  return s;
}

Length parse_length(const std::string& s) {
  Length out;
  auto star = s.find('*');
  if (star == std::string::npos) {
    out.q = parse_rat(s);
  } else {
    if (s.substr(star + 1) != "sqrt2")
      throw std::invalid_argument("parse_length: bad suffix in '" + s + "'");
    out.q = parse_rat(s.substr(0, star));
    out.sqrt2 = 1;
  }
  if (!out.positive())
    throw std::invalid_argument("parse_length: length must be positive");
  return out;
}

}  // namespace npcx
