#pragma once

// Edge lengths are exact values q * sqrt(2)^e with q a positive rational
// and e in {0,1}. Plain rationals cover the unit-edge complexes; the
// sqrt(2) factor appears when a square is split along its diagonal and
// when a block is rescaled so that rose petals match lengths during
// amalgamation. Values are closed under multiplication and exactly
// comparable, which is all the toolkit needs (lengths are never added).

#include "npcx/rational.hpp"

namespace npcx {

struct Length {
  Rat q = 1;       // positive rational part
  int sqrt2 = 0;   // 0 or 1 after normalization

  Length() = default;
  Length(Rat q_, int e = 0) : q(std::move(q_)), sqrt2(e) { normalize(); }

  void normalize() {
    // sqrt(2)^2 == 2 folds into the rational part; negative exponents
    // divide by 2 accordingly.
    while (sqrt2 >= 2) { q *= 2; sqrt2 -= 2; }
    while (sqrt2 < 0) { q /= 2; sqrt2 += 2; }
  }

  bool positive() const { return q > 0; }

  friend Length operator*(const Length& a, const Length& b) {
    return Length(a.q * b.q, a.sqrt2 + b.sqrt2);
  }
  friend bool operator==(const Length& a, const Length& b) {
    return a.q == b.q && a.sqrt2 == b.sqrt2;
  }
  friend bool operator!=(const Length& a, const Length& b) { return !(a == b); }
};

inline Length unit_length() { return Length(Rat(1), 0); }
inline Length sqrt2_length() { return Length(Rat(1), 1); }

// Canonical form: "p/q" (e = 0) or "p/q*sqrt2" (e = 1).
std::string length_str(const Length& l);
Length parse_length(const std::string& s);

}  // namespace npcx
