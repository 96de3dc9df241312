#pragma once
// The solvable Baumslag-Solitar group <a, t | t a t^-1 = a^2> as dyadic
// affine maps x -> 2^k x + b, plus the two ambient constructions the
// demo contrasts:
//
//   * split model: central letters u, v adjoined, where (tv)(tu)^-1
//     collapses to the central element v u^-1 and commutes with a;
//   * amalgam model: two copies glued along <a>, where s_1 s_2^-1
//     fails to commute with a, witnessed by a reduced three-syllable
//     normal form whose middle syllable is the non-integer translation
//     x -> x + 1/2.
//
// Membership in <a> is decidable in the affine model: an element lies
// in <a> exactly when its map is a translation by an integer.
#include <npcx/presentation.hpp>
#include <npcx/rational.hpp>
#include <npcx/words.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace npcx {

// x -> 2^k x + b with b a dyadic rational.
struct DyadicAffine {
  long long k = 0;
  Rat b = 0;
  friend bool operator==(const DyadicAffine&, const DyadicAffine&) = default;
};

// (f * g)(x) = f(g(x)).
DyadicAffine compose(const DyadicAffine& f, const DyadicAffine& g);
DyadicAffine inverse(const DyadicAffine& f);

DyadicAffine affine_a();  // x + 1
DyadicAffine affine_t();  // 2x

bool is_identity(const DyadicAffine& f);
// Membership oracle for <a>: integer translations.
bool in_cyclic_a(const DyadicAffine& f);

// Word over {a, t} (generators 0, 1) read left to right as a
// composition of maps.
DyadicAffine affine_of_word(const FreeWord& w);

// Normal form t^-p a^m t^q with p, q >= 0 and m odd whenever both
// p and q are positive.
struct BrittonForm {
  long long p = 0;
  long long m = 0;
  long long q = 0;
  FreeWord word() const;
  bool trivial() const { return p == 0 && m == 0 && q == 0; }
};
DyadicAffine affine_of(const BrittonForm& n);

// Random nonempty normal forms must map to non-identity affine maps.
SampleReport bs_faithfulness_test(int samples, std::uint64_t seed);

// Split model element: central exponents plus a word in BS(1,2).
// Alphabet: a = 0, t = 1, u = 2, v = 3.
struct SplitElement {
  long long eu = 0;
  long long ev = 0;
  FreeWord bs;
  bool trivial() const { return eu == 0 && ev == 0 && bs.empty(); }
};
SplitElement split_reduce(const FreeWord& w);
// [w, a] is trivial iff the BS part of w acts by a translation.
bool split_commutator_with_a_trivial(const FreeWord& w);

// Amalgam of two copies of BS(1,2) along <a>.
// Alphabet: a = 0, s_1 = 1, s_2 = 2.
struct Syllable {
  int factor = 0;  // 1 or 2; 0 for a pure edge-group element
  DyadicAffine g;
};
// Pinch-free syllable decomposition; a single factor-0 syllable means
// the element lies in the edge group <a>.
std::vector<Syllable> amalgam_reduce(const FreeWord& w);
bool amalgam_trivial(const FreeWord& w);

struct BsDemoReport {
  bool split_commutator_trivial = false;
  bool amalgam_commutator_nontrivial = false;
  int amalgam_syllables = 0;
  Rat middle_translation = 0;
  SampleReport faithfulness;
  bool ok = false;
  std::string text() const;
};
BsDemoReport run_bs_demo();

}  // namespace npcx
