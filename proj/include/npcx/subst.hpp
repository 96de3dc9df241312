#pragma once

// Cancellation-free substitution families and exact length recurrences.
//
// Iterating a free-group substitution while reducing normally requires
// materializing words that grow geometrically, which caps how deep a
// growth table can go. When no reduction ever occurs, the reduced
// length obeys an exact linear recurrence on signed-letter counts and
// arbitrarily deep compositions stay exactly computable.
//
// certify(start) establishes that property: it closes the set of
// reachable signed letters and adjacent letter pairs of the start word
// under every substitution in the family (each letter contributes the
// interior pairs of its image, each pair contributes the junction pair
// formed by the last letter of the left image and the first letter of
// the right image) and reports whether every reachable pair is reduced
// and every reachable image nonempty. By induction, any composition
// from the family applied to the start word then concatenates images
// without cancellation, so composed_length's big-integer count vectors
// give the exact reduced length without building the word.
//
// Mutually inverse substitutions can never be certified together (their
// composition is the identity, which cancels); certify one direction
// per family instead.

#include <vector>

#include "npcx/rational.hpp"
#include "npcx/words.hpp"

namespace npcx {

class SubstitutionFamily {
 public:
  // Substitutions act on the free group of the given rank; signed
  // letter 2g is generator g, 2g + 1 its inverse.
  explicit SubstitutionFamily(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(images_.size()); }

  // Adds the substitution sending generator g to images[g] (and its
  // inverse to the inverse image word); returns the new index.
  int add(const std::vector<FreeWord>& images);

  // No-cancellation certificate seeded by the start word, covering
  // every composition of family members.
  bool certify(const FreeWord& start) const;

  // Signed-letter count vector of a word, and one substitution applied
  // to such a vector; total is the length the vector represents.
  std::vector<Int> counts(const FreeWord& w) const;
  std::vector<Int> advance(int sub, const std::vector<Int>& counts) const;
  static Int total(const std::vector<Int>& counts);

  // Exact reduced length of the composition applied as in act():
  // seq.back() acts first. Meaningful when certify(start) holds.
  Int composed_length(const std::vector<int>& seq, const FreeWord& start) const;

  // Largest image letter-length; one application multiplies any length
  // by at most this factor, certificate or not.
  long long max_image_length() const;

 private:
  int rank_ = 0;
  // images_[s][letter] = image as signed letters; tallies_[s][letter] =
  // the same image as (signed letter, multiplicity) pairs.
  std::vector<std::vector<std::vector<int>>> images_;
  std::vector<std::vector<std::vector<std::pair<int, long long>>>> tallies_;
};

}  // namespace npcx
