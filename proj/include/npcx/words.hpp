#pragma once

// Reduced words in finite-rank free groups.
//
// Generators are indices 0..rank-1; a word is stored as a run-length
// list of (generator, nonzero exponent) with distinct adjacent
// generators, which keeps huge powers cheap. Every operation returns a
// freely reduced word. Operations that can blow a word up take a cap on
// the letter count (sum of |exponents|) and throw WordCapError instead
// of silently truncating.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace npcx {

inline constexpr long long kDefaultWordCap = 1LL << 26;

struct WordCapError : std::runtime_error {
  explicit WordCapError(long long need)
      : std::runtime_error("word length cap exceeded (needs " +
                           std::to_string(need) + " letters)") {}
};

class FreeWord {
 public:
  struct Run {
    int gen;
    long long exp;
    friend bool operator==(const Run&, const Run&) = default;
  };

  FreeWord() = default;
  static FreeWord generator(int g, long long exp = 1);

  bool empty() const { return runs_.empty(); }
  long long length() const { return letters_; }
  const std::vector<Run>& runs() const { return runs_; }

  // Appends g^exp with free reduction against the tail.
  void push(int g, long long exp);

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  bool operator<(const FreeWord& rhs) const;  // (length, runs) order

 private:
  std::vector<Run> runs_;
  long long letters_ = 0;
};

FreeWord concat(const FreeWord& a, const FreeWord& b,
                long long cap = kDefaultWordCap);
FreeWord inverse(const FreeWord& w);
FreeWord power(const FreeWord& w, long long e,
               long long cap = kDefaultWordCap);
FreeWord conjugate(const FreeWord& g, const FreeWord& w,
                   long long cap = kDefaultWordCap);  // g w g^-1

// First letter of the reduced word as (gen, +-1); word must be nonempty.
FreeWord::Run first_letter(const FreeWord& w);

// Substitutes images[g] for every letter g; images[g] must exist for
// every generator that occurs.
FreeWord substitute(const std::vector<FreeWord>& images, const FreeWord& w,
                    long long cap = kDefaultWordCap);

// names[g] gives the print name of generator g; tokens are joined by
// spaces as "name+" / "name-", with runs expanded only in the exponent
// ("name+^5"). parse_word accepts exactly that format.
std::string word_str(const FreeWord& w, const std::vector<std::string>& names);
FreeWord parse_word(const std::string& text,
                    const std::vector<std::string>& names);

// An automorphism of the free group of the given rank, with optional
// verified inverse. verify_inverse checks both compositions on the
// basis.
struct FreeAutomorphism {
  int rank = 0;
  std::vector<FreeWord> images;
  std::vector<FreeWord> inverse_images;
};

FreeWord apply_automorphism(const FreeAutomorphism& a, const FreeWord& w,
                            long long cap = kDefaultWordCap);
bool verify_inverse(const FreeAutomorphism& a,
                    long long cap = kDefaultWordCap);

// Elements of F_kernel x| F_base with the base acting through phi:
// (w1, b1)(w2, b2) = (w1 * phi_b1(w2), b1 b2), phi_{x_j} = phi[j].
struct SemidirectAction {
  int kernel_rank = 0;
  int base_rank = 0;
  std::vector<FreeAutomorphism> phi;  // one per base generator
};

// phi_b(w): letters of b act right to left; negative letters act by the
// stored inverse images (which must be present).
FreeWord act(const SemidirectAction& s, const FreeWord& b, const FreeWord& w,
             long long cap = kDefaultWordCap);

struct SemidirectElement {
  FreeWord kernel;
  FreeWord base;
  bool trivial() const { return kernel.empty() && base.empty(); }
  friend bool operator==(const SemidirectElement&,
                         const SemidirectElement&) = default;
};

SemidirectElement sd_mult(const SemidirectAction& s, const SemidirectElement& a,
                          const SemidirectElement& b,
                          long long cap = kDefaultWordCap);
SemidirectElement sd_inverse(const SemidirectAction& s,
                             const SemidirectElement& a,
                             long long cap = kDefaultWordCap);

}  // namespace npcx
