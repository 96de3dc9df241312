#pragma once
// Growth tables for kernel elements under iterated base actions, and a
// layered model fit for reading off their asymptotics.
//
// Lengths are exact big integers wherever the algebra permits exact
// evaluation (positive substitutions, closed forms). Where only
// materialization of reduced words is available, rows are computed up
// to a letter cap and marked truncated beyond it; a truncated row
// carries no value and is excluded from fits, never silently guessed.
#include <npcx/subst.hpp>
#include <npcx/words.hpp>

#include <string>
#include <vector>

namespace npcx {

// The staircase automorphism of F_k: x_i -> x_1 x_2 ... x_i. All images
// are positive words, so no free cancellation ever occurs and iterated
// image lengths obey an exact linear recursion on letter counts.
FreeAutomorphism staircase_automorphism(int k);

// |phi^n(x_i)| for the staircase automorphism, exact:
//   L_0(i) = 1,  L_n(1) = 1,  L_n(i) = sum_{m<=n} L_m(i-1) + 1.
Int staircase_length(int k, int i, long long n);

// Size of the witness t^n x_k^n t^{-n} in the mapping torus F_k x| F(t):
// spelled with 3n ambient letters while its kernel-intrinsic reduced
// length is n * |phi^n(x_k)|.
struct WitnessSize {
  long long ambient = 0;
  Int kernel = 0;
};
WitnessSize staircase_witness(int k, long long n);

struct GrowthRow {
  long long x = 0;        // input size parameter
  long long ambient = 0;  // ambient letters spent on the witness
  Int length = 0;         // exact reduced kernel length (when !truncated)
  bool truncated = false; // materialization exceeded the letter cap
};

struct GrowthTable {
  std::string name;
  long long cap = kDefaultWordCap;
  std::vector<GrowthRow> rows;

  std::size_t exact_rows() const;
  bool monotone() const;  // lengths nondecreasing across exact rows
  std::string to_csv() const;  // x,ambient_budget,kernel_length; >cap rows
};

// Reads a table back from its CSV form; ">N" cells become truncated
// rows and the largest such bound becomes the table cap.
GrowthTable growth_table_from_csv(const std::string& name,
                                  const std::string& csv);

// Layered growth fit. The current layer is tested for sub-exponential
// behaviour with doubling ratios r(x) = f(2x)/f(x)^2 (compared in log
// space: the trend must fall by a factor 0.6 and end below 0.9); while
// the test fails a logarithm is peeled, up to depth 3. slope is the
// log-log least-squares slope of the final layer over x >= x_max/4;
// base = exp(linear slope of ln f over the same range) is reported once
// at least one logarithm was peeled. Tables with fewer than 8 exact
// rows are refused.
struct FitResult {
  bool ok = false;
  std::string error;
  bool constant = false;
  int depth = 0;
  double slope = 0.0;
  double base = 0.0;
};
FitResult fit_growth(const GrowthTable& table);

// ln of a positive big integer, exact enough beyond double range.
double log_big(const Int& v);

// Orbit growth of one kernel generator b under a one-generator base
// action: row m holds min(|phi^m(b)|, |phi^-m(b)|), materialized up to
// the letter cap. A row stays exact when one direction materializes and
// the other exceeded the cap at exactly that step (the cap then
// certifies the minimum); once a direction is gone for an earlier step
// the row is truncated.
GrowthTable monodromy_orbit_table(const SemidirectAction& action,
                                  int generator, int m_max,
                                  long long cap = kDefaultWordCap);

// Two-stage chain growth: the staircase witness over F_2 at parameter n
// is pushed into a rank-two base (x_i -> t_i) and applied to kernel
// generator b; row n holds |Phi_{theta(g_1(n))}(b)|, materialized up to
// the letter cap.
GrowthTable chain_growth_table(const SemidirectAction& action, int generator,
                               int n_max, long long cap = kDefaultWordCap);

// One-sided a priori bound: every exact row must satisfy
// ln length <= applied * ln(max image length), where applied is the
// number of base letters acting (recovered as (ambient-1)/2).
bool upper_model_ok(const GrowthTable& table, const SemidirectAction& action);

}  // namespace npcx
