#include <doctest.h>

#include <npcx/distortion.hpp>
#include <npcx/report.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace npcx;

namespace {

const CoverPipelineResult& pipeline1() {
  static const CoverPipelineResult r = run_cover_pipeline(1);
  return r;
}

const CoverPipelineResult& pipeline2() {
  static const CoverPipelineResult r = run_cover_pipeline(2);
  return r;
}

Int ipow(Int b, long long e) {
  Int r = 1;
  for (long long i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TEST_CASE("staircase automorphism has exact iterate lengths") {
  const FreeAutomorphism a4 = staircase_automorphism(4);
  CHECK(verify_inverse(a4));

  FreeWord x1x2;
  x1x2.push(0, 1);
  x1x2.push(1, 1);
  CHECK(apply_automorphism(a4, FreeWord::generator(1)) == x1x2);

  FreeWord w3 = FreeWord::generator(2);
  w3 = substitute(a4.images, w3);
  w3 = substitute(a4.images, w3);
  CHECK(w3.length() == 6);

  for (long long n = 0; n <= 200; ++n) {
    CHECK(staircase_length(2, 1, n) == 1);
    CHECK(staircase_length(2, 2, n) == Int(n + 1));
  }

  // Materialized iterates match the closed form, and the closed form
  // satisfies L_n(i) = sum_{m<=n} L_m(i-1) + 1.
  for (int i = 1; i <= 4; ++i) {
    FreeWord w = FreeWord::generator(i - 1);
    Int running = 0;
    for (long long n = 1; n <= 100; ++n) {
      w = substitute(a4.images, w);
      const Int want = staircase_length(4, i, n);
      CHECK(Int(w.length()) == want);
      if (i >= 2) {
        running += staircase_length(4, i - 1, n);
        CHECK(want == running + 1);
      }
    }
  }

  CHECK_THROWS_AS(staircase_length(2, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(staircase_length(2, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(staircase_length(2, 1, -1), std::invalid_argument);

  // Positive images never cancel, so the count recursion is certified
  // and reproduces the closed form at depths far beyond materialization.
  SubstitutionFamily fam(4);
  const int s = fam.add(a4.images);
  CHECK(fam.certify(FreeWord::generator(3)));
  std::vector<Int> c = fam.counts(FreeWord::generator(3));
  for (int m = 0; m < 40; ++m) c = fam.advance(s, c);
  CHECK(SubstitutionFamily::total(c) == staircase_length(4, 4, 40));
  CHECK(fam.composed_length(std::vector<int>(500, s),
                            FreeWord::generator(3)) ==
        staircase_length(4, 4, 500));
}

TEST_CASE("witness sizes of the mapping torus") {
  const WitnessSize w23 = staircase_witness(2, 3);
  CHECK(w23.ambient == 9);
  CHECK(w23.kernel == 12);
  CHECK(staircase_witness(3, 5).kernel == Int(5) * staircase_length(3, 3, 5));

  Int prev = 0;
  for (long long n = 1; n <= 40; ++n) {
    const WitnessSize w = staircase_witness(2, n);
    CHECK(w.kernel == Int(n) * Int(n + 1));
    CHECK(w.kernel > prev);
    prev = w.kernel;
  }

  // The fitted degree of the witness tables matches the rank.
  for (int k = 2; k <= 3; ++k) {
    GrowthTable t;
    t.name = "witness";
    for (long long n = 1; n <= 200; ++n) {
      const WitnessSize w = staircase_witness(k, n);
      t.rows.push_back({n, w.ambient, w.kernel, false});
    }
    CHECK(t.monotone());
    const FitResult f = fit_growth(t);
    REQUIRE(f.ok);
    CHECK(f.depth == 0);
    CHECK(std::abs(f.slope - k) <= 0.15);
  }
}

TEST_CASE("layered growth fit identifies polynomial and exponential models") {
  GrowthTable cubic;
  for (long long x = 1; x <= 16; ++x)
    cubic.rows.push_back({x, x, Int(x) * x * x, false});
  FitResult f = fit_growth(cubic);
  REQUIRE(f.ok);
  CHECK(f.depth == 0);
  CHECK(std::abs(f.slope - 3.0) <= 0.1);

  GrowthTable doubling;
  for (long long x = 1; x <= 16; ++x)
    doubling.rows.push_back({x, x, ipow(2, x), false});
  f = fit_growth(doubling);
  REQUIRE(f.ok);
  CHECK(f.depth == 1);
  CHECK(std::abs(f.slope - 1.0) <= 0.1);
  CHECK(std::abs(f.base - 2.0) <= 0.1);

  GrowthTable constant;
  for (long long x = 1; x <= 10; ++x)
    constant.rows.push_back({x, x, Int(7), false});
  f = fit_growth(constant);
  REQUIRE(f.ok);
  CHECK(f.constant);
  CHECK(f.depth == 0);

  GrowthTable tiny;
  for (long long x = 1; x <= 5; ++x)
    tiny.rows.push_back({x, x, Int(x), false});
  f = fit_growth(tiny);
  CHECK_FALSE(f.ok);
  CHECK(f.error.find("too few exact rows") != std::string::npos);

  // Truncated rows carry no value and never enter the fit.
  GrowthTable capped = doubling;
  for (auto& r : capped.rows)
    if (r.x >= 12) {
      r.truncated = true;
      r.length = 0;
    }
  CHECK(capped.exact_rows() == 11);
  f = fit_growth(capped);
  REQUIRE(f.ok);
  CHECK(f.depth == 1);
  CHECK(std::abs(f.base - 2.0) <= 0.1);

  // exp(quadratic): one peel leaves a polynomial layer of degree two.
  GrowthTable super;
  for (long long n = 1; n <= 16; ++n)
    super.rows.push_back({n, n, ipow(3, n * (n + 1)), false});
  f = fit_growth(super);
  REQUIRE(f.ok);
  CHECK(f.depth == 1);
  CHECK(std::abs(f.slope - 2.0) <= 0.25);
  CHECK(f.base > 1.0);

  // Values far beyond double range still fit through log_big.
  GrowthTable huge;
  for (long long x = 1; x <= 2000; ++x)
    huge.rows.push_back({x, x, ipow(2, x), false});
  f = fit_growth(huge);
  REQUIRE(f.ok);
  CHECK(f.depth == 1);
  CHECK(std::abs(f.slope - 1.0) <= 0.1);
  CHECK(std::abs(f.base - 2.0) <= 0.1);
}

TEST_CASE("big integer logarithm") {
  CHECK(log_big(1) == 0.0);
  for (long long v : {2ll, 3ll, 97ll, 1000000ll, 123456789ll})
    CHECK(std::abs(log_big(Int(v)) - std::log(double(v))) < 1e-9);
  CHECK(std::abs(log_big(ipow(2, 1000)) - 1000 * std::log(2.0)) < 1e-6);
  CHECK(std::abs(log_big(ipow(10, 400)) - 400 * std::log(10.0)) < 1e-6);
  CHECK_THROWS_AS(log_big(Int(0)), std::invalid_argument);
  CHECK_THROWS_AS(log_big(Int(-5)), std::invalid_argument);
}

TEST_CASE("orbit growth of the extracted one-level monodromy") {
  const SemidirectAction& action = pipeline1().monodromy.action;

  // Tight cap: the backward direction exceeds it one step before the
  // forward one, which keeps that row exact (the cap certifies the
  // backward length lies above the forward one).
  GrowthTable t = monodromy_orbit_table(action, 0, 6, 1 << 20);
  REQUIRE(t.rows.size() == 6);
  CHECK(t.rows[0].length == 31);
  CHECK(t.rows[1].length == 1009);
  CHECK(t.rows[2].length == 27055);
  CHECK(t.rows[3].length == 718769);
  CHECK_FALSE(t.rows[3].truncated);
  CHECK(t.rows[4].truncated);
  CHECK(t.rows[5].truncated);
  CHECK(t.exact_rows() == 4);
  CHECK(t.monotone());
  CHECK(t.rows[1].ambient == 5);
  CHECK(upper_model_ok(t, action));
  const FitResult f = fit_growth(t);
  CHECK_FALSE(f.ok);
  CHECK(f.error.find("too few exact rows") != std::string::npos);
  CHECK(t.to_csv().find(">1048576") != std::string::npos);

  // Wider cap: both directions materialize the fourth row, then both
  // exceed the cap at the fifth, which leaves no certified minimum.
  GrowthTable t2 = monodromy_orbit_table(action, 0, 5, 1 << 23);
  CHECK(t2.rows[3].length == 718769);
  CHECK_FALSE(t2.rows[3].truncated);
  CHECK(t2.rows[4].truncated);
  CHECK(t2.exact_rows() == 4);

  CHECK_THROWS_AS(monodromy_orbit_table(action, -1, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(monodromy_orbit_table(action, action.kernel_rank, 3),
                  std::invalid_argument);
}

TEST_CASE("chain growth through a rank-two base") {
  const SemidirectAction& act1 = pipeline1().monodromy.action;
  const SemidirectAction& act2 = pipeline2().monodromy.action;

  CHECK_THROWS_AS(monodromy_orbit_table(act2, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(chain_growth_table(act1, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(chain_growth_table(act2, -1, 3), std::invalid_argument);

  const GrowthTable t = chain_growth_table(act2, 0, 3);
  REQUIRE(t.rows.size() == 3);
  CHECK_FALSE(t.rows[0].truncated);
  CHECK(t.rows[0].length == 103217);
  CHECK(t.rows[0].ambient == 5);
  CHECK(t.rows[1].truncated);
  CHECK(t.rows[1].ambient == 13);
  CHECK(t.rows[2].truncated);
  CHECK(t.exact_rows() == 1);
  CHECK(t.monotone());
  CHECK(upper_model_ok(t, act2));

  const GrowthTable small = chain_growth_table(act2, 0, 1, 100000);
  CHECK(small.rows[0].truncated);
}

TEST_CASE("growth tables serialize to csv") {
  GrowthTable t;
  t.name = "demo";
  t.cap = 1000;
  t.rows.push_back({1, 3, Int(5), false});
  t.rows.push_back({2, 5, Int(900), false});
  t.rows.push_back({3, 7, Int(0), true});
  CHECK(t.to_csv() ==
        "x,ambient_budget,kernel_length\n"
        "1,3,5\n"
        "2,5,900\n"
        "3,7,>1000\n");
  CHECK(t.exact_rows() == 2);
  CHECK(t.monotone());

  GrowthTable dec = t;
  dec.rows[1].length = 2;
  CHECK_FALSE(dec.monotone());
}
