#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "npcx/words.hpp"

using namespace npcx;

namespace {

FreeWord from_letters(const std::vector<int>& letters) {
  // Positive g means generator g-1, negative g its inverse.
  FreeWord w;
  for (int g : letters) {
    REQUIRE(g != 0);
    w.push(g > 0 ? g - 1 : -g - 1, g > 0 ? 1 : -1);
  }
  return w;
}

FreeWord random_word(std::mt19937_64& rng, int rank, int letters) {
  std::uniform_int_distribution<int> gen(0, rank - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  FreeWord w;
  for (int i = 0; i < letters; ++i) w.push(gen(rng), sign(rng) ? 1 : -1);
  return w;
}

const std::vector<std::string> kXY = {"x", "y"};

}  // namespace

TEST_CASE("free reduction while pushing") {
  FreeWord w;
  CHECK(w.empty());
  CHECK(w.length() == 0);

  w.push(0, 3);
  w.push(0, -1);  // merges into x^2
  w.push(1, 2);
  CHECK(w.length() == 4);
  CHECK(w.runs() == std::vector<FreeWord::Run>{{0, 2}, {1, 2}});

  w.push(1, -2);  // cancels the y-run entirely
  w.push(0, -2);  // then the x-run
  CHECK(w.empty());

  // Cancellation cascades across runs: x y y^-1 x^-1.
  FreeWord v = from_letters({1, 2, -2, -1});
  CHECK(v.empty());

  CHECK(FreeWord::generator(4, -3).length() == 3);
  CHECK(FreeWord::generator(4, 0).empty());
}

TEST_CASE("concat, inverse, power, conjugate") {
  FreeWord xy = from_letters({1, 2});
  FreeWord yinvz = from_letters({-2, 3});

  CHECK(concat(xy, yinvz) == from_letters({1, 3}));
  CHECK(concat(xy, inverse(xy)).empty());
  CHECK(inverse(xy) == from_letters({-2, -1}));
  CHECK(inverse(concat(xy, yinvz)) ==
        concat(inverse(yinvz), inverse(xy)));

  CHECK(power(xy, 0).empty());
  CHECK(power(xy, 1) == xy);
  CHECK(power(xy, -1) == inverse(xy));
  CHECK(power(xy, 3) == from_letters({1, 2, 1, 2, 1, 2}));
  CHECK(power(FreeWord::generator(0), 40) == FreeWord::generator(0, 40));

  // Powers of a conjugate peel the conjugator instead of blowing up:
  // (c x c^-1)^e = c x^e c^-1 even when c is long.
  FreeWord c = from_letters({2, 1, 3, -2, 1});
  FreeWord w = concat(concat(c, FreeWord::generator(0)), inverse(c));
  CHECK(power(w, 5) ==
        concat(concat(c, FreeWord::generator(0, 5)), inverse(c)));
  CHECK(power(w, -7) ==
        concat(concat(c, FreeWord::generator(0, -7)), inverse(c)));
  CHECK(power(w, 1) == w);

  CHECK(conjugate(c, FreeWord::generator(0)) ==
        concat(concat(c, FreeWord::generator(0)), inverse(c)));

  CHECK(first_letter(w) == FreeWord::Run{1, 1});
  CHECK(first_letter(inverse(xy)) == FreeWord::Run{1, -1});
  CHECK(first_letter(FreeWord::generator(2, -4)) == FreeWord::Run{2, -1});

  CHECK_THROWS_AS(power(xy, 1'000'000'000'000LL), WordCapError);
  CHECK_THROWS_AS(concat(FreeWord::generator(0, kDefaultWordCap),
                         FreeWord::generator(0, kDefaultWordCap)),
                  WordCapError);
}

TEST_CASE("word order is by length then runs") {
  CHECK(FreeWord() < FreeWord::generator(0));
  CHECK(FreeWord::generator(1) < FreeWord::generator(0, 2));
  CHECK(from_letters({1, 2}) < from_letters({2, 1}));
  CHECK_FALSE(from_letters({1, 2}) < from_letters({1, 2}));
}

TEST_CASE("substitution is a homomorphism") {
  // x -> x y, y -> y on F_2.
  std::vector<FreeWord> images = {from_letters({1, 2}), from_letters({2})};

  CHECK(substitute(images, from_letters({1})) == from_letters({1, 2}));
  CHECK(substitute(images, from_letters({-1})) == from_letters({-2, -1}));
  CHECK(substitute(images, from_letters({1, -2, -1})) ==
        from_letters({1, -2, -1}));
  CHECK(substitute(images, FreeWord()).empty());
  CHECK(substitute(images, FreeWord::generator(0, 3)) ==
        power(from_letters({1, 2}), 3));

  std::mt19937_64 rng(20260814);
  for (int trial = 0; trial < 50; ++trial) {
    FreeWord a = random_word(rng, 2, 12);
    FreeWord b = random_word(rng, 2, 12);
    CHECK(substitute(images, concat(a, b)) ==
          concat(substitute(images, a), substitute(images, b)));
    CHECK(substitute(images, inverse(a)) == inverse(substitute(images, a)));
  }

  CHECK_THROWS_AS(substitute(images, FreeWord::generator(2)),
                  std::invalid_argument);
  std::vector<FreeWord> doubling = {FreeWord::generator(0, 2)};
  CHECK_THROWS_AS(
      substitute(doubling, FreeWord::generator(0, kDefaultWordCap)),
      WordCapError);
}

TEST_CASE("word text round trips") {
  CHECK(word_str(FreeWord(), kXY) == "1");
  CHECK(parse_word("1", kXY).empty());

  FreeWord w = from_letters({1, 1, -2, 1});
  CHECK(word_str(w, kXY) == "x+^2 y- x+");
  CHECK(parse_word("x+^2 y- x+", kXY) == w);
  CHECK(parse_word(word_str(inverse(w), kXY), kXY) == inverse(w));

  // Unreduced input text still parses to the reduced word.
  CHECK(parse_word("x+ x- y+", kXY) == from_letters({2}));

  CHECK_THROWS_AS(parse_word("", kXY), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("x", kXY), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("z+", kXY), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("x+^", kXY), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("x+^-2", kXY), std::invalid_argument);
}

TEST_CASE("automorphisms and verified inverses") {
  // x -> x y, y -> y with inverse x -> x y^-1, y -> y.
  FreeAutomorphism a;
  a.rank = 2;
  a.images = {from_letters({1, 2}), from_letters({2})};
  a.inverse_images = {from_letters({1, -2}), from_letters({2})};
  CHECK(verify_inverse(a));

  FreeWord w = from_letters({1, 2, -1});
  CHECK(apply_automorphism(a, w) == from_letters({1, 2, 2, -2, -1}));

  FreeAutomorphism broken = a;
  broken.inverse_images[0] = from_letters({1, 2});
  CHECK_FALSE(verify_inverse(broken));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    FreeWord v = random_word(rng, 2, 16);
    FreeWord round =
        apply_automorphism(a, substitute(a.inverse_images, v));
    CHECK(round == v);
  }
}

TEST_CASE("semidirect products act through the base") {
  // F_2 x| F_1 with t acting by x -> x y, y -> y.
  SemidirectAction s;
  s.kernel_rank = 2;
  s.base_rank = 1;
  FreeAutomorphism a;
  a.rank = 2;
  a.images = {from_letters({1, 2}), from_letters({2})};
  a.inverse_images = {from_letters({1, -2}), from_letters({2})};
  s.phi = {a};

  FreeWord t = FreeWord::generator(0);
  FreeWord x = from_letters({1});

  CHECK(act(s, t, x) == from_letters({1, 2}));
  CHECK(act(s, power(t, 2), x) == from_letters({1, 2, 2}));
  CHECK(act(s, inverse(t), x) == from_letters({1, -2}));
  CHECK(act(s, FreeWord(), x) == x);

  SemidirectElement tx{x, t};
  SemidirectElement id{};
  CHECK(id.trivial());
  CHECK(sd_mult(s, tx, id) == tx);
  CHECK(sd_mult(s, id, tx) == tx);
  CHECK(sd_mult(s, tx, sd_inverse(s, tx)).trivial());
  CHECK(sd_mult(s, sd_inverse(s, tx), tx).trivial());

  // (w1, b1)(w2, b2) = (w1 phi_b1(w2), b1 b2).
  SemidirectElement yt{from_letters({2}), inverse(t)};
  SemidirectElement prod = sd_mult(s, tx, yt);
  CHECK(prod.base.empty());
  CHECK(prod.kernel == concat(x, act(s, t, from_letters({2}))));

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    SemidirectElement g{random_word(rng, 2, 8), random_word(rng, 1, 4)};
    SemidirectElement h{random_word(rng, 2, 8), random_word(rng, 1, 4)};
    SemidirectElement k{random_word(rng, 2, 8), random_word(rng, 1, 4)};
    CHECK(sd_mult(s, sd_mult(s, g, h), k) ==
          sd_mult(s, g, sd_mult(s, h, k)));
    CHECK(sd_mult(s, g, sd_inverse(s, g)).trivial());
  }
}
