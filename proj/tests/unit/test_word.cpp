#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace tvb;

TEST_CASE("parse maps tokens to atoms") {
  Word w = W("s1 r2 g3", 3);
  REQUIRE(w.size() == 3);
  CHECK(w[0] == Atom::sigma(1));
  CHECK(w[1] == Atom::rho(2));
  CHECK(w[2] == Atom::gamma(3));

  Word inv = W("s1^-1", 2);
  REQUIRE(inv.size() == 1);
  CHECK(inv[0] == Atom::sigma(1, -1));

  Word d = W("l1,2:12 g1", 3, Alphabet::PureTwisted);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == Atom::lambda(1, 2, 1, true, true));
  CHECK(d[1] == Atom::gamma(1));
}

TEST_CASE("parse rejects bad input") {
  CHECK_THROWS_AS(W("q1", 3), ParseError);
  CHECK_THROWS_AS(W("s3", 3), ParseError);
  CHECK_THROWS_AS(W("g4", 3), ParseError);
  CHECK_THROWS_AS(W("l1,2", 3), ParseError);
  CHECK_THROWS_AS(W("l1,1", 3, Alphabet::PureTwisted), ParseError);
  CHECK_THROWS_AS(W("l1,2:3", 3, Alphabet::PureTwisted), ParseError);
  CHECK_THROWS_AS(W("x1,2", 3, Alphabet::PureTwisted), ParseError);
  CHECK_THROWS_AS(W("s1^2", 3), ParseError);
}

TEST_CASE("reduce") {
  CHECK(reduce(W("s1 s1^-1", 2)).empty());
  CHECK(reduce(W("g2 g2", 3)).empty());
  CHECK(reduce(W("r1 s2 s2^-1 r1", 3)).empty());
  CHECK(F(reduce(W("g2 g2 s1", 3))) == "s1");
  CHECK(F(reduce(W("s1 s1^-1 r2", 3))) == "r2");
  CHECK(F(reduce(W("r1^-1", 2))) == "r1");
  CHECK(F(reduce(W("s1 s1", 2))) == "s1 s1");
}

TEST_CASE("invert") {
  CHECK(F(invert(W("s1 g2", 3))) == "g2 s1^-1");
  CHECK(invert(W("", 3)).empty());
  CHECK(F(invert(W("l1,2^-1", 2, Alphabet::PureTwisted))) == "l1,2");
}

TEST_CASE("conjugate") {
  CHECK(F(conjugate(W("g1", 2), W("r1", 2))) == "r1 g1 r1");
  CHECK(conjugate(W("s1 g2 s1", 3), W("", 3)) == reduce(W("s1 g2 s1", 3)));
  CHECK(F(conjugate(W("s1", 2), W("s1", 2))) == "s1");
}

TEST_CASE("format") {
  CHECK(F(W("", 2)).empty());
  CHECK(F(W("s1^-1", 2)) == "s1^-1");
  CHECK(F(W("l1,2:1", 2, Alphabet::PureTwisted)) == "l1,2:1");
  CHECK(F(W("x2,3:23^-1 g1", 3, Alphabet::HTwisted)) == "x2,3:23^-1 g1");
}

TEST_CASE("rank mismatch") {
  CHECK_THROWS_AS((void)concat(W("s1", 2), W("s1", 3)), RankMismatch);
}

TEST_CASE("reduce is idempotent and cancels inverses on random words") {
  std::mt19937_64 rng(1729);
  const char* letters[] = {"s", "r", "g"};
  for (int trial = 0; trial < 10000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::size_t len = rng() % 16;
    std::string text;
    for (std::size_t k = 0; k < len; ++k) {
      int kind = static_cast<int>(rng() % 3);
      int idx = 1 + static_cast<int>(rng() % static_cast<unsigned>(kind == 2 ? n : n - 1));
      text += std::string(k ? " " : "") + letters[kind] + std::to_string(idx) + (kind == 0 && rng() % 2 ? "^-1" : "");
    }
    Word w = W(text, n);
    Word r = reduce(w);
    REQUIRE(reduce(r) == r);
    REQUIRE(r.size() <= w.size());
    REQUIRE((w.size() - r.size()) % 2 == 0);
    REQUIRE(reduce(concat(w, invert(w))).empty());
    REQUIRE(W(F(r), n) == r);
  }
}
