#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "tvb/homomorphisms.hpp"
#include "tvb/quotients.hpp"

using namespace tvb;

TEST_CASE("composition applies the left factor first") {
  Permutation c = compose(Permutation::transposition(3, 1, 2), Permutation::transposition(3, 2, 3));
  // 1 -> 2 -> 3, 2 -> 1 -> 1, 3 -> 3 -> 2
  CHECK(c(1) == 3);
  CHECK(c(2) == 1);
  CHECK(c(3) == 2);
  CHECK(c.to_string() == "[3,1,2]");

  Permutation x = Permutation::transposition(4, 2, 4);
  CHECK(compose(x, Permutation::identity(4)) == x);
  CHECK(compose(SignedPermutation::flip(3, 1), SignedPermutation::flip(3, 1)).is_identity());
}

TEST_CASE("signed permutation text form") {
  SignedPermutation s = compose(SignedPermutation::transposition(3, 1, 2), SignedPermutation::flip(3, 2));
  CHECK(parse_signed_permutation(s.to_string()) == s);
  CHECK(SignedPermutation::transposition(3, 1, 2).to_string() == "[2,1,3|0,0,0]");
  CHECK(parse_permutation("[2,3,1]").inverse() == parse_permutation("[3,1,2]"));
}

TEST_CASE("word images") {
  ConcreteHom phiP = make_concrete_hom("phiP", 3);
  CHECK(phiP.image(W("g1 g2", 3)).is_identity());
  CHECK(phiP.image(W("s1", 3)) == SignedPermutation::transposition(3, 1, 2));
  CHECK(make_concrete_hom("phiPT", 2).image(W("r1 g1 r1 g2", 2)).is_identity());
}

TEST_CASE("closures") {
  auto t = Permutation::transposition(2, 1, 2);
  CHECK(enumerate_closure(std::vector<Permutation>{t}, Permutation::identity(2), 10).size() == 2);
  CHECK(enumerate_closure(std::vector<Permutation>{}, Permutation::identity(2), 10).size() == 1);

  std::vector<SignedPermutation> gens{SignedPermutation::transposition(3, 1, 2), SignedPermutation::transposition(3, 2, 3)};
  for (int j = 1; j <= 3; ++j) gens.push_back(SignedPermutation::flip(3, j));
  CHECK(enumerate_closure(gens, SignedPermutation::identity(3), 1000).size() == 48);
  CHECK_THROWS_AS((void)enumerate_closure(gens, SignedPermutation::identity(3), 47), ClosureBoundExceeded);
}

TEST_CASE("affine elements") {
  auto a = AffineSignedPermutation::translation({1, -1, 0});
  CHECK(compose(a, a.inverse()).is_identity());
  CHECK(!a.is_identity());
}
