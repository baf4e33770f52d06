#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "tvb/conj.hpp"
#include "tvb/published_tables.hpp"
#include "tvb/relator_key.hpp"

using namespace tvb;

TEST_CASE("S_n action") {
  CHECK(act_sn(W("r1", 2), Atom::lambda(1, 2)) == Atom::lambda(2, 1));
  CHECK(act_sn(W("r2", 3), Atom::gamma(2)) == Atom::gamma(3));
  CHECK(act_sn(W("", 3), Atom::x(1, 3)) == Atom::x(1, 3));
}

TEST_CASE("gamma action") {
  CHECK(act_gamma(1, Atom::lambda(1, 2)) == Atom::lambda(1, 2, 1, true, false));
  CHECK(canonical(Atom::lambda(2, 1, 1, false, true)) == Atom::lambda(1, 2, 1, false, true));
  CHECK(act_gamma(3, Atom::lambda(1, 2)) == Atom::lambda(1, 2));
  CHECK(act_gamma(2, act_gamma(2, Atom::x(2, 3))) == Atom::x(2, 3));
  CHECK(canonical(Atom::lambda(2, 1)) == Atom::lambda(1, 2, 1, true, true));
}

TEST_CASE("pushing gammas right") {
  auto [d1, s1] = normalize_decorated(W("g1 l1,2 g1", 3, Alphabet::PureTwisted));
  CHECK(F(d1) == "l1,2:1");
  CHECK(s1.empty());

  auto [d2, s2] = normalize_decorated(W("l1,2 g3", 3, Alphabet::PureTwisted));
  CHECK(F(d2) == "l1,2");
  CHECK(F(s2) == "g3");

  auto [d3, s3] = normalize_decorated(W("g2 g1", 3, Alphabet::PureTwisted));
  CHECK(d3.empty());
  CHECK(F(s3) == "g1 g2");
}

TEST_CASE("orbits") {
  Word tri = W("l1,2 l1,3 l2,3 l1,2^-1 l1,3^-1 l2,3^-1", 3, Alphabet::PureTwisted);
  auto orbit = conjugation_orbit(tri, 3);
  Word full = W("l1,2:12 l1,3:13 l2,3:23 l1,2:12^-1 l1,3:13^-1 l2,3:23^-1", 3, Alphabet::DecoratedPL);
  bool found = false;
  for (const Word& w : orbit) found = found || relator_key(w) == relator_key(full);
  CHECK(found);

  Word comm = W("l1,2 l3,4 l1,2^-1 l3,4^-1", 4, Alphabet::PureTwisted);
  CHECK(conjugation_orbit(comm, 4).size() == 16);

  auto trivial = conjugation_orbit(tri, 3, {0u});
  REQUIRE(trivial.size() == 1);
  CHECK(relator_key(trivial[0]) == relator_key(tri));
}

TEST_CASE("identified generators") {
  for (int n = 2; n <= 5; ++n) {
    auto lines = check_generator_identification(n);
    CHECK(lines.size() == static_cast<std::size_t>(3 * n * (n - 1)));
    for (const auto& l : lines) {
      INFO(l.lhs << " vs " << l.rhs);
      CHECK(l.pass);
    }
  }
  auto two = check_generator_identification(2);
  CHECK(two[0].lhs == "l2,1:2");
  CHECK(two[0].rhs == "l1,2:1");
  CHECK(two[3].lhs == "x2,1:2");
  CHECK(two[3].rhs == "x1,2:1");
}

TEST_CASE("transcribed PL table") {
  CHECK(pl_commutation_schemas().size() == 16);
  CHECK(pl_triple_schemas().size() == 24);
  TranscribedTable t = transcribed_pl_table(3);
  CHECK(t.relators.size() == 23);
  REQUIRE(t.rejected.size() == 1);
  CHECK(t.rejected[0].label == "pl-triple:22");
  CHECK(displayed_pl3_relators().size() == 6);
  CHECK_THROWS_AS((void)instantiate_schema("ij:k = ij:k", 3, {1, 2, 3}), std::invalid_argument);
}
