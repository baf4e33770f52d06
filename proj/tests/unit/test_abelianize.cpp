#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tvb/abelianize.hpp"
#include "tvb/presentations.hpp"
#include "tvb/verify.hpp"

using namespace tvb;

namespace {

std::vector<Integer> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("relation matrices") {
  IntegerMatrix m = relation_matrix(build_presentation("tvpn", 1));
  CHECK(m.rows == 1);
  CHECK(m.cols == 1);
  CHECK(m.at(0, 0) == 2);

  Presentation p = build_presentation("tvpn", 2);  // l1,2 l2,1 g1 g2
  IntegerMatrix q = relation_matrix(p);
  REQUIRE(q.rows == 4);
  // rows: g1^2, g2^2, [g1, g2], l1,2 (g1 g2 l2,1 g2 g1)^-1
  CHECK(q.at(2, 2) == 0);
  CHECK(q.at(2, 3) == 0);
  CHECK(q.at(3, 0) == 1);
  CHECK(q.at(3, 1) == -1);
  CHECK(q.at(3, 2) == 0);
  CHECK(q.at(3, 3) == 0);
}

TEST_CASE("Smith normal form") {
  SmithForm a = smith_normal_form(IntegerMatrix{{2, 0}, {0, 3}});
  CHECK(a.factors == ints({1, 6}));
  CHECK(a.rank == 2);

  SmithForm z = smith_normal_form(IntegerMatrix(2, 3));
  CHECK(z.factors.empty());
  CHECK(z.rank == 0);

  CHECK(smith_normal_form(IntegerMatrix{{2}}).factors == ints({2}));
  CHECK(smith_normal_form(IntegerMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).factors == ints({2, 6, 12}));
  CHECK(smith_normal_form(IntegerMatrix{{0, 0}, {0, -5}}).factors == ints({5}));
}

TEST_CASE("Smith normal form agrees with minors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntegerMatrix m(r, c);
    for (auto& x : m.data) x = static_cast<long long>(rng() % 7) - 3;
    SmithForm s = smith_normal_form(m);
    REQUIRE(s.factors == determinantal_factors(m));
    for (std::size_t k = 1; k < s.factors.size(); ++k) REQUIRE(s.factors[k] % s.factors[k - 1] == 0);
  }
}

TEST_CASE("invariants") {
  AbelianInvariants p3 = abelian_invariants(build_presentation("tvpn", 3));
  CHECK(p3.free_rank == 3);
  CHECK(p3.torsion == ints({2, 2, 2}));
  CHECK(p3.format() == "Z^3 + Z_2^3");

  AbelianInvariants h3 = abelian_invariants(build_presentation("tvhn", 3));
  CHECK(h3.free_rank == 1);
  CHECK(h3.torsion == ints({2, 2, 2}));

  AbelianInvariants p2 = abelian_invariants(build_presentation("tvpn", 2));
  AbelianInvariants h2 = abelian_invariants(build_presentation("tvhn", 2));
  CHECK(p2 == h2);
  CHECK(p2.format() == "Z^1 + Z_2^2");

  CHECK(!same_invariants(p3, h3));
  CHECK(same_invariants(p2, h2));
  CHECK(same_invariants(p3, p3));

  CHECK(invariants_of(IntegerMatrix{{1}}).format() == "0");
  CHECK(abelian_invariants(build_presentation("tvpn-reduced", 3)) == p3);
}
