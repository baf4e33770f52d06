#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "tvb/presentations.hpp"
#include "tvb/published_tables.hpp"
#include "tvb/relator_key.hpp"

using namespace tvb;

namespace {

std::set<RelatorKey> keys(const std::vector<std::string>& texts, int n, Alphabet a) {
  std::vector<Word> ws;
  for (const auto& t : texts) ws.push_back(W(t, n, a));
  return relator_set(ws);
}

}  // namespace

TEST_CASE("TVP_1") {
  Presentation p = build_presentation("tvpn", 1);
  CHECK(p.generators.size() == 1);
  CHECK(p.relators.size() == 1);
}

TEST_CASE("TVP_2") {
  Presentation p = build_presentation("tvpn", 2);
  CHECK(p.generators ==
        std::vector<Atom>{Atom::lambda(1, 2), Atom::lambda(2, 1), Atom::gamma(1), Atom::gamma(2)});
  CHECK(relator_set(p.relator_words()) ==
        keys({"g1 g1", "g2 g2", "g1 g2 g1 g2", "l1,2 g1 g2 l2,1^-1 g2 g1"}, 2, Alphabet::PureTwisted));
  CHECK(format_presentation(p) ==
        "tvpn n=2\ngen l1,2\ngen l2,1\ngen g1\ngen g2\nrel g1 g1\nrel g2 g2\nrel g1 g2 g1 g2\n"
        "rel l1,2 g1 g2 l2,1^-1 g2 g1\n");
}

TEST_CASE("TVB_2 has no braid or far commutation relators") {
  Presentation p = build_presentation("tvbn", 2);
  CHECK(relator_set(p.relator_words()) ==
        keys({"g1 g1", "g2 g2", "g1 g2 g1 g2", "r1 r1", "r1 g1 r1 g2", "r1 s1 r1 g2 g1 s1^-1 g1 g2"}, 2,
             Alphabet::Ambient));
}

TEST_CASE("generator expressions") {
  CHECK(F(generator_expression(Atom::lambda(1, 2), 2)) == "r1 s1^-1");
  CHECK(F(generator_expression(Atom::x(2, 1), 2)) == "r1 s1 r1");
  CHECK(F(generator_expression(Atom::lambda(1, 3), 3)) == "r2 r1 s1^-1 r2");
}

TEST_CASE("elimination") {
  Presentation p = build_presentation("tvpn", 2);
  Presentation q = eliminate_generators(p, pair_elimination_rule(p));
  CHECK(q.generators == std::vector<Atom>{Atom::lambda(1, 2), Atom::gamma(1), Atom::gamma(2)});
  CHECK(relator_set(q.relator_words()) == keys({"g1 g1", "g2 g2", "g1 g2 g1 g2"}, 2, Alphabet::PureTwisted));

  Presentation same = eliminate_generators(p, {});
  CHECK(same.generators == p.generators);
  CHECK(relator_multiset(same.relator_words()) == relator_multiset(p.relator_words()));
}

TEST_CASE("reduced TVP_3 against the displayed presentation") {
  Presentation q = build_presentation("tvpn-reduced", 3);
  CHECK(q.generators.size() == 6);
  Presentation shown = displayed_tvp3_presentation();
  CHECK(relator_multiset(q.relator_words()) == relator_multiset(shown.relator_words()));
}

TEST_CASE("relator keys") {
  CHECK(relator_key(W("s1 s1^-1", 2)).trivial());
  CHECK(!relator_key(W("g1 g1", 2)).trivial());
  CHECK(relator_key(W("s1 r1 g1", 2)) == relator_key(W("g1 r1^-1 s1^-1", 2)));
  CHECK(relator_key(W("l1,2 g2 g1", 2, Alphabet::PureTwisted)) ==
        relator_key(W("g1 g2 l1,2", 2, Alphabet::PureTwisted)));
}

TEST_CASE("unknown family") {
  CHECK_THROWS_AS((void)build_presentation("nope", 3), UnknownFamily);
}

TEST_CASE("json dump") {
  std::string j = presentation_json(build_presentation("tvpn", 2));
  CHECK(j.find("\"family\"") != std::string::npos);
  CHECK(j.find("l2,1") != std::string::npos);
}
