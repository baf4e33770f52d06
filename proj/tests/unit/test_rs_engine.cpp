#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "support.hpp"
#include "tvb/presentations.hpp"
#include "tvb/rs_engine.hpp"

using namespace tvb;

namespace {

std::set<std::string> texts(const Transversal& t) {
  std::set<std::string> s;
  for (const Word& w : t.words) s.insert(F(w));
  return s;
}

const RSContext& tvp3() {
  static const RSContext ctx = make_context(KernelKind::TVP, 3);
  return ctx;
}

}  // namespace

TEST_CASE("transversals") {
  Transversal l3 = build_transversal(TransversalKind::LambdaN, 3, make_concrete_hom("phiP", 3));
  CHECK(texts(l3) == std::set<std::string>{"", "r2", "r2 r1", "r1", "r1 r2", "r1 r2 r1"});
  CHECK(l3.words.front().empty());
  CHECK(has_schreier_property(l3));

  Transversal a3 = build_transversal(TransversalKind::AN, 3, make_concrete_hom("psiP", 3));
  CHECK(a3.size() == 8);
  CHECK(texts(a3).count("g1 g2 g3") == 1);
  CHECK(texts(a3).count("g1 g3") == 1);

  Transversal la2 = build_transversal(TransversalKind::LambdaTimesAN, 2, make_concrete_hom("phiPT", 2));
  CHECK(la2.size() == 8);
  CHECK(std::set<SignedPermutation>(la2.images.begin(), la2.images.end()).size() == 8);
  CHECK(has_schreier_property(la2));

  for (int n = 2; n <= 6; ++n) {
    Transversal t = build_transversal(TransversalKind::LambdaN, n, make_concrete_hom("phiP", n));
    std::size_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
    CHECK(t.size() == f);
    CHECK(has_schreier_property(t));
  }
}

TEST_CASE("representatives") {
  const RSContext& ctx = tvp3();
  CHECK(F(representative(ctx, W("r2 r1", 3))) == "r2 r1");
  CHECK(representative(ctx, W("", 3)).empty());
  CHECK(F(representative(ctx, W("s1", 3))) == "r1");
  CHECK(F(representative(ctx, W("g1 s2 g3", 3))) == "r2");
}

TEST_CASE("Schreier generators") {
  const RSContext& ctx = tvp3();
  Word e = W("", 3);
  CHECK(schreier_generator(ctx, e, Atom::rho(1)).empty());
  CHECK(F(schreier_generator(ctx, e, Atom::sigma(1))) == "s1 r1");
  CHECK(F(schreier_generator(ctx, e, Atom::gamma(2))) == "g2");

  CHECK(classify_generator(ctx, e, Atom::sigma(1)) == Atom::lambda(1, 2, -1));
  CHECK(classify_generator(ctx, W("r1", 3), Atom::gamma(1)) == Atom::gamma(2));
  CHECK(!classify_generator(ctx, e, Atom::rho(1)).has_value());

  RSContext pl = make_context(KernelKind::PL, 3);
  CHECK(classify_generator(pl, W("g1", 3, Alphabet::PureTwisted), Atom::lambda(1, 2)) ==
        Atom::lambda(1, 2, 1, true, false));
}

TEST_CASE("tau") {
  CHECK(F(rewrite_tau(make_context(KernelKind::TVP, 2), W("g1 g1", 2))) == "g1 g1");
  CHECK(F(rewrite_tau(tvp3(), W("s1 g3 s1^-1 g3", 3))) == "l1,2^-1 g3 l1,2 g3");
  CHECK(F(rewrite_tau(tvp3(), W("r1 s1 r1 g2 g1 s1^-1 g1 g2", 3))) == "l2,1^-1 g1 g2 l1,2 g1 g2");
  CHECK(F(rewrite_tau(tvp3(), W("g1 g2 g1 g2", 3))) == "g1 g2 g1 g2");
  CHECK(F(rewrite_tau(make_context(KernelKind::PL, 3), W("g1 l1,2 g1", 3, Alphabet::PureTwisted))) == "l1,2:1");
  CHECK_THROWS_AS((void)rewrite_tau(tvp3(), W("s1", 3)), NotInKernel);

  // raw output keeps the letters before free cancellation
  TauResult full = rewrite_tau_full(tvp3(), W("s1 s1^-1", 3));
  CHECK(full.normalized.empty());
}

TEST_CASE("derived presentations at n = 2") {
  for (auto [kind, family] : {std::pair{KernelKind::TVP, "tvpn"}, std::pair{KernelKind::TVH, "tvhn"}}) {
    auto derived = relator_words(derive_relators(make_context(kind, 2)));
    auto d = diff_relator_sets(derived, build_presentation(family, 2).relator_words());
    CHECK(d.only_left.empty());
    CHECK(d.only_right.empty());
  }
}

TEST_CASE("provenance lines") {
  auto rels = derive_relators(tvp3());
  REQUIRE(!rels.empty());
  std::string line = format_provenance(rels.front());
  CHECK(line.rfind("relator r1 from=", 0) == 0);
  CHECK(line.find(" conj=") != std::string::npos);
  CHECK(line.find(" word=") != std::string::npos);
}

TEST_CASE("split") {
  RSContext p2 = make_context(KernelKind::TVP, 2);
  auto [k, t] = split(p2, W("s1", 2));
  CHECK(F(k) == "s1 r1");
  CHECK(F(t) == "r1");

  for (const Word& w : tvp3().transversal.words) {
    auto [k2, t2] = split(tvp3(), w);
    CHECK(k2.empty());
    CHECK(t2 == w);
  }

  RSContext pt = make_context(KernelKind::PT, 2);
  auto [k3, t3] = split(pt, W("g1 s1", 2));
  CHECK(pt.quotient.image(k3).is_identity());
  CHECK(pt.transversal.contains(t3));
  CHECK(pt.quotient.image(t3) == pt.quotient.image(W("g1 s1", 2)));
}

TEST_CASE("kernel names") {
  CHECK(parse_kernel_kind("hl") == KernelKind::HL);
  CHECK(to_string(KernelKind::PT) == "pt");
  CHECK_THROWS((void)parse_kernel_kind("tvq"));
}
