#include "tvb/verify.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tvb/conj.hpp"
#include "tvb/homomorphisms.hpp"
#include "tvb/published_tables.hpp"
#include "tvb/rs_engine.hpp"

namespace tvb {

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {
      "well-defined",  "extended-symmetric", "schreier", "rewriting",  "presentation-roundtrip", "pl-derivation",
      "abelianization", "endomorphism",      "exactness", "semidirect", "conjugation"};
  return ids;
}

Word random_word(std::mt19937_64& rng, const Presentation& ambient, std::size_t max_length) {
  std::size_t len = static_cast<std::size_t>(rng() % (max_length + 1));
  std::vector<Atom> out;
  for (std::size_t k = 0; k < len; ++k) {
    Atom a = ambient.generators[static_cast<std::size_t>(rng() % ambient.generators.size())];
    if (!a.is_involution() && (rng() & 1)) a = a.inverse();
    out.push_back(a);
  }
  return {ambient.rank, ambient.alphabet, std::move(out)};
}

namespace {

Integer determinant(std::vector<std::vector<Integer>> a) {
  // Bareiss elimination, exact over the integers
  const std::size_t n = a.size();
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Integer> determinantal_factors(const IntegerMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows, m.cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows, k, 0, cur, rs);
    subsets(m.cols, k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<Integer>> minor(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = m.at(r[i], c[j]);
        g = gcd(g, abs(determinant(std::move(minor))));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

namespace {

// Collects the first failure of a check.
struct Acc {
  std::size_t checked = 0;
  std::string first;
  void expect(bool cond, const std::function<std::string()>& what) {
    ++checked;
    if (!cond && first.empty()) first = what();
  }
};

CheckReport finish(const std::string& id, int n, const Acc& acc, const std::string& details) {
  CheckReport r{id, n, acc.first.empty() ? Status::Pass : Status::Fail, details, acc.first, 0};
  return r;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::string describe(const RelatorDiff& d) {
  std::string s = std::to_string(d.only_left.size()) + " only derived, " + std::to_string(d.only_right.size()) +
                  " only listed";
  if (!d.only_left.empty()) s += "; first derived-only " + format_key(d.only_left[0]);
  if (!d.only_right.empty()) s += "; first listed-only " + format_key(d.only_right[0]);
  return s;
}

std::vector<Word> words_of(const std::vector<Relator>& rels) {
  std::vector<Word> out;
  for (const Relator& r : rels) out.push_back(r.word);
  return out;
}

struct Fingerprint {
  SignedPermutation pt;
  AffineSignedPermutation ap;
  int sigma = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Word& tvb_word) {
  int sigma = 0;
  for (const Atom& a : tvb_word)
    if (a.kind == Kind::Sigma) sigma += a.sign;
  return {make_concrete_hom("phiPT", tvb_word.rank()).image(tvb_word), AffineHom(tvb_word.rank()).image(tvb_word), sigma};
}

std::vector<SignedPermutation> generator_images(const ConcreteHom& h, const Presentation& p) {
  std::vector<SignedPermutation> out;
  for (const Atom& a : p.generators) out.push_back(h.atom_image(a));
  return out;
}

// ---------------------------------------------------------------------------

CheckReport well_defined(int n) {
  Acc acc;
  std::size_t lines = 0;
  for (const std::string& name : hom_names()) {
    WellDefinedReport r = check_well_defined(make_hom(name, n));
    lines += r.lines.size();
    for (const CheckLine& l : r.lines) acc.expect(l.pass, [&] { return name + " " + l.id + " maps to " + l.detail; });
  }
  WellDefinedReport aff = check_well_defined(AffineHom(n));
  lines += aff.lines.size();
  for (const CheckLine& l : aff.lines) acc.expect(l.pass, [&] { return "affP " + l.id + " maps to " + l.detail; });
  return finish("well-defined", n, acc,
                std::to_string(hom_names().size() + 1) + " maps, " + std::to_string(lines) + " relator images");
}

CheckReport extended_symmetric(int n) {
  Acc acc;
  const std::uint64_t expected = factorial(n) << n;
  Presentation tvb = build_presentation("tvbn", n);
  std::size_t pt_size = 0;
  for (const char* name : {"phiPT", "phiHT"}) {
    ConcreteHom h = make_concrete_hom(name, n);
    auto closure = enumerate_closure(generator_images(h, tvb), h.identity(), static_cast<std::size_t>(expected) * 2);
    pt_size = closure.size();
    acc.expect(closure.size() == expected, [&] {
      return std::string("image of ") + name + " has " + std::to_string(closure.size()) + " elements";
    });
  }
  std::vector<SignedPermutation> flips;
  for (int j = 1; j <= n; ++j) flips.push_back(SignedPermutation::flip(n, j));
  auto an = enumerate_closure(flips, SignedPermutation::identity(n), std::size_t{1} << (n + 1));
  acc.expect(an.size() == (std::size_t{1} << n), [&] { return "A_n has " + std::to_string(an.size()) + " elements"; });
  for (const auto& a : an)
    for (const auto& b : an)
      acc.expect(compose(a, b) == compose(b, a) && compose(a, a).is_identity(),
                 [&] { return "A_n is not elementary abelian at " + a.to_string() + ", " + b.to_string(); });
  ConcreteHom model = make_concrete_hom("phiPT", n);
  std::size_t rels = 0;
  for (const char* fam : {"tsn", "an"}) {
    WellDefinedReport r = check_well_defined(model, build_presentation(fam, n).relators);
    rels += r.lines.size();
    for (const CheckLine& l : r.lines)
      acc.expect(l.pass, [&] { return std::string(fam) + " relator " + l.id + " evaluates to " + l.detail; });
  }
  return finish("extended-symmetric", n, acc,
                "|TS_n| = " + std::to_string(pt_size) + ", |A_n| = " + std::to_string(an.size()) + ", " +
                    std::to_string(rels) + " TS_n/A_n relators hold");
}

CheckReport schreier(int n) {
  Acc acc;
  ConcreteHom phiP = make_concrete_hom("phiP", n);
  Transversal lam = build_transversal(TransversalKind::LambdaN, n, phiP);
  acc.expect(lam.size() == factorial(n), [&] { return "|Lambda_n| = " + std::to_string(lam.size()); });
  acc.expect(has_schreier_property(lam), [] { return std::string("Lambda_n is not prefix closed"); });
  acc.expect(lam.words[0].empty(), [] { return std::string("first Lambda_n word is not empty"); });
  std::string details = "|Lambda_n| = " + std::to_string(lam.size());
  if (n > 5) return finish("schreier", n, acc, details + "; generator classification run for n <= 5");

  std::size_t classified = 0;
  for (KernelKind kind : {KernelKind::TVP, KernelKind::TVH}) {
    RSContext ctx = make_context(kind, n);
    for (std::size_t t = 0; t < ctx.transversal.size(); ++t) {
      const Word& tw = ctx.transversal.words[t];
      for (const Atom& a : ctx.ambient.generators) {
        ++classified;
        auto g = ctx.table.at({t, a});
        auto where = [&] { return to_string(kind) + " (" + format_word(tw) + ", " + format_atom(a) + ")"; };
        if (a.kind == Kind::Rho) {
          Word s = schreier_generator(ctx, tw, a);
          bool rho_only = std::all_of(s.begin(), s.end(), [](const Atom& x) { return x.kind == Kind::Rho; });
          acc.expect(!g && rho_only && rho_permutation(s).is_identity(),
                     [&] { return where() + " gives " + format_word(s); });
        } else if (a.kind == Kind::Gamma) {
          acc.expect(g && g->kind == Kind::Gamma, [&] { return where() + " is not a gamma letter"; });
        } else if (kind == KernelKind::TVP) {
          acc.expect(g && g->kind == Kind::Lambda && g->sign < 0 && !g->decorated(),
                     [&] { return where() + " is not an inverse lambda letter"; });
        } else {
          acc.expect(g && g->kind == Kind::X && g->sign > 0 && !g->decorated(),
                     [&] { return where() + " is not an x letter"; });
        }
      }
    }
    if (kind == KernelKind::TVP) {
      Word e(n, Alphabet::Ambient);
      acc.expect(format_word(schreier_generator(ctx, e, Atom::sigma(1))) == "s1 r1",
                 [] { return std::string("s_{e,s1} differs from s1 r1"); });
      acc.expect(schreier_generator(ctx, e, Atom::rho(1)).empty(), [] { return std::string("s_{e,r1} is not empty"); });
      acc.expect(format_word(schreier_generator(ctx, e, Atom::gamma(n))) == "g" + std::to_string(n),
                 [] { return std::string("s_{e,g} is not g"); });
      Word r1(n, Alphabet::Ambient, {Atom::rho(1)});
      acc.expect(classify_generator(ctx, r1, Atom::gamma(1)) == Atom::gamma(2),
                 [] { return std::string("(r1, g1) does not classify to g2"); });
    }
  }
  ConcreteHom phiPT = make_concrete_hom("phiPT", n);
  Transversal prod = build_transversal(TransversalKind::LambdaTimesAN, n, phiPT);
  Transversal an = build_transversal(TransversalKind::AN, n, make_concrete_hom("psiP", n));
  acc.expect(prod.size() == factorial(n) << n, [&] { return "|LambdaTimesAN| = " + std::to_string(prod.size()); });
  acc.expect(an.size() == std::size_t{1} << n, [&] { return "|AN| = " + std::to_string(an.size()); });
  return finish("schreier", n, acc,
                details + ", |Lambda_n x A_n| = " + std::to_string(prod.size()) + ", " + std::to_string(classified) +
                    " Schreier generators classified");
}

CheckReport rewriting(int n, std::uint64_t seed) {
  Acc acc;
  RSContext tvp = make_context(KernelKind::TVP, n);
  std::vector<std::pair<std::string, std::string>> displayed = {
      {"g1 g1", "g1 g1"},
      {"g1 g2 g1 g2", "g1 g2 g1 g2"},
      {"r1 s1 r1 g2 g1 s1^-1 g1 g2", "l2,1^-1 g1 g2 l1,2 g1 g2"},
  };
  if (n >= 3) displayed.insert(displayed.begin() + 2, {"s1 g3 s1^-1 g3", "l1,2^-1 g3 l1,2 g3"});
  for (const auto& [in, out] : displayed) {
    std::string got = format_word(rewrite_tau(tvp, parse_word(in, n, Alphabet::Ambient)));
    acc.expect(got == out, [&] { return "tau(" + in + ") = " + got + ", expected " + out; });
  }
  std::size_t derived = 0;
  std::vector<std::pair<KernelKind, std::string>> pairs = {{KernelKind::TVP, "tvpn"}, {KernelKind::TVH, "tvhn"}};
  std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(n));
  for (const auto& [kind, fam] : pairs) {
    RSContext ctx = kind == KernelKind::TVP ? tvp : make_context(kind, n);
    auto rels = derive_relators(ctx);
    derived += rels.size();
    RelatorDiff d = diff_relator_sets(relator_words(rels), build_presentation(fam, n).relator_words());
    acc.expect(d.empty(), [&] { return fam + ": " + describe(d); });
    // tau undoes expansion, up to every quotient in use
    Presentation sub = build_presentation(fam, n);
    for (int k = 0; k < 200; ++k) {
      Word v = random_word(rng, sub, 8);
      Word u = expand(ctx, v);
      Word back = expand(ctx, rewrite_tau(ctx, u));
      acc.expect(fingerprint(back) == fingerprint(u), [&] { return fam + ": tau round trip fails on " + format_word(u); });
    }
  }
  return finish("rewriting", n, acc,
                std::to_string(displayed.size()) + " displayed tau computations, " + std::to_string(derived) +
                    " derived TVP_n/TVH_n relators match");
}

CheckReport presentation_roundtrip(int n) {
  Acc acc;
  std::string details;
  std::vector<std::pair<KernelKind, std::string>> pairs = {
      {KernelKind::TVP, "tvpn"}, {KernelKind::TVH, "tvhn"}, {KernelKind::PL, "pln"}, {KernelKind::HL, "hln"}};
  for (const auto& [kind, fam] : pairs) {
    auto rels = derive_relators(make_context(kind, n));
    RelatorDiff d = diff_relator_sets(relator_words(rels), build_presentation(fam, n).relator_words());
    acc.expect(d.empty(), [&] { return fam + ": " + describe(d); });
    details += (details.empty() ? "" : ", ") + fam + " " + std::to_string(rels.size());
  }
  if (n == 3) {
    auto reduced = relator_multiset(build_presentation("tvpn-reduced", 3).relator_words());
    auto displayed = relator_multiset(displayed_tvp3_presentation().relator_words());
    acc.expect(reduced == displayed, [&] {
      return "tvpn-reduced at n=3 has " + std::to_string(reduced.size()) + " relators, the displayed TVP_3 has " +
             std::to_string(displayed.size()) + " and they differ";
    });
    details += "; tvpn-reduced = displayed TVP_3 (" + std::to_string(reduced.size()) + " relators)";
  }
  return finish("presentation-roundtrip", n, acc, "derived relators match registry: " + details);
}

// pl-triple:22 in the form the derivation produces.
const char* const kSuspectedCorrection = "ik:k ij:j jk:0 = jk:0 ij:j ik:k";

CheckReport pl_derivation(int n) {
  Acc acc;
  auto derived = relator_words(derive_relators(make_context(KernelKind::PL, n)));
  TranscribedTable table = transcribed_pl_table(n);
  RelatorDiff d = diff_relator_sets(derived, words_of(table.relators));

  std::vector<Word> corrected;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) corrected.push_back(instantiate_schema(kSuspectedCorrection, n, {i, j, k}));
  std::set<RelatorKey> corrected_keys = relator_set(corrected);
  std::set<RelatorKey> only_derived(d.only_left.begin(), d.only_left.end());

  acc.expect(table.rejected.size() == 1 && table.rejected[0].label == "pl-triple:22",
             [&] { return std::to_string(table.rejected.size()) + " table lines rejected"; });
  acc.expect(d.only_right.empty(), [&] { return "listed but not derived: " + format_key(d.only_right[0]); });
  acc.expect(only_derived == corrected_keys, [&] { return "derived but not listed: " + describe(d); });

  std::string details = std::to_string(derived.size()) + " derived, " + std::to_string(table.relators.size()) +
                        " listed; suspected typo";
  for (const auto& r : table.rejected) details += " " + r.label + " '" + r.text + "' (" + r.reason + ")";
  details += ", derivation gives '" + std::string(kSuspectedCorrection) + "'";

  if (n == 3) {
    std::vector<Word> orbits;
    for (const Relator& r : displayed_pl3_relators())
      for (const Word& w : conjugation_orbit(r.word, 3)) orbits.push_back(w);
    RelatorDiff o = diff_relator_sets(derived, orbits);
    acc.expect(o.empty(), [&] { return "A_3-orbits of the six PL_3 relators: " + describe(o); });
    details += "; equals the A_3-orbits of the six PL_3 relators (" + std::to_string(relator_set(orbits).size()) + ")";
  }
  return finish("pl-derivation", n, acc, details);
}

CheckReport abelianization(int n, std::uint64_t seed) {
  Acc acc;
  AbelianInvariants tvp = abelian_invariants(build_presentation("tvpn", n));
  AbelianInvariants tvh = abelian_invariants(build_presentation("tvhn", n));
  AbelianInvariants want_p{static_cast<std::size_t>(n * (n - 1) / 2), std::vector<Integer>(static_cast<std::size_t>(n), 2)};
  AbelianInvariants want_h{1, std::vector<Integer>(static_cast<std::size_t>(n), 2)};
  acc.expect(tvp == want_p, [&] { return "TVP_n abelianizes to " + tvp.format(); });
  acc.expect(tvh == want_h, [&] { return "TVH_n abelianizes to " + tvh.format(); });
  acc.expect(same_invariants(tvp, tvh) == (n == 2), [&] { return std::string("same_invariants disagrees with n"); });
  AbelianInvariants an = abelian_invariants(build_presentation("an", n));
  acc.expect(an == AbelianInvariants{0, std::vector<Integer>(static_cast<std::size_t>(n), 2)},
             [&] { return "A_n abelianizes to " + an.format(); });
  AbelianInvariants vp = abelian_invariants(build_presentation("vpn", n));
  acc.expect(vp == AbelianInvariants{static_cast<std::size_t>(n * (n - 1)), {}},
             [&] { return "VP_n abelianizes to " + vp.format(); });

  std::mt19937_64 rng(seed + 7 * static_cast<std::uint64_t>(n));
  const int trials = 1000;
  for (int t = 0; t < trials && acc.first.empty(); ++t) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntegerMatrix m(r, c);
    for (auto& v : m.data) v = static_cast<long long>(rng() % 7) - 3;
    SmithForm s = smith_normal_form(m);
    std::vector<Integer> oracle = determinantal_factors(m);
    std::ostringstream shown;
    for (std::size_t i = 0; i < r; ++i) {
      shown << (i ? ";" : "[");
      for (std::size_t j = 0; j < c; ++j) shown << (j ? "," : "") << m.at(i, j);
    }
    shown << "]";
    acc.expect(s.factors == oracle && s.rank == oracle.size(), [&] { return "Smith form disagrees on " + shown.str(); });
    for (std::size_t k = 1; k < s.factors.size(); ++k)
      acc.expect(s.factors[k] % s.factors[k - 1] == 0, [&] { return "divisibility fails on " + shown.str(); });
    // row and column permutation invariance
    IntegerMatrix p(c, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) p.at(c - 1 - j, r - 1 - i) = m.at(i, j);
    acc.expect(smith_normal_form(p).factors == s.factors, [&] { return "transposed form differs on " + shown.str(); });
  }
  return finish("abelianization", n, acc,
                "TVP_n " + tvp.format() + ", TVH_n " + tvh.format() + ", same=" + (n == 2 ? "true" : "false") +
                    "; Smith form agrees with minors on " + std::to_string(trials) + " random matrices");
}

CheckReport endomorphism(int n) {
  Acc acc;
  auto derived = derive_relators(make_context(KernelKind::PL, n));
  std::vector<Relator> rels;
  for (const auto& r : derived) rels.push_back({r.id + "(" + r.from + ")", r.word});
  PresentationHom h = std::get<PresentationHom>(make_hom("plToVp", n));
  WellDefinedReport rep = check_well_defined(h, rels);
  std::size_t vanish = 0;
  for (const CheckLine& l : rep.lines) {
    vanish += l.detail == "trivial";
    acc.expect(l.pass, [&] { return l.id + " maps to " + l.detail; });
  }
  WellDefinedReport reg = check_well_defined(h);
  for (const CheckLine& l : reg.lines) acc.expect(l.pass, [&] { return "pln " + l.id + " maps to " + l.detail; });
  return finish("endomorphism", n, acc,
                std::to_string(rep.lines.size()) + " derived PL_n relators: " +
                    std::to_string(rep.lines.size() - vanish) + " match VP_n relators, " + std::to_string(vanish) +
                    " vanish");
}

CheckReport exactness(int n, std::uint64_t seed) {
  Acc acc;
  const std::uint64_t expected = factorial(n) << n;
  ConcreteHom pt = make_concrete_hom("phiPT", n), ht = make_concrete_hom("phiHT", n);
  ConcreteHom p = make_concrete_hom("phiP", n), h = make_concrete_hom("phiH", n);
  Presentation tvb = build_presentation("tvbn", n);
  auto ts = enumerate_closure(generator_images(pt, tvb), pt.identity(), static_cast<std::size_t>(expected) * 2);
  acc.expect(ts.size() == expected, [&] { return "|TS_n| = " + std::to_string(ts.size()); });
  std::set<SignedPermutation> forget_kernel;
  for (const auto& e : ts)
    if (e.perm().is_identity()) forget_kernel.insert(e);
  std::vector<SignedPermutation> flips;
  for (int j = 1; j <= n; ++j) flips.push_back(SignedPermutation::flip(n, j));
  acc.expect(forget_kernel == enumerate_closure(flips, pt.identity(), std::size_t{1} << (n + 1)),
             [] { return std::string("kernel of TS_n -> S_n differs from A_n"); });

  std::mt19937_64 rng(seed + 31 * static_cast<std::uint64_t>(n));
  ConcreteHom psiP = make_concrete_hom("psiP", n), psiH = make_concrete_hom("psiH", n);
  Presentation tvp = build_presentation("tvpn", n), tvh = build_presentation("tvhn", n);
  for (int k = 0; k < 1000; ++k) {
    Word w = random_word(rng, tvb, 12);
    acc.expect(SignedPermutation(pt.image(w).perm()) == p.image(w) && SignedPermutation(ht.image(w).perm()) == h.image(w),
               [&] { return "forgetting signs does not commute on " + format_word(w); });
    for (const auto& [sub, psi] : {std::pair{&tvp, &psiP}, std::pair{&tvh, &psiH}}) {
      Word v = random_word(rng, *sub, 8);
      Word u = expand_to_ambient(v);
      const ConcreteHom& phi = sub == &tvp ? p : h;
      const ConcreteHom& phis = sub == &tvp ? pt : ht;
      acc.expect(phi.in_kernel(u) && phis.image(u) == psi->image(v),
                 [&] { return psi->name() + " is not the restriction on " + format_word(v); });
    }
  }
  return finish("exactness", n, acc,
                "|TS_n| = " + std::to_string(ts.size()) + ", ker(TS_n -> S_n) = A_n, 3000 random words commute");
}

CheckReport semidirect(int n, std::uint64_t seed) {
  Acc acc;
  std::mt19937_64 rng(seed + 101 * static_cast<std::uint64_t>(n));
  const int per_map = 1000;
  for (KernelKind kind : {KernelKind::TVP, KernelKind::TVH, KernelKind::PT, KernelKind::PL, KernelKind::HL}) {
    RSContext ctx = make_context(kind, n);
    for (int k = 0; k < per_map; ++k) {
      Word w = random_word(rng, ctx.ambient, 12);
      auto [kern, t] = split(ctx, w);
      bool ok = reduce(concat(kern, t)) == reduce(w) && ctx.quotient.in_kernel(kern) &&
                ctx.quotient.image(w) == ctx.quotient.image(t) && ctx.transversal.contains(t);
      acc.expect(ok, [&] { return ctx.quotient.name() + ": split fails on " + format_word(w); });
    }
  }
  return finish("semidirect", n, acc, std::to_string(5 * per_map) + " random words split as kernel * transversal");
}

CheckReport conjugation(int n) {
  Acc acc;
  std::size_t atoms = 0;
  for (KernelKind kind : {KernelKind::PL, KernelKind::HL}) {
    RSContext ctx = make_context(kind, n);
    Kind k = kind == KernelKind::PL ? Kind::Lambda : Kind::X;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int deco = 0; deco < 4; ++deco) {
          Atom g{k, i, j, (deco & 1) != 0, (deco & 2) != 0, 1};
          ++atoms;
          for (int c = 1; c <= n; ++c) {
            Atom h = act_gamma(c, g);
            auto where = [&] { return "act_gamma(" + std::to_string(c) + ", " + format_atom(g) + ")"; };
            acc.expect(act_gamma(c, h) == g, [&] { return where() + " is not an involution"; });
            Word gw(n, ctx.ambient.alphabet, {g});
            Word conj = concat({Word(n, ctx.ambient.alphabet, {Atom::gamma(c)}), gw,
                                Word(n, ctx.ambient.alphabet, {Atom::gamma(c)})});
            Word tau = rewrite_tau(ctx, conj);
            acc.expect(tau == Word(n, ctx.subgroup_alphabet, {h}),
                       [&] { return where() + " = " + format_atom(h) + " but tau gives " + format_word(tau); });
            Word lhs = generator_expression(h, n);
            Word rhs = reduce(concat({Word(n, Alphabet::Ambient, {Atom::gamma(c)}), generator_expression(g, n),
                                      Word(n, Alphabet::Ambient, {Atom::gamma(c)})}));
            acc.expect(fingerprint(lhs) == fingerprint(rhs), [&] { return where() + " disagrees in TVB_n images"; });
          }
        }
  }
  std::size_t ids = 0;
  for (const IdentificationLine& l : check_generator_identification(n)) {
    ++ids;
    acc.expect(l.pass, [&] { return l.lhs + " != " + l.rhs; });
  }
  return finish("conjugation", n, acc,
                std::to_string(atoms) + " decorated atoms against tau, " + std::to_string(ids) +
                    " generator identifications");
}

}  // namespace

CheckReport run_check(const std::string& id, int n, std::uint64_t seed) {
  if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end())
    throw UnknownCheck("unknown check '" + id + "'");
  auto start = std::chrono::steady_clock::now();
  CheckReport r;
  if (n < 2) {
    r = {id, n, Status::Skip, "needs n >= 2", "", 0};
  } else {
    try {
      if (id == "well-defined") r = well_defined(n);
      else if (id == "extended-symmetric") r = extended_symmetric(n);
      else if (id == "schreier") r = schreier(n);
      else if (id == "rewriting") r = rewriting(n, seed);
      else if (id == "presentation-roundtrip") r = presentation_roundtrip(n);
      else if (id == "pl-derivation") r = pl_derivation(n);
      else if (id == "abelianization") r = abelianization(n, seed);
      else if (id == "endomorphism") r = endomorphism(n);
      else if (id == "exactness") r = exactness(n, seed);
      else if (id == "semidirect") r = semidirect(n, seed);
      else r = conjugation(n);
    } catch (const std::exception& e) {
      r = {id, n, Status::Fail, "exception", e.what(), 0};
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckReport> run_suite(const std::vector<std::string>& ids, int n_lo, int n_hi, std::uint64_t seed) {
  for (const std::string& id : ids)
    if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end())
      throw UnknownCheck("unknown check '" + id + "'");
  std::vector<std::string> ordered;
  for (const std::string& id : check_ids())
    if (std::find(ids.begin(), ids.end(), id) != ids.end()) ordered.push_back(id);
  std::vector<std::future<CheckReport>> jobs;
  for (const std::string& id : ordered)
    for (int n = n_lo; n <= n_hi; ++n) jobs.push_back(std::async(std::launch::async, run_check, id, n, seed));
  std::vector<CheckReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.status == Status::Fail; });
}

namespace {
const char* status_name(Status s) { return s == Status::Pass ? "PASS" : s == Status::Fail ? "FAIL" : "SKIP"; }
}  // namespace

std::string format_report(const std::vector<CheckReport>& reports, std::uint64_t seed) {
  std::string s = "verify seed=" + std::to_string(seed) + "\n";
  for (const CheckReport& r : reports) {
    s += r.id + " n=" + std::to_string(r.n) + " " + status_name(r.status) + " " + r.details;
    if (!r.counterexample.empty()) s += " | counterexample: " + r.counterexample;
    s += "\n";
  }
  return s;
}

std::string report_json(const std::vector<CheckReport>& reports, std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["seed"] = seed;
  j["passed"] = all_passed(reports);
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckReport& r : reports)
    j["checks"].push_back({{"id", r.id},
                           {"n", r.n},
                           {"status", status_name(r.status)},
                           {"details", r.details},
                           {"counterexample", r.counterexample},
                           {"wall_seconds", r.seconds}});
  return j.dump(2) + "\n";
}

}  // namespace tvb
