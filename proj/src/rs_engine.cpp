#include "tvb/rs_engine.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <thread>

#include "tvb/conj.hpp"

namespace tvb {

KernelKind parse_kernel_kind(const std::string& name) {
  static const std::map<std::string, KernelKind> names = {{"tvp", KernelKind::TVP}, {"tvh", KernelKind::TVH},
                                                          {"pt", KernelKind::PT},   {"ht", KernelKind::HT},
                                                          {"pl", KernelKind::PL},   {"hl", KernelKind::HL}};
  auto it = names.find(name);
  if (it == names.end()) throw std::invalid_argument("unknown subgroup '" + name + "' (tvp, tvh, pt, ht, pl, hl)");
  return it->second;
}

std::string to_string(KernelKind k) {
  switch (k) {
    case KernelKind::TVP: return "tvp";
    case KernelKind::TVH: return "tvh";
    case KernelKind::PT: return "pt";
    case KernelKind::HT: return "ht";
    case KernelKind::PL: return "pl";
    case KernelKind::HL: return "hl";
  }
  return "?";
}

bool Transversal::contains(const Word& w) const {
  return std::find(words.begin(), words.end(), w) != words.end();
}

namespace {

std::vector<Word> lambda_words(int n) {
  std::vector<std::vector<Atom>> acc = {{}};
  for (int k = 2; k <= n; ++k) {
    std::vector<std::vector<Atom>> next;
    for (const auto& prefix : acc)
      for (int l = k; l >= 1; --l) {
        auto w = prefix;
        for (int m = k - 1; m >= l; --m) w.push_back(Atom::rho(m));
        next.push_back(std::move(w));
      }
    acc = std::move(next);
  }
  std::vector<Word> out;
  for (auto& a : acc) out.emplace_back(n, Alphabet::Ambient, std::move(a));
  return out;
}

std::vector<Atom> gamma_subset(int n, unsigned mask) {
  std::vector<Atom> out;
  for (int j = 1; j <= n; ++j)
    if (mask & (1u << (j - 1))) out.push_back(Atom::gamma(j));
  return out;
}

}  // namespace

Transversal build_transversal(TransversalKind kind, int n, const ConcreteHom& quotient) {
  Transversal t;
  t.kind = kind;
  t.n = n;
  Alphabet alpha = quotient.source_alphabet();
  std::vector<Word> words;
  if (kind == TransversalKind::LambdaN) {
    words = lambda_words(n);
  } else if (kind == TransversalKind::AN) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) words.emplace_back(n, alpha, gamma_subset(n, mask));
  } else {
    for (const Word& l : lambda_words(n))
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        auto atoms = l.atoms();
        auto g = gamma_subset(n, mask);
        atoms.insert(atoms.end(), g.begin(), g.end());
        words.emplace_back(n, Alphabet::Ambient, std::move(atoms));
      }
  }
  for (Word& w : words) {
    w = w.with_alphabet(alpha);
    SignedPermutation img = quotient.image(w);
    if (!t.index.emplace(img, t.words.size()).second)
      throw TransversalCollision("transversal words " + format_word(w) + " and " +
                                 format_word(t.words[t.index.at(img)]) + " have the same image " +
                                 quotient.format(img));
    t.words.push_back(w);
    t.images.push_back(std::move(img));
  }
  if (!has_schreier_property(t)) throw TransversalCollision("transversal is not prefix closed");
  return t;
}

bool has_schreier_property(const Transversal& t) {
  std::set<std::vector<Atom>> all;
  for (const Word& w : t.words) all.insert(w.atoms());
  for (const Word& w : t.words)
    for (std::size_t k = 0; k <= w.size(); ++k)
      if (!all.count(std::vector<Atom>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)))) return false;
  return true;
}

namespace {

bool inside_tvb(KernelKind k) { return k != KernelKind::PL && k != KernelKind::HL; }

// Images that separate the candidate subgroup generators: the signed
// permutation quotient, the affine map and the total exponent of the s_i.
struct Fingerprint {
  SignedPermutation pt;
  AffineSignedPermutation ap;
  int sigma = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

struct Evaluators {
  ConcreteHom pt;
  AffineHom ap;
  explicit Evaluators(int n) : pt(make_concrete_hom("phiPT", n)), ap(n) {}

  [[nodiscard]] Fingerprint operator()(const Word& tvb_word) const {
    int sigma = 0;
    for (const Atom& a : tvb_word)
      if (a.kind == Kind::Sigma) sigma += a.sign;
    return {pt.image(tvb_word), ap.image(tvb_word), sigma};
  }
};

Word to_tvb(const RSContext& ctx, const Word& ambient_word) {
  return inside_tvb(ctx.kind) ? ambient_word : expand_to_ambient(ambient_word);
}

// Transversal word t = p * gamma_S with p a rho-word.
std::pair<Word, unsigned> decompose(const Word& t) {
  std::vector<Atom> p;
  unsigned mask = 0;
  for (const Atom& a : t) {
    if (a.kind == Kind::Rho) p.push_back(a);
    else mask |= 1u << (a.i - 1);
  }
  std::reverse(p.begin(), p.end());  // p^{-1}
  return {Word(t.rank(), Alphabet::Ambient, std::move(p)), mask};
}

std::optional<Atom> analytic(KernelKind kind, const Word& t, const Atom& a) {
  auto [pinv, mask] = decompose(t);
  auto in = [mask](int k) { return (mask & (1u << (k - 1))) != 0; };
  switch (kind) {
    case KernelKind::TVP:
    case KernelKind::TVH:
      if (a.kind == Kind::Rho) return std::nullopt;
      if (a.kind == Kind::Gamma) return act_sn(pinv, a);
      if (kind == KernelKind::TVP) return act_sn(pinv, Atom::lambda(a.i, a.i + 1)).inverse();
      return act_sn(pinv, Atom::x(a.i, a.i + 1));
    case KernelKind::PT:
    case KernelKind::HT: {
      if (a.kind != Kind::Sigma) return std::nullopt;
      Kind k = kind == KernelKind::PT ? Kind::Lambda : Kind::X;
      Atom base{k, a.i, a.i + 1, in(a.i), in(a.i + 1), 1};
      Atom out = canonical(act_sn(pinv, base));
      return kind == KernelKind::PT ? out.inverse() : out;
    }
    case KernelKind::PL:
    case KernelKind::HL: {
      if (a.kind == Kind::Gamma) return std::nullopt;
      Atom out = a.base();
      out.deco_i = in(a.i);
      out.deco_j = in(a.j);
      return canonical(out);
    }
  }
  return std::nullopt;
}

Word single(const RSContext& ctx, const std::optional<Atom>& g) {
  return Word(ctx.n, ctx.subgroup_alphabet, g ? std::vector<Atom>{*g} : std::vector<Atom>{});
}

std::size_t step(const RSContext& ctx, std::size_t t, const Atom& a) {
  return ctx.transversal.index.at(compose(ctx.transversal.images[t], ctx.quotient.atom_image(a)));
}

std::size_t identity_index(const RSContext& ctx) {
  return ctx.transversal.index.at(SignedPermutation::identity(ctx.n));
}

// Replaces decorated letters (PL/HL ambients only) by their gamma conjugates.
Word prepare(const RSContext& ctx, const Word& u) {
  if (u.rank() != ctx.n) throw RankMismatch("word has rank " + std::to_string(u.rank()) + ", context has n=" + std::to_string(ctx.n));
  Word v = normalize_signs(u);
  if (inside_tvb(ctx.kind)) {
    for (const Atom& a : v) require_legal(a, ctx.n, Alphabet::Ambient);
    return v;
  }
  std::vector<Atom> out;
  for (const Atom& a : v) {
    if (a.is_pair() && a.decorated()) {
      Word e = expand(ctx, Word(ctx.n, ctx.subgroup_alphabet, {a}));
      out.insert(out.end(), e.begin(), e.end());
    } else {
      out.push_back(a);
    }
  }
  Word w(ctx.n, ctx.ambient.alphabet, std::move(out));
  (void)ctx.quotient.image(w);  // alphabet check
  return w;
}

}  // namespace

Word expand(const RSContext& ctx, const Word& w) {
  if (inside_tvb(ctx.kind)) return expand_to_ambient(w);
  std::vector<Atom> out;
  for (const Atom& a : w) {
    if (!a.is_pair()) {
      out.push_back(a);
      continue;
    }
    std::vector<Atom> gs;
    if (a.deco_i) gs.push_back(Atom::gamma(a.i));
    if (a.deco_j) gs.push_back(Atom::gamma(a.j));
    std::sort(gs.begin(), gs.end());
    out.insert(out.end(), gs.rbegin(), gs.rend());
    Atom plain = a;
    plain.deco_i = plain.deco_j = false;
    out.push_back(plain);
    out.insert(out.end(), gs.begin(), gs.end());
  }
  return {w.rank(), ctx.ambient.alphabet, std::move(out)};
}

std::size_t representative_index(const RSContext& ctx, const Word& w) {
  return ctx.transversal.index.at(ctx.quotient.image(w));
}

Word representative(const RSContext& ctx, const Word& w) {
  return ctx.transversal.words[representative_index(ctx, w)];
}

Word schreier_generator(const RSContext& ctx, const Word& t, const Atom& a) {
  Word ta = concat(t, Word(t.rank(), t.alphabet(), {a}));
  return reduce(concat(ta, invert(representative(ctx, ta))));
}

std::optional<Atom> classify_generator(const RSContext& ctx, const Word& t, const Atom& a) {
  std::size_t idx = representative_index(ctx, t);
  if (!(ctx.transversal.words[idx] == t)) throw std::invalid_argument(format_word(t) + " is not a transversal word");
  return ctx.table.at({idx, a.base()});
}

RSContext make_context(KernelKind kind, int n) {
  RSContext ctx;
  ctx.kind = kind;
  ctx.n = n;
  switch (kind) {
    case KernelKind::TVP:
      ctx.ambient = build_presentation("tvbn", n);
      ctx.quotient = make_concrete_hom("phiP", n);
      ctx.transversal = build_transversal(TransversalKind::LambdaN, n, ctx.quotient);
      ctx.subgroup_alphabet = Alphabet::PureTwisted;
      break;
    case KernelKind::TVH:
      ctx.ambient = build_presentation("tvbn", n);
      ctx.quotient = make_concrete_hom("phiH", n);
      ctx.transversal = build_transversal(TransversalKind::LambdaN, n, ctx.quotient);
      ctx.subgroup_alphabet = Alphabet::HTwisted;
      break;
    case KernelKind::PT:
    case KernelKind::HT:
      ctx.ambient = build_presentation("tvbn", n);
      ctx.quotient = make_concrete_hom(kind == KernelKind::PT ? "phiPT" : "phiHT", n);
      ctx.transversal = build_transversal(TransversalKind::LambdaTimesAN, n, ctx.quotient);
      ctx.subgroup_alphabet = kind == KernelKind::PT ? Alphabet::DecoratedPL : Alphabet::DecoratedHL;
      break;
    case KernelKind::PL:
    case KernelKind::HL:
      ctx.ambient = build_presentation(kind == KernelKind::PL ? "tvpn" : "tvhn", n);
      ctx.quotient = make_concrete_hom(kind == KernelKind::PL ? "psiP" : "psiH", n);
      ctx.transversal = build_transversal(TransversalKind::AN, n, ctx.quotient);
      ctx.subgroup_alphabet = kind == KernelKind::PL ? Alphabet::DecoratedPL : Alphabet::DecoratedHL;
      break;
  }

  using Entry = std::pair<std::pair<std::size_t, Atom>, std::optional<Atom>>;
  const std::size_t size = ctx.transversal.size();
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(8, std::thread::hardware_concurrency()));
  std::vector<std::future<std::vector<Entry>>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&ctx, w, workers, size] {
      Evaluators eval(ctx.n);
      std::vector<Entry> out;
      for (std::size_t t = w; t < size; t += workers) {
        const Word& tw = ctx.transversal.words[t];
        for (const Atom& a : ctx.ambient.generators) {
          std::optional<Atom> g = analytic(ctx.kind, tw, a);
          Word s = schreier_generator(ctx, tw, a);
          if (!(eval(to_tvb(ctx, s)) == eval(expand_to_ambient(expand(ctx, single(ctx, g))))))
            throw ClassificationError("Schreier generator for (" + format_word(tw) + ", " + format_atom(a) + ") = " +
                                      format_word(s) + " does not match " +
                                      (g ? format_atom(*g) : std::string("identity")));
          out.push_back({{t, a.base()}, g});
        }
      }
      return out;
    }));
  for (auto& j : jobs)
    for (auto& e : j.get()) ctx.table.insert(std::move(e));
  return ctx;
}

TauResult rewrite_tau_full(const RSContext& ctx, const Word& u) {
  Word v = prepare(ctx, u);
  SignedPermutation img = ctx.quotient.image(v);
  if (!img.is_identity())
    throw NotInKernel("word is not in the kernel of " + ctx.quotient.name() + "; image " + ctx.quotient.format(img),
                      ctx.quotient.format(img));
  std::size_t t = identity_index(ctx);
  std::vector<Atom> raw;
  for (const Atom& a : v) {
    std::optional<Atom> g;
    if (a.sign > 0) {
      g = ctx.table.at({t, a.base()});
      t = step(ctx, t, a);
    } else {
      t = step(ctx, t, a);
      g = ctx.table.at({t, a.base()});
      if (g && !g->is_involution()) g = g->inverse();
    }
    if (g) raw.push_back(*g);
  }
  Word rw(ctx.n, ctx.subgroup_alphabet, std::move(raw));
  return {rw, free_reduce(rw)};
}

Word rewrite_tau(const RSContext& ctx, const Word& u) { return rewrite_tau_full(ctx, u).normalized; }

std::vector<DerivedRelator> derive_relators(const RSContext& ctx) {
  struct Candidate {
    RelatorKey key;
    DerivedRelator rel;
  };
  std::vector<std::future<std::vector<Candidate>>> jobs;
  for (const Relator& r : ctx.ambient.relators)
    jobs.push_back(std::async(std::launch::async, [&ctx, &r] {
      std::vector<Candidate> out;
      for (const Word& t : ctx.transversal.words) {
        Word conj = concat({t, r.word, normalize_signs(inverse_raw(t))});
        Word w = rewrite_tau(ctx, conj);
        RelatorKey k = relator_key(w);
        if (k.trivial()) continue;
        out.push_back({std::move(k), {"", r.id, t, w}});
      }
      return out;
    }));
  std::set<RelatorKey> seen;
  std::vector<DerivedRelator> result;
  for (auto& j : jobs)
    for (auto& c : j.get()) {
      if (!seen.insert(c.key).second) continue;
      c.rel.id = "r" + std::to_string(result.size() + 1);
      result.push_back(std::move(c.rel));
    }
  return result;
}

std::string format_provenance(const DerivedRelator& r) {
  return "relator " + r.id + " from=" + r.from + " conj=" + (r.conj.empty() ? "e" : format_word(r.conj)) +
         " word=" + format_word(normalize_signs(r.word));
}

std::vector<Word> relator_words(const std::vector<DerivedRelator>& rels) {
  std::vector<Word> out;
  out.reserve(rels.size());
  for (const auto& r : rels) out.push_back(r.word);
  return out;
}

std::pair<Word, Word> split(const RSContext& ctx, const Word& w) {
  Word t = representative(ctx, w);
  return {reduce(concat(w, invert(t))), t};
}

}  // namespace tvb
