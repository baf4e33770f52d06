#include "tvb/presentations.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <nlohmann/json.hpp>
#include <utility>

#include "tvb/conj.hpp"

namespace tvb {

namespace {

Word word(int n, Alphabet a, std::vector<Atom> atoms) { return {n, a, std::move(atoms)}; }

// lhs = rhs as the relator lhs * rhs^{-1}.
Word rel(const Word& lhs, const Word& rhs) { return free_reduce(concat(lhs, inverse_raw(rhs))); }

std::string ids(std::initializer_list<int> v) {
  std::string s;
  for (int x : v) {
    if (!s.empty()) s += ',';
    s += std::to_string(x);
  }
  return s;
}

std::vector<std::pair<int, int>> ordered_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.emplace_back(i, j);
  return out;
}

class Builder {
 public:
  Builder(std::string family, int n, Alphabet a) {
    p_.family = std::move(family);
    p_.rank = n;
    p_.alphabet = a;
  }

  [[nodiscard]] int n() const { return p_.rank; }
  Word w(std::vector<Atom> atoms) const { return word(p_.rank, p_.alphabet, std::move(atoms)); }
  void gen(const Atom& a) { p_.generators.push_back(a); }
  void add(std::string id, const Word& lhs, const Word& rhs) { p_.relators.push_back({std::move(id), rel(lhs, rhs)}); }
  Presentation take() { return std::move(p_); }

  void sigma_gens() {
    for (int i = 1; i < n(); ++i) gen(Atom::sigma(i));
  }
  void rho_gens() {
    for (int i = 1; i < n(); ++i) gen(Atom::rho(i));
  }
  void gamma_gens() {
    for (int i = 1; i <= n(); ++i) gen(Atom::gamma(i));
  }
  void pair_gens(Kind k) {
    for (auto [i, j] : ordered_pairs(n())) gen(Atom{k, i, j, false, false, 1});
  }

  void braid_rels() {
    auto s = [](int i) { return Atom::sigma(i); };
    for (int i = 1; i + 1 < n(); ++i) add("braid:" + ids({i}), w({s(i), s(i + 1), s(i)}), w({s(i + 1), s(i), s(i + 1)}));
    for (int i = 1; i < n(); ++i)
      for (int j = i + 2; j < n(); ++j) add("braid-comm:" + ids({i, j}), w({s(i), s(j)}), w({s(j), s(i)}));
  }

  void rho_rels() {
    auto r = [](int i) { return Atom::rho(i); };
    for (int i = 1; i < n(); ++i) add("rho-sq:" + ids({i}), w({r(i), r(i)}), w({}));
    for (int i = 1; i < n(); ++i)
      for (int j = i + 2; j < n(); ++j) add("rho-comm:" + ids({i, j}), w({r(i), r(j)}), w({r(j), r(i)}));
    for (int i = 1; i + 1 < n(); ++i)
      add("rho-braid:" + ids({i}), w({r(i), r(i + 1), r(i)}), w({r(i + 1), r(i), r(i + 1)}));
  }

  void mixed_rels() {
    auto s = [](int i) { return Atom::sigma(i); };
    auto r = [](int i) { return Atom::rho(i); };
    for (int i = 1; i < n(); ++i)
      for (int j = 1; j < n(); ++j)
        if (std::abs(i - j) >= 2) add("mixed-comm:" + ids({i, j}), w({s(i), r(j)}), w({r(j), s(i)}));
    for (int i = 1; i + 1 < n(); ++i)
      add("mixed-braid:" + ids({i}), w({r(i), r(i + 1), s(i)}), w({s(i + 1), r(i), r(i + 1)}));
  }

  void gamma_rels(const std::string& sq, const std::string& comm) {
    auto g = [](int i) { return Atom::gamma(i); };
    for (int i = 1; i <= n(); ++i) add(sq + ":" + ids({i}), w({g(i), g(i)}), w({}));
    for (int i = 1; i <= n(); ++i)
      for (int j = i + 1; j <= n(); ++j) add(comm + ":" + ids({i, j}), w({g(i), g(j)}), w({g(j), g(i)}));
  }

  void twisted_mixed_rels(bool with_sigma) {
    auto s = [](int i) { return Atom::sigma(i); };
    auto r = [](int i) { return Atom::rho(i); };
    auto g = [](int i) { return Atom::gamma(i); };
    for (int j = 1; j <= n(); ++j)
      for (int i = 1; i < n(); ++i)
        if (j != i && j != i + 1) add("gamma-rho:" + ids({j, i}), w({g(j), r(i)}), w({r(i), g(j)}));
    if (with_sigma)
      for (int j = 1; j <= n(); ++j)
        for (int i = 1; i < n(); ++i)
          if (j != i && j != i + 1) add("gamma-sigma:" + ids({j, i}), w({g(j), s(i)}), w({s(i), g(j)}));
    for (int i = 1; i < n(); ++i) add("rel-bv:" + ids({i}), w({r(i), g(i)}), w({g(i + 1), r(i)}));
    if (with_sigma)
      for (int i = 1; i < n(); ++i)
        add("twist:" + ids({i}), w({r(i), s(i), r(i)}), w({g(i + 1), g(i), s(i), g(i), g(i + 1)}));
  }

  // comm over ordered pairs of disjoint ordered pairs.
  void pair_comm(Kind k, const std::string& name) {
    auto a = [k](int i, int j) { return Atom{k, i, j, false, false, 1}; };
    for (auto [i, j] : ordered_pairs(n()))
      for (auto [kk, l] : ordered_pairs(n()))
        if (kk != i && kk != j && l != i && l != j)
          add(name + ":" + ids({i, j, kk, l}), w({a(i, j), a(kk, l)}), w({a(kk, l), a(i, j)}));
  }

  template <class F>
  void triples(F f) {
    for (int i = 1; i <= n(); ++i)
      for (int j = 1; j <= n(); ++j)
        for (int k = 1; k <= n(); ++k)
          if (i != j && j != k && i != k) f(i, j, k);
  }

  // lambda_ki lambda_kj lambda_ij = lambda_ij lambda_kj lambda_ki
  void lambda_triangle(const std::string& name) {
    triples([&](int i, int j, int k) {
      auto l = [](int a, int b) { return Atom::lambda(a, b); };
      add(name + ":" + ids({i, j, k}), w({l(k, i), l(k, j), l(i, j)}), w({l(i, j), l(k, j), l(k, i)}));
    });
  }

  // x_ik x_kj x_ik = x_kj x_ik x_kj
  void x_braid(const std::string& name) {
    triples([&](int i, int j, int k) {
      auto x = [](int a, int b) { return Atom::x(a, b); };
      add(name + ":" + ids({i, k, j}), w({x(i, k), x(k, j), x(i, k)}), w({x(k, j), x(i, k), x(k, j)}));
    });
  }

  // [a_ij, gamma_k] for k outside {i,j}, and a_ij = gamma_i gamma_j a_ji gamma_j gamma_i for i < j.
  void pair_gamma(Kind kind, const std::string& comm, const std::string& swap) {
    auto a = [kind](int i, int j) { return Atom{kind, i, j, false, false, 1}; };
    auto g = [](int i) { return Atom::gamma(i); };
    for (auto [i, j] : ordered_pairs(n()))
      for (int k = 1; k <= n(); ++k)
        if (k != i && k != j) add(comm + ":" + ids({i, j, k}), w({a(i, j), g(k)}), w({g(k), a(i, j)}));
    for (int i = 1; i <= n(); ++i)
      for (int j = i + 1; j <= n(); ++j) {
        // written as a conjugate, (g_j g_i)^{-1} a_ji (g_j g_i), so gamma exponents cancel
        Word c = w({g(j), g(i)});
        add(swap + ":" + ids({i, j}), w({a(i, j)}), concat({inverse_raw(c), w({a(j, i)}), c}));
      }
  }

 private:
  Presentation p_;
};

Presentation tvb_like(const std::string& family, int n) {
  Builder b(family, n, Alphabet::Ambient);
  bool braid = family == "bn" || family == "vbn" || family == "tvbn";
  bool virt = family == "vbn" || family == "tvbn" || family == "tsn";
  bool twisted = family == "tvbn" || family == "tsn" || family == "an";
  if (braid) b.sigma_gens();
  if (virt) b.rho_gens();
  if (twisted) b.gamma_gens();
  if (braid) b.braid_rels();
  if (virt) b.rho_rels();
  if (braid && virt) b.mixed_rels();
  if (twisted) b.gamma_rels("gamma-sq", "gamma-comm");
  if (twisted && virt) b.twisted_mixed_rels(braid);
  return b.take();
}

Presentation pure_like(const std::string& family, int n) {
  bool h = family == "vhn" || family == "tvhn";
  bool twisted = family == "tvpn" || family == "tvhn";
  Kind k = h ? Kind::X : Kind::Lambda;
  Builder b(family, n, h ? Alphabet::HTwisted : Alphabet::PureTwisted);
  b.pair_gens(k);
  if (twisted) b.gamma_gens();
  b.pair_comm(k, h ? "comm2" : "comm");
  if (h) b.x_braid(twisted ? "braid2" : "braid3");
  else b.lambda_triangle(twisted ? "classical" : "triangle");
  if (twisted) {
    b.gamma_rels(h ? "g5" : "g1", h ? "g6" : "g2");
    b.pair_gamma(k, h ? "g7" : "g3", h ? "g8" : "g4");
  }
  return b.take();
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

std::string mask_label(unsigned mask, int n) {
  std::string s;
  for (int k = 1; k <= n; ++k)
    if (mask & (1u << (k - 1))) {
      if (!s.empty()) s += ',';
      s += std::to_string(k);
    }
  return s.empty() ? "e" : s;
}

// A_n-orbits of the pair relators of TVP_n / TVH_n written in canonical atoms.
Presentation decorated_kernel(const std::string& family, int n) {
  bool h = family == "hln";
  Presentation src = pure_like(h ? "tvhn" : "tvpn", n);
  Kind k = h ? Kind::X : Kind::Lambda;
  Builder b(family, n, h ? Alphabet::DecoratedHL : Alphabet::DecoratedPL);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (auto [di, dj] : {std::pair{false, false}, {true, false}, {false, true}, {true, true}})
        b.gen(Atom{k, i, j, di, dj, 1});
  Presentation out = b.take();
  std::set<RelatorKey> seen;
  for (const Relator& r : src.relators) {
    if (!(starts_with(r.id, "comm") || starts_with(r.id, "classical") || starts_with(r.id, "braid2"))) continue;
    std::vector<Atom> atoms;
    for (const Atom& a : r.word) atoms.push_back(canonical(a));
    Word base(n, out.alphabet, atoms);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      auto orbit = conjugation_orbit(base, n, {mask});
      const Word& wv = orbit.front();
      if (seen.insert(relator_key(wv)).second) out.relators.push_back({r.id + "/" + mask_label(mask, n), wv});
    }
  }
  return out;
}

}  // namespace

std::vector<Word> Presentation::relator_words() const {
  std::vector<Word> out;
  out.reserve(relators.size());
  for (const auto& r : relators) out.push_back(r.word);
  return out;
}

bool Presentation::has_generator(const Atom& a) const {
  return std::any_of(generators.begin(), generators.end(), [&](const Atom& g) { return g.same_generator(a); });
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"bn",   "vbn",          "tvbn", "tsn",          "an",  "vpn", "vhn",
                                                 "tvpn", "tvpn-reduced", "tvhn", "tvhn-reduced", "pln", "hln"};
  return names;
}

int minimum_rank(const std::string& family) {
  if (std::find(family_names().begin(), family_names().end(), family) == family_names().end())
    throw UnknownFamily("unknown family '" + family + "'");
  if (family == "vpn" || family == "vhn" || family == "pln" || family == "hln") return 2;
  return 1;
}

Presentation build_presentation(const std::string& family, int n) {
  int lo = minimum_rank(family);
  if (n < lo) throw std::invalid_argument(family + " needs n >= " + std::to_string(lo));
  if (family == "bn" || family == "vbn" || family == "tvbn" || family == "tsn" || family == "an")
    return tvb_like(family, n);
  if (family == "vpn" || family == "vhn" || family == "tvpn" || family == "tvhn") return pure_like(family, n);
  if (family == "pln" || family == "hln") return decorated_kernel(family, n);
  // reduced forms
  Presentation full = pure_like(family == "tvpn-reduced" ? "tvpn" : "tvhn", n);
  Presentation out = eliminate_generators(full, pair_elimination_rule(full));
  out.family = family;
  return out;
}

Word generator_expression(const Atom& g, int n, LambdaConvention c) {
  if (g.kind == Kind::Gamma) {
    require_legal(g, n, Alphabet::PureTwisted);
    return {n, Alphabet::Ambient, {g.base()}};
  }
  if (!g.is_pair()) throw std::invalid_argument("no generator expression for " + format_atom(g));
  require_legal(g, n, g.kind == Kind::Lambda ? Alphabet::DecoratedPL : Alphabet::DecoratedHL);

  int lo = std::min(g.i, g.j);
  int hi = std::max(g.i, g.j);
  bool forward = g.i < g.j;
  std::vector<Atom> core;
  if (g.kind == Kind::Lambda) {
    int sgn = c == LambdaConvention::Twisted ? -1 : 1;
    if (forward) core = {Atom::rho(lo), Atom::sigma(lo, sgn)};
    else core = {Atom::sigma(lo, sgn), Atom::rho(lo)};
  } else {
    if (forward) core = {Atom::sigma(lo)};
    else core = {Atom::rho(lo), Atom::sigma(lo), Atom::rho(lo)};
  }
  std::vector<Atom> chain;
  for (int k = hi - 1; k > lo; --k) chain.push_back(Atom::rho(k));
  std::vector<Atom> atoms = chain;
  atoms.insert(atoms.end(), core.begin(), core.end());
  atoms.insert(atoms.end(), chain.rbegin(), chain.rend());

  std::vector<Atom> gs;
  if (g.deco_i) gs.push_back(Atom::gamma(g.i));
  if (g.deco_j) gs.push_back(Atom::gamma(g.j));
  std::sort(gs.begin(), gs.end());
  // x^{gamma_S} = gamma_S^{-1} x gamma_S
  std::vector<Atom> full(gs.rbegin(), gs.rend());
  full.insert(full.end(), atoms.begin(), atoms.end());
  full.insert(full.end(), gs.begin(), gs.end());

  Word e(n, Alphabet::Ambient, std::move(full));
  if (g.sign < 0) e = normalize_signs(inverse_raw(e));
  return reduce(e);
}

Word expand_to_ambient(const Word& w, LambdaConvention c) {
  std::vector<Atom> out;
  for (const Atom& a : w) {
    if (a.kind == Kind::Sigma || a.kind == Kind::Rho) {
      out.push_back(a);
      continue;
    }
    Word e = generator_expression(a, w.rank(), c);
    out.insert(out.end(), e.begin(), e.end());
  }
  return {w.rank(), Alphabet::Ambient, std::move(out)};
}

Word solve_for(const Word& r, const Atom& g) {
  std::size_t pos = r.size();
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (!r[k].same_generator(g)) continue;
    if (pos != r.size()) throw std::invalid_argument(format_atom(g) + " occurs more than once in " + format_word(r));
    pos = k;
  }
  if (pos == r.size()) throw std::invalid_argument(format_atom(g) + " does not occur in " + format_word(r));
  Word a = r.with_atoms({r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos)});
  Word b = r.with_atoms({r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end()});
  // A g^e B = 1  =>  g^e = A^{-1} B^{-1}
  Word ge = concat(inverse_raw(a), inverse_raw(b));
  return free_reduce(r[pos].sign > 0 ? ge : inverse_raw(ge));
}

std::map<Atom, Substitution> pair_elimination_rule(const Presentation& p) {
  std::map<Atom, Substitution> rule;
  for (const Relator& r : p.relators) {
    if (!(starts_with(r.id, "g4:") || starts_with(r.id, "g8:"))) continue;
    Kind k = starts_with(r.id, "g4:") ? Kind::Lambda : Kind::X;
    int i = 0;
    int j = 0;
    if (std::sscanf(r.id.c_str() + 3, "%d,%d", &i, &j) != 2) throw std::logic_error("bad relator id " + r.id);
    Atom target{k, j, i, false, false, 1};
    Word solved = solve_for(r.word, target);
    auto [body, suffix] = normalize_decorated(solved);
    if (!suffix.empty() || body.size() != 1) throw std::logic_error("unexpected solution " + format_word(solved));
    rule[target] = {Word(p.rank, p.alphabet, body.atoms()), r.id};
  }
  return rule;
}

Presentation eliminate_generators(const Presentation& p, const std::map<Atom, Substitution>& rule) {
  std::map<Atom, Word> resolved;
  std::set<Atom> visiting;
  std::function<const Word&(const Atom&)> resolve = [&](const Atom& g) -> const Word& {
    if (auto it = resolved.find(g); it != resolved.end()) return it->second;
    if (!visiting.insert(g).second) throw SubstitutionNotClosed("cyclic definition through " + format_atom(g));
    std::vector<Atom> out;
    for (const Atom& a : rule.at(g).replacement) {
      Atom key = a.base();
      if (rule.count(key)) {
        Word sub = resolve(key);
        if (a.sign < 0) sub = inverse_raw(sub);
        out.insert(out.end(), sub.begin(), sub.end());
      } else {
        out.push_back(a);
      }
    }
    visiting.erase(g);
    return resolved[g] = free_reduce(Word(p.rank, p.alphabet, std::move(out)));
  };

  std::set<std::string> dropped;
  for (const auto& [g, s] : rule) {
    if (g.sign != 1) throw std::invalid_argument("substitution keys must be positive atoms");
    resolve(g);
    dropped.insert(s.defining_relator);
  }

  Presentation out;
  out.family = p.family;
  out.rank = p.rank;
  out.alphabet = p.alphabet;
  for (const Atom& g : p.generators)
    if (!rule.count(g.base())) out.generators.push_back(g);
  for (const Relator& r : p.relators) {
    if (dropped.count(r.id)) continue;
    std::vector<Atom> atoms;
    for (const Atom& a : r.word) {
      auto it = resolved.find(a.base());
      if (it == resolved.end()) {
        atoms.push_back(a);
        continue;
      }
      Word sub = a.sign < 0 ? inverse_raw(it->second) : it->second;
      atoms.insert(atoms.end(), sub.begin(), sub.end());
    }
    Word wv = free_reduce(Word(p.rank, p.alphabet, std::move(atoms)));
    if (cyclic_free_reduce(wv).empty()) continue;
    out.relators.push_back({r.id, wv});
  }
  for (const Relator& r : out.relators)
    for (const Atom& a : r.word)
      if (rule.count(a.base())) throw SubstitutionNotClosed("eliminated " + format_atom(a) + " survives in " + r.id);
  return out;
}

std::string format_presentation(const Presentation& p) {
  std::string s = p.family + " n=" + std::to_string(p.rank) + "\n";
  for (const Atom& g : p.generators) s += "gen " + format_atom(g) + "\n";
  for (const Relator& r : p.relators) s += "rel " + format_word(normalize_signs(r.word)) + "\n";
  return s;
}

std::string presentation_json(const Presentation& p) {
  nlohmann::ordered_json j;
  j["family"] = p.family;
  j["n"] = p.rank;
  j["generators"] = nlohmann::ordered_json::array();
  for (const Atom& g : p.generators) j["generators"].push_back(format_atom(g));
  j["relators"] = nlohmann::ordered_json::array();
  for (const Relator& r : p.relators)
    j["relators"].push_back({{"id", r.id}, {"word", format_word(normalize_signs(r.word))}});
  return j.dump(2);
}

std::multiset<RelatorKey> relator_multiset(const std::vector<Word>& rels) {
  std::multiset<RelatorKey> out;
  for (const Word& r : rels)
    if (auto k = relator_key(r); !k.trivial()) out.insert(std::move(k));
  return out;
}

std::set<RelatorKey> relator_set(const std::vector<Word>& rels) {
  auto m = relator_multiset(rels);
  return {m.begin(), m.end()};
}

RelatorDiff diff_relator_sets(const std::vector<Word>& left, const std::vector<Word>& right) {
  auto a = relator_set(left);
  auto b = relator_set(right);
  RelatorDiff d;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d.only_left));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(d.only_right));
  return d;
}

}  // namespace tvb
