#include "tvb/conj.hpp"

#include <algorithm>
#include <set>

#include "tvb/relator_key.hpp"

namespace tvb {

Permutation rho_permutation(const Word& a) {
  Permutation p = Permutation::identity(a.rank());
  for (const Atom& x : a) {
    if (x.kind != Kind::Rho) throw std::invalid_argument("expected a word in the rho letters, got " + format_atom(x));
    p = compose(p, Permutation::transposition(a.rank(), x.i, x.i + 1));
  }
  return p;
}

Atom act_sn(const Permutation& p, const Atom& g) {
  Atom out = g;
  switch (g.kind) {
    case Kind::Gamma: out.i = p(g.i); break;
    case Kind::Lambda:
    case Kind::X:
      out.i = p(g.i);
      out.j = p(g.j);
      break;
    default: throw std::invalid_argument("act_sn applies to subgroup atoms, got " + format_atom(g));
  }
  return out;
}

Atom act_sn(const Word& a, const Atom& g) { return act_sn(rho_permutation(a), g); }

Atom canonical(const Atom& g) {
  if (!g.is_pair() || g.i < g.j) return g;
  Atom out = g;
  out.i = g.j;
  out.j = g.i;
  out.deco_i = !g.deco_j;
  out.deco_j = !g.deco_i;
  return out;
}

Atom act_gamma(int k, const Atom& g) {
  if (g.kind == Kind::Gamma) return g;
  if (!g.is_pair()) throw std::invalid_argument("act_gamma applies to subgroup atoms, got " + format_atom(g));
  Atom out = g;
  if (k == g.i) out.deco_i = !out.deco_i;
  if (k == g.j) out.deco_j = !out.deco_j;
  return canonical(out);
}

std::pair<Word, Word> normalize_decorated(const Word& w) {
  std::vector<bool> pending(static_cast<std::size_t>(w.rank() + 1), false);
  std::vector<Atom> body;
  for (const Atom& a : w) {
    if (a.kind == Kind::Gamma) {
      pending[static_cast<std::size_t>(a.i)] = !pending[static_cast<std::size_t>(a.i)];
      continue;
    }
    if (!a.is_pair()) throw std::invalid_argument("normalize_decorated: unexpected letter " + format_atom(a));
    // gamma_G a gamma_G = a^{gamma_G}
    Atom t = a;
    if (pending[static_cast<std::size_t>(a.i)]) t.deco_i = !t.deco_i;
    if (pending[static_cast<std::size_t>(a.j)]) t.deco_j = !t.deco_j;
    body.push_back(canonical(t));
  }
  std::vector<Atom> suffix;
  for (int k = 1; k <= w.rank(); ++k)
    if (pending[static_cast<std::size_t>(k)]) suffix.push_back(Atom::gamma(k));
  bool has_l = std::any_of(body.begin(), body.end(), [](const Atom& a) { return a.kind == Kind::Lambda; });
  bool has_x = std::any_of(body.begin(), body.end(), [](const Atom& a) { return a.kind == Kind::X; });
  Alphabet body_alpha = has_l && has_x ? Alphabet::Mixed
                        : has_x        ? Alphabet::DecoratedHL
                        : has_l        ? Alphabet::DecoratedPL
                        : w.alphabet() == Alphabet::HTwisted ? Alphabet::DecoratedHL
                                                             : Alphabet::DecoratedPL;
  return {free_reduce(Word(w.rank(), body_alpha, std::move(body))), Word(w.rank(), w.alphabet(), std::move(suffix))};
}

std::vector<Word> conjugation_orbit(const Word& r, int n, const std::vector<unsigned>& subsets) {
  std::vector<Word> out;
  std::set<RelatorKey> seen;
  for (unsigned mask : subsets) {
    std::vector<Atom> mu;
    for (int k = 1; k <= n; ++k)
      if (mask & (1u << (k - 1))) mu.push_back(Atom::gamma(k));
    Word m(n, Alphabet::PureTwisted, mu);
    // mu^{-1} r mu with mu a product of commuting involutions
    auto [body, suffix] = normalize_decorated(concat({inverse_raw(m), r, m}));
    if (!suffix.empty()) throw std::logic_error("conjugate of a gamma-free relator kept a gamma suffix");
    if (seen.insert(relator_key(body)).second) out.push_back(body);
  }
  return out;
}

std::vector<Word> conjugation_orbit(const Word& r, int n) {
  std::vector<unsigned> all;
  for (unsigned mask = 0; mask < (1u << n); ++mask) all.push_back(mask);
  return conjugation_orbit(r, n, all);
}

std::vector<IdentificationLine> check_generator_identification(int n) {
  std::vector<IdentificationLine> lines;
  for (Kind kind : {Kind::Lambda, Kind::X}) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j < i; ++j) {
        Atom ij{kind, i, j, false, false, 1};
        Atom ji{kind, j, i, false, false, 1};
        auto deco = [](Atom a, bool first, bool second) {
          a.deco_i = first;
          a.deco_j = second;
          return a;
        };
        const std::pair<Atom, Atom> ids[] = {
            {deco(ij, true, false), deco(ji, true, false)},   // l_ij^{g_i} = l_ji^{g_j}
            {deco(ij, false, true), deco(ji, false, true)},   // l_ij^{g_j} = l_ji^{g_i}
            {ij, deco(ji, true, true)},                       // l_ij = l_ji^{g_j g_i}
        };
        for (const auto& [lhs, rhs] : ids)
          lines.push_back({format_atom(lhs), format_atom(rhs), canonical(lhs) == canonical(rhs)});
      }
    }
  }
  return lines;
}

}  // namespace tvb
