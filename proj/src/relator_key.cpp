#include "tvb/relator_key.hpp"

#include <algorithm>

namespace tvb {

namespace {

bool cancels(const Atom& a, const Atom& b) {
  return a.same_generator(b) && (a.is_involution() || a.sign != b.sign);
}

// Free + involution reduction of the cyclic word.
std::vector<Atom> fold_cyclic(const std::vector<Atom>& in) {
  std::vector<Atom> stack;
  for (Atom a : in) {
    if (a.is_involution()) a.sign = 1;
    if (!stack.empty() && cancels(stack.back(), a)) {
      stack.pop_back();
      continue;
    }
    stack.push_back(a);
  }
  std::size_t lo = 0;
  std::size_t hi = stack.size();
  while (hi - lo >= 2 && cancels(stack[lo], stack[hi - 1])) {
    ++lo;
    --hi;
  }
  return {stack.begin() + static_cast<std::ptrdiff_t>(lo), stack.begin() + static_cast<std::ptrdiff_t>(hi)};
}

bool has_non_gamma(const std::vector<Atom>& v) {
  return std::any_of(v.begin(), v.end(), [](const Atom& a) { return a.kind != Kind::Gamma; });
}

// Rotates so the word starts with a non-gamma letter and replaces each
// gamma run by its sorted parity set. Returns true if anything changed.
bool canonicalize_runs(std::vector<Atom>& v) {
  auto first = std::find_if(v.begin(), v.end(), [](const Atom& a) { return a.kind != Kind::Gamma; });
  std::rotate(v.begin(), first, v.end());
  std::vector<Atom> out;
  bool changed = false;
  std::size_t k = 0;
  while (k < v.size()) {
    if (v[k].kind != Kind::Gamma) {
      out.push_back(v[k++]);
      continue;
    }
    std::vector<int> run;
    std::size_t start = k;
    while (k < v.size() && v[k].kind == Kind::Gamma) run.push_back(v[k++].i);
    std::vector<int> parity;
    std::sort(run.begin(), run.end());
    for (std::size_t a = 0; a < run.size();) {
      std::size_t b = a;
      while (b < run.size() && run[b] == run[a]) ++b;
      if ((b - a) % 2 == 1) parity.push_back(run[a]);
      a = b;
    }
    for (int idx : parity) out.push_back(Atom::gamma(idx));
    if (parity.size() != k - start) changed = true;
    else
      for (std::size_t t = 0; t < parity.size(); ++t)
        if (v[start + t].i != parity[t]) changed = true;
  }
  v = std::move(out);
  return changed;
}

std::vector<Atom> canonical_cycle(std::vector<Atom> v) {
  for (;;) {
    v = fold_cyclic(v);
    if (v.empty() || !has_non_gamma(v)) return v;
    if (!canonicalize_runs(v)) return v;
  }
}

std::vector<Atom> min_rotation(const std::vector<Atom>& v) {
  std::vector<Atom> best = v;
  std::vector<Atom> cur = v;
  for (std::size_t r = 1; r < v.size(); ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace

RelatorKey relator_key(const Word& w) {
  Word raw = cyclic_free_reduce(w);
  if (raw.size() == 2 && raw[0].is_involution() && raw[0].same_generator(raw[1]))
    return {RelatorKey::Tag::Square, {raw[0].base()}};

  std::vector<Atom> v = canonical_cycle(raw.atoms());
  if (v.empty()) return {};

  std::vector<Atom> inv;
  for (auto it = v.rbegin(); it != v.rend(); ++it) inv.push_back(it->is_involution() ? *it : it->inverse());
  inv = canonical_cycle(std::move(inv));

  return {RelatorKey::Tag::Cyclic, std::min(min_rotation(v), min_rotation(inv))};
}

std::string format_key(const RelatorKey& k) {
  switch (k.tag) {
    case RelatorKey::Tag::Trivial: return "<trivial>";
    case RelatorKey::Tag::Square: return "(" + format_atom(k.atoms.front()) + ")^2";
    case RelatorKey::Tag::Cyclic: break;
  }
  std::string s;
  for (std::size_t t = 0; t < k.atoms.size(); ++t) {
    if (t) s += ' ';
    s += format_atom(k.atoms[t]);
  }
  return s;
}

}  // namespace tvb
