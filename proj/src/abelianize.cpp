#include "tvb/abelianize.hpp"

#include <map>
#include <optional>

namespace tvb {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> init) {
  rows = init.size();
  cols = rows ? init.begin()->size() : 0;
  for (const auto& row : init) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
    for (long long v : row) data.emplace_back(v);
  }
}

IntegerMatrix relation_matrix(const Presentation& p) {
  std::map<Atom, std::size_t> column;
  for (std::size_t c = 0; c < p.generators.size(); ++c) column.emplace(p.generators[c].base(), c);
  auto column_of = [&](const Atom& a) {
    if (auto it = column.find(a.base()); it != column.end()) return it->second;
    Atom plain = a.base();
    plain.deco_i = plain.deco_j = false;
    if (auto it = column.find(plain); it != column.end()) return it->second;
    throw std::invalid_argument("letter " + format_atom(a) + " is not a generator of " + p.family);
  };
  IntegerMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (const Atom& a : p.relators[r].word) m.at(r, column_of(a)) += a.sign;
  return m;
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, a), m.at(r, b));
}

std::optional<std::pair<std::size_t, std::size_t>> smallest(const IntegerMatrix& m, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t r = t; r < m.rows; ++r)
    for (std::size_t c = t; c < m.cols; ++c) {
      const Integer& v = m.at(r, c);
      if (v == 0) continue;
      Integer a = abs(v);
      if (!best || a < best_abs) {
        best = {r, c};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace

SmithForm smith_normal_form(IntegerMatrix m) {
  SmithForm out;
  const std::size_t limit = std::min(m.rows, m.cols);
  for (std::size_t t = 0; t < limit; ++t) {
    auto pivot = smallest(m, t);
    if (!pivot) break;
    for (;;) {
      swap_rows(m, t, pivot->first);
      swap_cols(m, t, pivot->second);
      const Integer p = m.at(t, t);
      bool dirty = false;
      for (std::size_t r = t + 1; r < m.rows; ++r) {
        if (m.at(r, t) == 0) continue;
        Integer q = m.at(r, t) / p;
        for (std::size_t c = t; c < m.cols; ++c) m.at(r, c) -= q * m.at(t, c);
        dirty = dirty || m.at(r, t) != 0;
      }
      for (std::size_t c = t + 1; c < m.cols; ++c) {
        if (m.at(t, c) == 0) continue;
        Integer q = m.at(t, c) / p;
        for (std::size_t r = t; r < m.rows; ++r) m.at(r, c) -= q * m.at(r, t);
        dirty = dirty || m.at(t, c) != 0;
      }
      if (!dirty) {
        // pivot must divide the rest of the block
        std::optional<std::size_t> bad;
        for (std::size_t r = t + 1; r < m.rows && !bad; ++r)
          for (std::size_t c = t + 1; c < m.cols; ++c)
            if (m.at(r, c) % p != 0) {
              bad = r;
              break;
            }
        if (!bad) break;
        for (std::size_t c = t; c < m.cols; ++c) m.at(t, c) += m.at(*bad, c);
      }
      // the new pivot is the smallest entry in row t or column t
      std::pair<std::size_t, std::size_t> best{t, t};
      Integer best_abs = abs(m.at(t, t));
      for (std::size_t r = t; r < m.rows; ++r)
        if (m.at(r, t) != 0 && abs(m.at(r, t)) < best_abs) best = {r, t}, best_abs = abs(m.at(r, t));
      for (std::size_t c = t; c < m.cols; ++c)
        if (m.at(t, c) != 0 && abs(m.at(t, c)) < best_abs) best = {t, c}, best_abs = abs(m.at(t, c));
      pivot = best;
    }
    out.factors.push_back(abs(m.at(t, t)));
    ++out.rank;
  }
  return out;
}

std::string AbelianInvariants::format() const {
  std::vector<std::string> parts;
  if (free_rank) parts.push_back("Z^" + std::to_string(free_rank));
  for (std::size_t k = 0; k < torsion.size();) {
    std::size_t e = k;
    while (e < torsion.size() && torsion[e] == torsion[k]) ++e;
    parts.push_back("Z_" + torsion[k].str() + "^" + std::to_string(e - k));
    k = e;
  }
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) s += " + " + parts[k];
  return s;
}

AbelianInvariants invariants_of(const IntegerMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  AbelianInvariants inv;
  inv.free_rank = m.cols - snf.rank;
  for (const Integer& d : snf.factors)
    if (d > 1) inv.torsion.push_back(d);
  return inv;
}

AbelianInvariants abelian_invariants(const Presentation& p) { return invariants_of(relation_matrix(p)); }

bool same_invariants(const AbelianInvariants& a, const AbelianInvariants& b) { return a == b; }

}  // namespace tvb
