#include "tvb/word.hpp"

#include <algorithm>
#include <cctype>

namespace tvb {

std::string_view to_string(Alphabet a) {
  switch (a) {
    case Alphabet::Ambient: return "ambient";
    case Alphabet::PureTwisted: return "pure-twisted";
    case Alphabet::HTwisted: return "h-twisted";
    case Alphabet::DecoratedPL: return "decorated-pl";
    case Alphabet::DecoratedHL: return "decorated-hl";
    case Alphabet::Mixed: return "mixed";
  }
  return "?";
}

namespace {

bool kind_allowed(Kind k, Alphabet alphabet) {
  switch (alphabet) {
    case Alphabet::Ambient: return k == Kind::Sigma || k == Kind::Rho || k == Kind::Gamma;
    case Alphabet::PureTwisted: return k == Kind::Lambda || k == Kind::Gamma;
    case Alphabet::HTwisted: return k == Kind::X || k == Kind::Gamma;
    case Alphabet::DecoratedPL: return k == Kind::Lambda;
    case Alphabet::DecoratedHL: return k == Kind::X;
    case Alphabet::Mixed: return true;
  }
  return false;
}

std::string index_problem(const Atom& a, int rank) {
  switch (a.kind) {
    case Kind::Sigma:
    case Kind::Rho:
      if (a.i < 1 || a.i > rank - 1) return "index " + std::to_string(a.i) + " outside [1, n-1]";
      break;
    case Kind::Gamma:
      if (a.i < 1 || a.i > rank) return "index " + std::to_string(a.i) + " outside [1, n]";
      break;
    case Kind::Lambda:
    case Kind::X:
      if (a.i < 1 || a.i > rank || a.j < 1 || a.j > rank)
        return "indices " + std::to_string(a.i) + "," + std::to_string(a.j) + " outside [1, n]";
      if (a.i == a.j) return "repeated index " + std::to_string(a.i);
      break;
  }
  if (!a.is_pair() && a.decorated()) return "decoration on a letter without index pair";
  if (a.sign != 1 && a.sign != -1) return "sign must be +1 or -1";
  return {};
}

}  // namespace

bool atom_legal(const Atom& a, int rank, Alphabet alphabet) {
  return kind_allowed(a.kind, alphabet) && index_problem(a, rank).empty();
}

void require_legal(const Atom& a, int rank, Alphabet alphabet) {
  if (!kind_allowed(a.kind, alphabet))
    throw std::invalid_argument("letter " + format_atom(a) + " not in alphabet " + std::string(to_string(alphabet)));
  if (auto p = index_problem(a, rank); !p.empty())
    throw std::invalid_argument("letter " + format_atom(a) + ": " + p + " (n=" + std::to_string(rank) + ")");
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t token_start = 0;

  [[nodiscard]] bool done() const { return pos >= text.size(); }
  [[nodiscard]] char peek() const { return done() ? '\0' : text[pos]; }

  int number() {
    std::size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("expected digits", pos);
    if (pos - start > 6) throw ParseError("index too large", start);
    return std::stoi(std::string(text.substr(start, pos - start)));
  }

  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
};

Atom parse_atom(Cursor& c) {
  Atom a;
  c.token_start = c.pos;
  char head = c.peek();
  ++c.pos;
  switch (head) {
    case 's': a.kind = Kind::Sigma; break;
    case 'r': a.kind = Kind::Rho; break;
    case 'g': a.kind = Kind::Gamma; break;
    case 'l': a.kind = Kind::Lambda; break;
    case 'x': a.kind = Kind::X; break;
    default: throw ParseError(std::string("unknown letter '") + head + "'", c.token_start);
  }
  a.i = c.number();
  if (a.is_pair()) {
    c.expect(',');
    a.j = c.number();
    if (c.peek() == ':') {
      ++c.pos;
      std::size_t start = c.pos;
      while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
      std::string d(c.text.substr(start, c.pos - start));
      const std::string si = std::to_string(a.i);
      const std::string sj = std::to_string(a.j);
      if (d == si + sj) {
        a.deco_i = a.deco_j = true;
      } else if (d == si) {
        a.deco_i = true;
      } else if (d == sj) {
        a.deco_j = true;
      } else {
        throw ParseError("decoration '" + d + "' must be built from the indices " + si + "," + sj, start);
      }
    }
  }
  if (c.peek() == '^') {
    ++c.pos;
    c.expect('-');
    c.expect('1');
    a.sign = -1;
  }
  if (!c.done() && c.peek() != ' ') throw ParseError("unexpected character", c.pos);
  return a;
}

}  // namespace

Word parse_word(std::string_view text, int rank, Alphabet alphabet) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  std::vector<Atom> atoms;
  Cursor c{text};
  while (!c.done()) {
    Atom a = parse_atom(c);
    try {
      require_legal(a, rank, alphabet);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), c.token_start);
    }
    atoms.push_back(a);
    if (!c.done()) {
      c.expect(' ');
      if (c.done() || c.peek() == ' ') throw ParseError("empty token", c.pos);
    }
  }
  return {rank, alphabet, std::move(atoms)};
}

std::string format_atom(const Atom& a) {
  std::string s;
  switch (a.kind) {
    case Kind::Sigma: s = "s"; break;
    case Kind::Rho: s = "r"; break;
    case Kind::Gamma: s = "g"; break;
    case Kind::Lambda: s = "l"; break;
    case Kind::X: s = "x"; break;
  }
  s += std::to_string(a.i);
  if (a.is_pair()) {
    s += ',';
    s += std::to_string(a.j);
    if (a.decorated()) {
      s += ':';
      if (a.deco_i) s += std::to_string(a.i);
      if (a.deco_j) s += std::to_string(a.j);
    }
  }
  if (a.sign < 0) s += "^-1";
  return s;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += format_atom(w[k]);
  }
  return out;
}

Word reduce(const Word& w) {
  std::vector<Atom> stack;
  stack.reserve(w.size());
  for (Atom a : w) {
    if (a.is_involution()) a.sign = 1;
    if (!stack.empty()) {
      const Atom& top = stack.back();
      if (top.same_generator(a) && (top.sign != a.sign || a.is_involution())) {
        stack.pop_back();
        continue;
      }
    }
    stack.push_back(a);
  }
  return w.with_atoms(std::move(stack));
}

Word free_reduce(const Word& w) {
  std::vector<Atom> stack;
  stack.reserve(w.size());
  for (const Atom& a : w) {
    if (!stack.empty() && stack.back() == a.inverse()) {
      stack.pop_back();
      continue;
    }
    stack.push_back(a);
  }
  return w.with_atoms(std::move(stack));
}

Word cyclic_free_reduce(const Word& w) {
  std::vector<Atom> atoms = free_reduce(w).atoms();
  std::size_t lo = 0;
  std::size_t hi = atoms.size();
  while (hi - lo >= 2 && atoms[lo] == atoms[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return w.with_atoms({atoms.begin() + static_cast<std::ptrdiff_t>(lo), atoms.begin() + static_cast<std::ptrdiff_t>(hi)});
}

Word normalize_signs(const Word& w) {
  std::vector<Atom> atoms = w.atoms();
  for (Atom& a : atoms)
    if (a.is_involution()) a.sign = 1;
  return w.with_atoms(std::move(atoms));
}

Word inverse_raw(const Word& w) {
  std::vector<Atom> atoms;
  atoms.reserve(w.size());
  for (auto it = w.atoms().rbegin(); it != w.atoms().rend(); ++it) atoms.push_back(it->inverse());
  return w.with_atoms(std::move(atoms));
}

Word invert(const Word& w) { return reduce(inverse_raw(w)); }

Alphabet join(Alphabet a, Alphabet b) { return a == b ? a : Alphabet::Mixed; }

Word concat(const Word& a, const Word& b) {
  if (a.rank() != b.rank())
    throw RankMismatch("rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
  std::vector<Atom> atoms = a.atoms();
  atoms.insert(atoms.end(), b.begin(), b.end());
  Alphabet alpha = a.empty() ? b.alphabet() : (b.empty() ? a.alphabet() : join(a.alphabet(), b.alphabet()));
  return {a.rank(), alpha, std::move(atoms)};
}

Word concat(std::initializer_list<Word> parts) {
  if (parts.size() == 0) throw std::invalid_argument("concat of no words");
  Word out = *parts.begin();
  for (auto it = parts.begin() + 1; it != parts.end(); ++it) out = concat(out, *it);
  return out;
}

Word conjugate(const Word& w, const Word& a) { return reduce(concat({inverse_raw(a), w, a})); }

}  // namespace tvb
