#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tvb {

/// Generator families. Sigma/Rho/Gamma are the ambient letters of TVB_n,
/// Lambda and X are the named generators of the pure subgroups.
enum class Kind : std::uint8_t { Sigma, Rho, Gamma, Lambda, X };

/// Which letters a word may contain.
enum class Alphabet : std::uint8_t {
  Ambient,      // s, r, g
  PureTwisted,  // l (optionally decorated), g
  HTwisted,     // x (optionally decorated), g
  DecoratedPL,  // l with decorations, no g
  DecoratedHL,  // x with decorations, no g
  Mixed
};

std::string_view to_string(Alphabet a);

/// One signed letter. For Lambda/X atoms `deco_i` / `deco_j` record a
/// gamma-conjugation by the generator carrying index `i` / `j`, so that
/// `l1,2:12` is lambda_{12}^{gamma_1 gamma_2}.
struct Atom {
  Kind kind = Kind::Sigma;
  int i = 0;
  int j = 0;
  bool deco_i = false;
  bool deco_j = false;
  int sign = 1;

  static Atom sigma(int i, int sign = 1) { return {Kind::Sigma, i, 0, false, false, sign}; }
  static Atom rho(int i) { return {Kind::Rho, i, 0, false, false, 1}; }
  static Atom gamma(int i) { return {Kind::Gamma, i, 0, false, false, 1}; }
  static Atom lambda(int i, int j, int sign = 1, bool di = false, bool dj = false) {
    return {Kind::Lambda, i, j, di, dj, sign};
  }
  static Atom x(int i, int j, int sign = 1, bool di = false, bool dj = false) {
    return {Kind::X, i, j, di, dj, sign};
  }

  [[nodiscard]] bool is_involution() const { return kind == Kind::Rho || kind == Kind::Gamma; }
  [[nodiscard]] bool is_pair() const { return kind == Kind::Lambda || kind == Kind::X; }
  [[nodiscard]] bool decorated() const { return deco_i || deco_j; }
  [[nodiscard]] Atom inverse() const {
    Atom a = *this;
    a.sign = -a.sign;
    return a;
  }
  /// The generator this atom is a power of (sign forced to +1).
  [[nodiscard]] Atom base() const {
    Atom a = *this;
    a.sign = 1;
    return a;
  }
  [[nodiscard]] bool same_generator(const Atom& o) const {
    return kind == o.kind && i == o.i && j == o.j && deco_i == o.deco_i && deco_j == o.deco_j;
  }

  friend auto operator<=>(const Atom&, const Atom&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class RankMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite sequence of atoms at a fixed rank. Words are plain values; every
/// operation below returns a new word.
class Word {
 public:
  Word() = default;
  Word(int rank, Alphabet alphabet, std::vector<Atom> atoms = {})
      : rank_(rank), alphabet_(alphabet), atoms_(std::move(atoms)) {}

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] Alphabet alphabet() const { return alphabet_; }
  [[nodiscard]] const std::vector<Atom>& atoms() const { return atoms_; }
  [[nodiscard]] std::size_t size() const { return atoms_.size(); }
  [[nodiscard]] bool empty() const { return atoms_.empty(); }
  [[nodiscard]] const Atom& operator[](std::size_t k) const { return atoms_[k]; }
  [[nodiscard]] auto begin() const { return atoms_.begin(); }
  [[nodiscard]] auto end() const { return atoms_.end(); }

  [[nodiscard]] Word with_atoms(std::vector<Atom> atoms) const { return {rank_, alphabet_, std::move(atoms)}; }
  [[nodiscard]] Word with_alphabet(Alphabet a) const { return {rank_, a, atoms_}; }

  /// Equality compares letters and rank; the alphabet tag is bookkeeping.
  friend bool operator==(const Word& a, const Word& b) { return a.rank_ == b.rank_ && a.atoms_ == b.atoms_; }

 private:
  int rank_ = 1;
  Alphabet alphabet_ = Alphabet::Ambient;
  std::vector<Atom> atoms_;
};

/// True when `a` may appear in a word of the given alphabet and rank.
[[nodiscard]] bool atom_legal(const Atom& a, int rank, Alphabet alphabet);
/// Throws std::invalid_argument describing why `a` is illegal, if it is.
void require_legal(const Atom& a, int rank, Alphabet alphabet);

[[nodiscard]] Word parse_word(std::string_view text, int rank, Alphabet alphabet);
[[nodiscard]] std::string format_atom(const Atom& a);
[[nodiscard]] std::string format_word(const Word& w);

/// Free cancellation plus rho_i^2 = gamma_j^2 = 1; involution letters come out
/// with sign +1.
[[nodiscard]] Word reduce(const Word& w);
/// Free cancellation only; signs are kept exactly.
[[nodiscard]] Word free_reduce(const Word& w);
/// Free reduction of the cyclic word (first/last letters cancelled too).
[[nodiscard]] Word cyclic_free_reduce(const Word& w);
/// Sets every rho/gamma sign to +1 without cancelling anything.
[[nodiscard]] Word normalize_signs(const Word& w);

/// Exact formal inverse: reversed with signs flipped, no reduction.
[[nodiscard]] Word inverse_raw(const Word& w);
[[nodiscard]] Word invert(const Word& w);
/// Raw concatenation. Ranks must agree; mixed alphabets give Alphabet::Mixed.
[[nodiscard]] Word concat(const Word& a, const Word& b);
[[nodiscard]] Word concat(std::initializer_list<Word> parts);
/// w^a = a^{-1} w a, reduced.
[[nodiscard]] Word conjugate(const Word& w, const Word& a);

[[nodiscard]] Alphabet join(Alphabet a, Alphabet b);

}  // namespace tvb
