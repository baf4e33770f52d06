#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tvb/relator_key.hpp"
#include "tvb/word.hpp"

namespace tvb {

struct Relator {
  std::string id;
  Word word;
};

/// Relators are stored as lhs * rhs^{-1} after free cancellation, with the
/// signs of every letter kept (so exponent sums are exact). Use
/// `normalize_signs` before printing.
struct Presentation {
  std::string family;
  int rank = 1;
  Alphabet alphabet = Alphabet::Ambient;
  std::vector<Atom> generators;
  std::vector<Relator> relators;

  [[nodiscard]] std::vector<Word> relator_words() const;
  [[nodiscard]] bool has_generator(const Atom& a) const;
};

class UnknownFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// bn vbn tvbn tsn an vpn vhn tvpn tvpn-reduced tvhn tvhn-reduced pln hln
[[nodiscard]] const std::vector<std::string>& family_names();
[[nodiscard]] int minimum_rank(const std::string& family);
[[nodiscard]] Presentation build_presentation(const std::string& family, int n);

/// Which embedding of lambda_{i,i+1} to use: rho_i s_i^{-1} for the twisted
/// pure group, rho_i s_i for VP_n.
enum class LambdaConvention { Twisted, Virtual };

/// Ambient word of a subgroup atom (Lambda, X, possibly decorated, or Gamma).
[[nodiscard]] Word generator_expression(const Atom& g, int n, LambdaConvention c = LambdaConvention::Twisted);
/// Letterwise expansion of a subgroup word into the ambient alphabet.
[[nodiscard]] Word expand_to_ambient(const Word& w, LambdaConvention c = LambdaConvention::Twisted);

struct Substitution {
  Word replacement;
  std::string defining_relator;  // dropped from the result
};

class SubstitutionNotClosed : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Solves relator `r`, in which `g` occurs exactly once, for `g`.
[[nodiscard]] Word solve_for(const Word& r, const Atom& g);

/// Tietze elimination. Replacement words may mention other eliminated
/// generators as long as the chain of definitions is acyclic.
[[nodiscard]] Presentation eliminate_generators(const Presentation& p, const std::map<Atom, Substitution>& rule);

/// Removes each lambda_{ji} (x_{ji}), j > i, using its g4 (g8) relator; the
/// replacement is the decorated atom lambda_{ij}^{(ij)}.
[[nodiscard]] std::map<Atom, Substitution> pair_elimination_rule(const Presentation& p);

[[nodiscard]] std::string format_presentation(const Presentation& p);
[[nodiscard]] std::string presentation_json(const Presentation& p);

/// Keys of the non-trivial relators.
[[nodiscard]] std::multiset<RelatorKey> relator_multiset(const std::vector<Word>& rels);
[[nodiscard]] std::set<RelatorKey> relator_set(const std::vector<Word>& rels);

struct RelatorDiff {
  std::vector<RelatorKey> only_left;
  std::vector<RelatorKey> only_right;
  [[nodiscard]] bool empty() const { return only_left.empty() && only_right.empty(); }
};
[[nodiscard]] RelatorDiff diff_relator_sets(const std::vector<Word>& left, const std::vector<Word>& right);

}  // namespace tvb
