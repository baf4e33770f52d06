#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tvb/quotients.hpp"
#include "tvb/word.hpp"

namespace tvb {

/// Permutation of a word in the rho letters only, read left to right.
[[nodiscard]] Permutation rho_permutation(const Word& a);

/// a^{-1} g a for a rho-word a: indices (and any decoration) are moved by
/// the permutation of a. Orientation is not canonicalized.
[[nodiscard]] Atom act_sn(const Word& a, const Atom& g);
[[nodiscard]] Atom act_sn(const Permutation& p, const Atom& g);

/// Rewrites l_{ji}^{(T)} with j > i as l_{ij}^{(T xor {i,j})}; the identity
/// l_{ji} = l_{ij}^{gamma_i gamma_j} holds in TVP_n and TVH_n alike.
[[nodiscard]] Atom canonical(const Atom& g);

/// g^{gamma_k} for a Lambda/X atom, in canonical orientation. Gamma atoms are
/// returned unchanged.
[[nodiscard]] Atom act_gamma(int k, const Atom& g);

/// Pushes every gamma of w to the right. Returns the decorated word (canonical
/// atoms, no gammas) and the gamma suffix in ascending index order.
[[nodiscard]] std::pair<Word, Word> normalize_decorated(const Word& w);

/// {normalize(mu^{-1} r mu) : mu in A_n}, deduplicated up to rotation and
/// inversion, in the order of first appearance (mu enumerated as bitmasks).
[[nodiscard]] std::vector<Word> conjugation_orbit(const Word& r, int n);
/// Same, restricted to the given conjugating subsets (bitmask over 1..n).
[[nodiscard]] std::vector<Word> conjugation_orbit(const Word& r, int n, const std::vector<unsigned>& subsets);

struct IdentificationLine {
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

/// For every pair i > j and both the Lambda and X families, checks
/// l_{ij}^{g_i} = l_{ji}^{g_j}, l_{ij}^{g_j} = l_{ji}^{g_i} and
/// l_{ij} = l_{ji}^{g_j g_i} as equalities of normal forms.
[[nodiscard]] std::vector<IdentificationLine> check_generator_identification(int n);

}  // namespace tvb
