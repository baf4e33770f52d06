#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "tvb/presentations.hpp"
#include "tvb/quotients.hpp"
#include "tvb/word.hpp"

namespace tvb {

enum class TargetKind { Symmetric, Hyperoctahedral, ElementaryAbelian };

class UnknownHomomorphism : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Homomorphism into a finite concrete group. Every target is carried as a
/// signed permutation; S_n targets have all signs zero, A_n targets have the
/// identity permutation.
class ConcreteHom {
 public:
  ConcreteHom(std::string name, std::string source_family, int n, TargetKind target);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const std::string& source_family() const { return source_; }
  [[nodiscard]] int rank() const { return n_; }
  [[nodiscard]] TargetKind target() const { return target_; }
  [[nodiscard]] Alphabet source_alphabet() const;

  void set_image(const Atom& generator, SignedPermutation image);
  [[nodiscard]] SignedPermutation atom_image(const Atom& a) const;
  /// Throws std::invalid_argument on letters outside the source alphabet.
  [[nodiscard]] SignedPermutation image(const Word& w) const;
  [[nodiscard]] bool in_kernel(const Word& w) const { return image(w).is_identity(); }
  [[nodiscard]] SignedPermutation identity() const { return SignedPermutation::identity(n_); }
  [[nodiscard]] std::string format(const SignedPermutation& e) const;

 private:
  std::string name_;
  std::string source_;
  int n_;
  TargetKind target_;
  std::map<Atom, SignedPermutation> images_;
};

/// Homomorphism given by a table of target words.
class PresentationHom {
 public:
  PresentationHom(std::string name, std::string source_family, std::string target_family, int n);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const std::string& source_family() const { return source_; }
  [[nodiscard]] const std::string& target_family() const { return target_; }
  [[nodiscard]] int rank() const { return n_; }

  void set_image(const Atom& generator, Word image);
  [[nodiscard]] Word image(const Word& w) const;

 private:
  std::string name_;
  std::string source_;
  std::string target_;
  int n_;
  std::map<Atom, Word> images_;
};

/// TVB_n into Z^n x| (signed permutations), used to tell subgroup generators
/// apart where the finite quotients cannot: s_i goes to the swap of
/// coordinates i, i+1 followed by translation e_i - e_{i+1}, r_i to the swap,
/// g_j to the sign change of coordinate j. Then l_{ab} is the translation
/// e_a - e_b and x_{ab} the swap of a, b followed by it.
class AffineHom {
 public:
  explicit AffineHom(int n);
  [[nodiscard]] std::string name() const { return "affP"; }
  [[nodiscard]] int rank() const { return n_; }
  [[nodiscard]] AffineSignedPermutation image(const Word& ambient) const;

 private:
  int n_;
  std::vector<AffineSignedPermutation> sigma_, rho_, gamma_;
};

using Homomorphism = std::variant<ConcreteHom, PresentationHom>;

/// phiP phiH phiPT phiHT psiP psiH plToVp
[[nodiscard]] const std::vector<std::string>& hom_names();
[[nodiscard]] Homomorphism make_hom(const std::string& name, int n);
[[nodiscard]] ConcreteHom make_concrete_hom(const std::string& name, int n);

struct CheckLine {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct WellDefinedReport {
  std::string hom;
  int n = 0;
  std::vector<CheckLine> lines;
  [[nodiscard]] bool ok() const;
  [[nodiscard]] std::vector<CheckLine> failures() const;
  /// `<relator-id> <PASS|FAIL> <detail>` per line.
  [[nodiscard]] std::string format() const;
};

[[nodiscard]] WellDefinedReport check_well_defined(const ConcreteHom& h);
[[nodiscard]] WellDefinedReport check_well_defined(const ConcreteHom& h, const std::vector<Relator>& relators);
[[nodiscard]] WellDefinedReport check_well_defined(const PresentationHom& h);
[[nodiscard]] WellDefinedReport check_well_defined(const PresentationHom& h, const std::vector<Relator>& relators);
[[nodiscard]] WellDefinedReport check_well_defined(const AffineHom& h);
[[nodiscard]] WellDefinedReport check_well_defined(const Homomorphism& h);

/// Serialized image: a permutation, signed permutation, or target word.
[[nodiscard]] std::string image_string(const Homomorphism& h, const Word& w);

class KernelUndecidable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Only for concrete targets; presentation targets throw KernelUndecidable.
[[nodiscard]] bool in_kernel(const Homomorphism& h, const Word& w);

}  // namespace tvb
