#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tvb/homomorphisms.hpp"
#include "tvb/presentations.hpp"
#include "tvb/quotients.hpp"
#include "tvb/word.hpp"

namespace tvb {

/// The six kernels handled here, with their quotient maps:
///   TVP = ker phiP, TVH = ker phiH, PT = ker phiPT, HT = ker phiHT inside TVB_n,
///   PL = ker psiP inside TVP_n, HL = ker psiH inside TVH_n.
enum class KernelKind { TVP, TVH, PT, HT, PL, HL };

[[nodiscard]] KernelKind parse_kernel_kind(const std::string& name);
[[nodiscard]] std::string to_string(KernelKind k);

enum class TransversalKind { LambdaN, AN, LambdaTimesAN };

struct Transversal {
  TransversalKind kind = TransversalKind::LambdaN;
  int n = 1;
  std::vector<Word> words;
  std::vector<SignedPermutation> images;
  std::map<SignedPermutation, std::size_t> index;

  [[nodiscard]] std::size_t size() const { return words.size(); }
  [[nodiscard]] bool contains(const Word& w) const;
};

class TransversalCollision : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Words in order of construction. LambdaN: products m_2 ... m_n with
/// m_{k,l} = r_{k-1} ... r_l (j_k running from k down to 1). AN: gamma subsets
/// in ascending index order, by bitmask. LambdaTimesAN: lambda * mu.
[[nodiscard]] Transversal build_transversal(TransversalKind kind, int n, const ConcreteHom& quotient);
/// Every prefix of every word is again a word of the transversal.
[[nodiscard]] bool has_schreier_property(const Transversal& t);

struct RSContext {
  KernelKind kind = KernelKind::TVP;
  int n = 1;
  Presentation ambient;
  ConcreteHom quotient{"", "", 1, TargetKind::Symmetric};
  Transversal transversal;
  Alphabet subgroup_alphabet = Alphabet::PureTwisted;
  // (transversal index, positive ambient generator) -> subgroup atom, or none for identity
  std::map<std::pair<std::size_t, Atom>, std::optional<Atom>> table;
};

class ClassificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotInKernel : public std::invalid_argument {
 public:
  NotInKernel(const std::string& what, std::string image) : std::invalid_argument(what), image_(std::move(image)) {}
  [[nodiscard]] const std::string& image() const { return image_; }

 private:
  std::string image_;
};

/// Builds the transversal and the full classification table; every entry is
/// checked against the Schreier generator it names.
[[nodiscard]] RSContext make_context(KernelKind kind, int n);

[[nodiscard]] Word representative(const RSContext& ctx, const Word& w);
[[nodiscard]] std::size_t representative_index(const RSContext& ctx, const Word& w);
/// reduce(t a rep(t a)^{-1}), over the ambient alphabet.
[[nodiscard]] Word schreier_generator(const RSContext& ctx, const Word& t, const Atom& a);
[[nodiscard]] std::optional<Atom> classify_generator(const RSContext& ctx, const Word& t, const Atom& a);

/// Expansion of a subgroup word back into the ambient alphabet of ctx.
[[nodiscard]] Word expand(const RSContext& ctx, const Word& subgroup_word);

struct TauResult {
  Word raw;         // classified letters, identities dropped
  Word normalized;  // free reduction of raw
};

[[nodiscard]] TauResult rewrite_tau_full(const RSContext& ctx, const Word& u);
[[nodiscard]] Word rewrite_tau(const RSContext& ctx, const Word& u);

struct DerivedRelator {
  std::string id;
  std::string from;
  Word conj;
  Word word;
};

/// tau(t r t^{-1}) for every ambient relator r and transversal word t, with
/// trivial results dropped and duplicates (up to rotation and inversion)
/// removed in (relator, transversal) order.
[[nodiscard]] std::vector<DerivedRelator> derive_relators(const RSContext& ctx);
/// `relator <id> from=<ambient-id> conj=<t> word=<w>`
[[nodiscard]] std::string format_provenance(const DerivedRelator& r);
[[nodiscard]] std::vector<Word> relator_words(const std::vector<DerivedRelator>& rels);

/// w = k * t with t = representative(w) and k = reduce(w t^{-1}).
[[nodiscard]] std::pair<Word, Word> split(const RSContext& ctx, const Word& w);

}  // namespace tvb
