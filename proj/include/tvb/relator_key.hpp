#pragma once

#include <compare>
#include <vector>

#include "tvb/word.hpp"

namespace tvb {

/// Canonical form of a relator up to cyclic rotation and inversion.
///
/// Involution letters lose their sign, maximal runs of gamma letters inside a
/// relator that also contains other letters are replaced by their sorted
/// Z_2^n value (the gammas commute and square to 1 in every group compared
/// here), and rho_i^2 / gamma_j^2 are kept as `Square` keys so that they are
/// not mistaken for trivial relators.
struct RelatorKey {
  enum class Tag { Trivial, Square, Cyclic };
  Tag tag = Tag::Trivial;
  std::vector<Atom> atoms;

  [[nodiscard]] bool trivial() const { return tag == Tag::Trivial; }
  friend auto operator<=>(const RelatorKey&, const RelatorKey&) = default;
};

[[nodiscard]] RelatorKey relator_key(const Word& w);
[[nodiscard]] std::string format_key(const RelatorKey& k);

}  // namespace tvb
