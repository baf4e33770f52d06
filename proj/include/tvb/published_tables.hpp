#pragma once

#include <string>
#include <vector>

#include "tvb/presentations.hpp"

namespace tvb {

/// Relation tables transcribed by hand, kept as schema text over the index
/// letters i, j, k, l. A token `ik:k` is lambda_{ik}^{(k)}; `0` is no
/// decoration. Transcriptions are verbatim, errors included.
struct Schema {
  std::string label;
  std::string text;
};

[[nodiscard]] const std::vector<Schema>& pl_commutation_schemas();  // 16, {i,j} and {k,l} disjoint
[[nodiscard]] const std::vector<Schema>& pl_triple_schemas();       // 24, i < j < k

struct RejectedSchema {
  std::string label;
  std::string text;
  std::string reason;
};

struct TranscribedTable {
  std::vector<Relator> relators;
  std::vector<RejectedSchema> rejected;
};

/// All instances at rank n. Schemas with a decoration outside the atom's own
/// index pair are rejected instead of instantiated.
[[nodiscard]] TranscribedTable transcribed_pl_table(int n);

/// Instantiates one schema; throws std::invalid_argument on illegal tokens.
[[nodiscard]] Word instantiate_schema(const std::string& text, int n, const std::vector<int>& indices);

/// The six three-letter relators listed for PL_3 before A_3-conjugation.
[[nodiscard]] std::vector<Relator> displayed_pl3_relators();

/// TVP_3 after removing lambda_{ji} (j > i): six three-letter relators, six
/// gamma-commutations and rel(A_3).
[[nodiscard]] Presentation displayed_tvp3_presentation();

}  // namespace tvb
