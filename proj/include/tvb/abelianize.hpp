#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tvb/presentations.hpp"

namespace tvb {

using Integer = boost::multiprecision::cpp_int;

/// Rows are relators, columns generators.
struct IntegerMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> data;

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> init);

  [[nodiscard]] Integer& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  [[nodiscard]] const Integer& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Signed exponent sums. A letter that is not itself a generator counts
/// towards its undecorated base, which is how the gamma-conjugates left by
/// Tietze elimination abelianize.
[[nodiscard]] IntegerMatrix relation_matrix(const Presentation& p);

struct SmithForm {
  std::vector<Integer> factors;  // d_1 | d_2 | ... , all positive
  std::size_t rank = 0;
};

/// Pivot: smallest nonzero absolute value, ties to the lowest row, then column.
[[nodiscard]] SmithForm smith_normal_form(IntegerMatrix m);

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // factors > 1, divisibility chain

  /// "Z^3 + Z_2^3"; the trivial group is "0".
  [[nodiscard]] std::string format() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

[[nodiscard]] AbelianInvariants invariants_of(const IntegerMatrix& m);
[[nodiscard]] AbelianInvariants abelian_invariants(const Presentation& p);
[[nodiscard]] bool same_invariants(const AbelianInvariants& a, const AbelianInvariants& b);

}  // namespace tvb
