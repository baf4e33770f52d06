#pragma once

#include <compare>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tvb {

// All composition is left-to-right: compose(a, b) applies a first, then b,
// so the image of a word u.v is compose(image(u), image(v)).

/// A bijection of {1, ..., n}, stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);

  [[nodiscard]] int degree() const { return static_cast<int>(images_.size()); }
  [[nodiscard]] int operator()(int point) const { return images_[static_cast<std::size_t>(point - 1)]; }
  [[nodiscard]] const std::vector<int>& images() const { return images_; }
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] Permutation inverse() const;
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Element of the hyperoctahedral group Z_2^n x| S_n acting on {+-1, ..., +-n}:
/// the point x goes to (-1)^signs[x] * perm(x).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  SignedPermutation(Permutation perm, std::vector<std::uint8_t> signs);
  explicit SignedPermutation(Permutation perm);

  static SignedPermutation identity(int n);
  static SignedPermutation flip(int n, int point);
  static SignedPermutation transposition(int n, int a, int b);

  [[nodiscard]] int degree() const { return perm_.degree(); }
  [[nodiscard]] const Permutation& perm() const { return perm_; }
  [[nodiscard]] const std::vector<std::uint8_t>& signs() const { return signs_; }
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] bool unsigned_part_only() const;
  [[nodiscard]] SignedPermutation inverse() const;
  /// Image of the signed point x (|x| in [1, n]).
  [[nodiscard]] int signed_image(int x) const;
  /// "[2,1,3|0,1,0]"
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  Permutation perm_;
  std::vector<std::uint8_t> signs_;
};

/// x -> x * M + shift on integer row vectors, M a signed permutation matrix.
/// Used as an infinite faithful-enough target for checking subgroup
/// generator classifications.
class AffineSignedPermutation {
 public:
  AffineSignedPermutation() = default;
  AffineSignedPermutation(SignedPermutation linear, std::vector<long long> shift);

  static AffineSignedPermutation identity(int n);
  static AffineSignedPermutation translation(std::vector<long long> shift);

  [[nodiscard]] const SignedPermutation& linear() const { return linear_; }
  [[nodiscard]] const std::vector<long long>& shift() const { return shift_; }
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] AffineSignedPermutation inverse() const;
  [[nodiscard]] std::vector<long long> apply_linear(const std::vector<long long>& v) const;
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const AffineSignedPermutation&, const AffineSignedPermutation&) = default;

 private:
  SignedPermutation linear_;
  std::vector<long long> shift_;
};

[[nodiscard]] Permutation compose(const Permutation& a, const Permutation& b);
[[nodiscard]] SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);
[[nodiscard]] AffineSignedPermutation compose(const AffineSignedPermutation& a, const AffineSignedPermutation& b);

[[nodiscard]] Permutation parse_permutation(const std::string& text);
[[nodiscard]] SignedPermutation parse_signed_permutation(const std::string& text);

class ClosureBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Breadth-first closure of `gens` under composition; inverses come for free
/// in a finite group. Throws ClosureBoundExceeded past `bound` elements.
template <class Element>
std::set<Element> enumerate_closure(const std::vector<Element>& gens, const Element& identity, std::size_t bound) {
  std::set<Element> seen{identity};
  std::deque<Element> queue{identity};
  while (!queue.empty()) {
    Element cur = queue.front();
    queue.pop_front();
    for (const Element& g : gens) {
      Element next = compose(cur, g);
      if (seen.insert(next).second) {
        if (seen.size() > bound)
          throw ClosureBoundExceeded("closure exceeded bound " + std::to_string(bound));
        queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

}  // namespace tvb
