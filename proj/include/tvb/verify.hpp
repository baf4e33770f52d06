#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tvb/abelianize.hpp"
#include "tvb/presentations.hpp"
#include "tvb/word.hpp"

namespace tvb {

inline constexpr std::uint64_t kDefaultSeed = 1729;

enum class Status { Pass, Fail, Skip };

struct CheckReport {
  std::string id;
  int n = 0;
  Status status = Status::Pass;
  std::string details;
  std::string counterexample;  // set on every FAIL
  double seconds = 0;
};

class UnknownCheck : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// well-defined extended-symmetric schreier rewriting presentation-roundtrip
/// pl-derivation abelianization endomorphism exactness semidirect conjugation
[[nodiscard]] const std::vector<std::string>& check_ids();

[[nodiscard]] CheckReport run_check(const std::string& id, int n, std::uint64_t seed = kDefaultSeed);
/// Every (id, n) pair, run concurrently; ordered by id (as listed in
/// check_ids) and then n.
[[nodiscard]] std::vector<CheckReport> run_suite(const std::vector<std::string>& ids, int n_lo, int n_hi,
                                                 std::uint64_t seed = kDefaultSeed);
[[nodiscard]] bool all_passed(const std::vector<CheckReport>& reports);

/// `<id> n=<n> <PASS|FAIL|SKIP> <details>`, no timings, so runs with one seed
/// are byte-identical.
[[nodiscard]] std::string format_report(const std::vector<CheckReport>& reports, std::uint64_t seed);
[[nodiscard]] std::string report_json(const std::vector<CheckReport>& reports, std::uint64_t seed);

/// Uniform letters of the ambient generators with random signs; involutions
/// keep sign +1.
[[nodiscard]] Word random_word(std::mt19937_64& rng, const Presentation& ambient, std::size_t max_length);

/// Nonzero Smith factors from the gcds of the k x k minors. Exponential, small
/// matrices only; an oracle for smith_normal_form.
[[nodiscard]] std::vector<Integer> determinantal_factors(const IntegerMatrix& m);

}  // namespace tvb
