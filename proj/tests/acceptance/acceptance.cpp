// One line per acceptance criterion; exit status 1 if any is red.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "tvb/conj.hpp"
#include "tvb/verify.hpp"

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::pair<std::string, std::pair<int, int>>> runs;  // check id, n range
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "homomorphisms well defined, n=2..5", {{"well-defined", {2, 5}}}},
      {2, "extended symmetric group and A_n, n=2..5", {{"extended-symmetric", {2, 5}}}},
      {3, "Schreier transversals and generators, n<=6", {{"schreier", {2, 6}}}},
      {4, "rewriting and derived TVP_n / TVH_n presentations, n=2..4", {{"rewriting", {2, 4}}}},
      {5, "PL_3 derivation against the transcribed table", {{"pl-derivation", {3, 3}}}},
      {6, "abelian invariants and Smith form oracle, n=2..5", {{"abelianization", {2, 5}}}},
      {7, "PL_n -> VP_n endomorphism, n=3,4", {{"endomorphism", {3, 4}}}},
      {8, "semidirect splittings, n<=4", {{"semidirect", {2, 4}}}},
      {9, "gamma conjugation and generator identification", {{"conjugation", {2, 4}}}},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string why;
    for (const auto& [id, range] : c.runs) {
      for (const auto& r : tvb::run_suite({id}, range.first, range.second)) {
        if (r.status == tvb::Status::Pass) continue;
        ok = false;
        if (why.empty()) why = r.id + " n=" + std::to_string(r.n) + ": " + r.details + " " + r.counterexample;
      }
    }
    if (c.number == 9) {
      for (int n = 2; n <= 5; ++n)
        for (const auto& l : tvb::check_generator_identification(n))
          if (!l.pass) {
            ok = false;
            if (why.empty()) why = "n=" + std::to_string(n) + ": " + l.lhs + " != " + l.rhs;
          }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d %s %s (%.2fs)%s%s\n", c.number, ok ? "PASS" : "FAIL", c.title.c_str(), secs,
                why.empty() ? "" : " | ", why.c_str());
    all = all && ok;
  }
  return all ? 0 : 1;
}
