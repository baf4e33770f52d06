#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "tvb/verify.hpp"

using namespace tvb;

TEST_CASE("suite at n = 2..3") {
  auto reports = run_suite(check_ids(), 2, 3);
  CHECK(reports.size() == 2 * check_ids().size());
  for (const auto& r : reports) {
    INFO(r.id << " n=" << r.n << ": " << r.details << " " << r.counterexample);
    CHECK(r.status == Status::Pass);
  }
  CHECK(all_passed(reports));
  CHECK(reports[0].id == "well-defined");
  CHECK(reports[1].n == 3);
}

TEST_CASE("report formats") {
  auto reports = run_suite({"abelianization"}, 1, 2);
  std::string text = format_report(reports, 5);
  CHECK(text.rfind("verify seed=5\nabelianization n=1 SKIP ", 0) == 0);
  CHECK(text.find("\nabelianization n=2 PASS TVP_n Z^1 + Z_2^2") != std::string::npos);
  CHECK(format_report(run_suite({"abelianization"}, 1, 2), 5) == text);

  auto j = nlohmann::json::parse(report_json(reports, 5));
  CHECK(j["seed"] == 5);
  CHECK(j["checks"].size() == 2);
}

TEST_CASE("unknown check") {
  CHECK_THROWS_AS((void)run_check("nope", 3), UnknownCheck);
}
