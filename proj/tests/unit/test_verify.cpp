#include "bicount/verify.hpp"

#include "doctest.h"

#include <algorithm>

using namespace bicount;

namespace {

bool all_pass(const std::vector<PropertyResult>& results) {
  return !results.empty() &&
         std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
}

}  // namespace

TEST_CASE("suite names") {
  for (auto s : {Suite::all, Suite::characters, Suite::cycleform, Suite::bounds, Suite::asymptotics}) {
    CHECK(parse_suite(suite_name(s)) == s);
  }
  CHECK_FALSE(parse_suite("nope").has_value());
}

TEST_CASE("suites pass") {
  for (auto s : {Suite::characters, Suite::cycleform, Suite::bounds, Suite::asymptotics}) {
    CAPTURE(suite_name(s));
    const auto results = run_suite(s);
    for (const auto& r : results) {
      CAPTURE(r.name);
      CAPTURE(r.detail);
      CHECK(r.passed);
      CHECK(r.suite == suite_name(s));
    }
    CHECK(all_pass(results));
  }
}

TEST_CASE("seed changes nothing about the verdict") {
  VerifyOptions opt;
  opt.seed = 12345;
  CHECK(all_pass(run_suite(Suite::cycleform, opt)));
}

TEST_CASE("perturbed stirling table is caught") {
  const auto bad = stirling_table().with_override(4, 2, 12);
  VerifyOptions opt;
  opt.stirling = bad.get();
  const auto results = run_suite(Suite::characters, opt);
  CHECK_FALSE(all_pass(results));
  const auto failing = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
  CHECK(failing >= 2);
  // the shared table is untouched afterwards
  CHECK(all_pass(run_suite(Suite::characters)));
}
