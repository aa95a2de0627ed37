#include "commands.hpp"

#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

using namespace bicount::cli;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "bicount");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args) {
  const auto r = invoke(std::move(args));
  REQUIRE(r.status == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("count") {
  CHECK(invoke_json({"count", "2", "2"})["results"]["count"] == "7");
  CHECK(invoke_json({"count", "1", "1"})["results"]["count"] == "2");
  const auto j = invoke_json({"count", "3", "3", "--oracle", "census"});
  CHECK(j["results"]["count"] == "36");
  CHECK(j["results"]["agreement"] == true);
  CHECK(invoke_json({"count", "3", "4", "--oracle", "naive"})["results"]["agreement"] == true);
  CHECK(j["command"] == "count");
  CHECK(j["parameters"]["p"] == 3);
}

TEST_CASE("bound") {
  const auto j = invoke_json({"bound", "2", "2"});
  CHECK(j["results"]["theorem_bound"]["exact"] == "8");
  CHECK(j["results"]["theorem_bound"]["decimal"] == "8.000000");
  CHECK(j["results"]["theorem_bound"]["places"] == 6);
  CHECK(j["results"]["ao_lower"] == "5");
  CHECK(j["results"]["ao_upper"] == "10");
  CHECK(j["results"]["exact"] == "7");
  CHECK(invoke_json({"bound", "1", "1"})["results"]["theorem_bound"]["exact"] == "2");
  CHECK(invoke_json({"bound", "3", "3"})["results"]["sandwich_holds"] == true);
  // the printed AO upper bound is wrong here: exact 4 > 16/6
  const auto bad = invoke_json({"bound", "1", "3"});
  CHECK(bad["results"]["ao_upper_holds"] == false);
  CHECK(bad["results"]["ao_lower_holds"] == true);
  CHECK(bad["results"]["theorem_holds"] == true);
  CHECK(bad["results"]["sandwich_holds"] == false);
  const auto far = invoke_json({"--max-degree", "4", "bound", "6", "6"});
  CHECK(far["results"]["exact"].is_null());
}

TEST_CASE("table") {
  const auto csv = invoke({"table", "--format", "csv"});
  REQUIRE(csv.status == 0);
  std::istringstream lines(csv.out);
  std::string header, first, line, last;
  std::getline(lines, header);
  std::getline(lines, first);
  int rows = 1;
  while (std::getline(lines, line)) {
    last = line;
    ++rows;
  }
  CHECK(header == ",k=0,k=1,k=2,k=3,k=4");
  CHECK(first == "p=3,0.678530,0.448352,0.281421,0.164794,0.089167");
  CHECK(last == "p=48,1.999866,1.999905,1.999933,1.999952,1.999966");
  CHECK(rows == 16);
  CHECK(csv.out.find('\r') == std::string::npos);

  const auto j = invoke_json({"table", "--p-min", "30", "--p-max", "30", "--k-min", "2", "--k-max", "2"});
  REQUIRE(j["results"]["cells"].size() == 1);
  CHECK(j["results"]["cells"][0]["ratio"] == "1.986770");
  CHECK(j["results"]["cells"][0]["places"] == 6);

  const auto tsv = invoke({"--format", "tsv", "table", "--p-max", "6"});
  CHECK(tsv.out.rfind("\tk=0\tk=1", 0) == 0);
  CHECK(invoke({"table", "--p-min", "9", "--p-max", "3"}).status == 2);
}

TEST_CASE("orbits") {
  const auto j = invoke_json({"orbits", "2", "2"});
  CHECK(j["results"]["free_fraction"] == "1/2");
  CHECK(j["results"]["lower_bound"] == "1/4");
  CHECK(j["results"]["orbit_count"] == "7");
  CHECK(invoke_json({"orbits", "3", "1"})["results"]["free_fraction"] == "0");
  CHECK(invoke_json({"orbits", "1", "1"})["results"]["free_fraction"] == "1");
  const auto big = invoke_json({"orbits", "5", "5"});
  CHECK(big["results"]["census_skipped"] == true);
  CHECK(big["results"].contains("lower_bound"));
  CHECK_FALSE(big["results"].contains("free_fraction"));
}

TEST_CASE("char") {
  const auto j = invoke_json({"char", "2", "1/2", "--q", "2", "--zq", "2"});
  CHECK(j["results"]["twisted_product"]["exact"] == "2");
  CHECK(j["results"]["cycle_values"][1] == "1/2");
  CHECK(j["results"]["average"]["exact"] == "3/4");
  const auto s = invoke_json({"char", "1", "1/2", "--q", "1", "--zq", "sqrt2"});
  CHECK(s["results"]["twisted_product"]["exact"] == "1*sqrt2");
  CHECK(s["results"]["twisted_product"]["decimal"] == "1.414214");
  CHECK(invoke({"char", "2", "0"}).status == 2);
  CHECK(invoke({"char", "2", "1", "--q", "2"}).status != 0);
}

TEST_CASE("verify") {
  const auto ok = invoke({"verify", "--suite", "cycleform", "--format", "plain"});
  CHECK(ok.status == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("PASS cycleform:") != std::string::npos);

  const auto bad = invoke({"verify", "--suite", "characters", "--perturb-stirling", "4:2"});
  CHECK(bad.status == 1);
  CHECK(Json::parse(bad.out)["results"]["passed"] == false);
}

TEST_CASE("caps and usage errors") {
  const auto r = invoke({"--max-degree", "5", "count", "6", "2"});
  CHECK(r.status == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("cap") != std::string::npos);
  CHECK(invoke({"--max-pq", "31", "orbits", "2", "2"}).status == 2);
  CHECK(invoke({"count", "2"}).status == 2);
  CHECK(invoke({"frobnicate"}).status == 2);
  CHECK(invoke({"--format", "xml", "count", "1", "1"}).status == 2);
  CHECK(invoke({"--help"}).status == 0);
}

TEST_CASE("output is deterministic and JSON round-trips") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"count", "4", "5"}, {"bound", "3", "4"}, {"orbits", "2", "3"}, {"char", "3", "1+sqrt2"}}) {
    const auto a = invoke(args), b = invoke(args);
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out).dump(2) + "\n" == a.out);
  }
}

TEST_CASE("delimited record output") {
  const auto csv = invoke({"--format", "csv", "bound", "2", "2"});
  CHECK(csv.out.rfind("field,value\ncommand,bound\n", 0) == 0);
  CHECK(csv.out.find("theorem_bound.exact,8\n") != std::string::npos);
  const auto plain = invoke({"--format", "plain", "count", "2", "2"});
  CHECK(plain.out.find("count: 7\n") != std::string::npos);
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
}
