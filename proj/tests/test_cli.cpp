#include <json.hpp>

#include <filesystem>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "twoweight/cli.hpp"
#include "twoweight/io.hpp"
#include "twoweight/srg.hpp"

using namespace twoweight;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "twoweight");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const std::string fixtures = TWOWEIGHT_FIXTURES;

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("twoweight_test_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("verify the bundled example") {
  auto r = run({"verify", fixtures + "/gf4xgf2.code"});
  REQUIRE(r.code == kExitOk);
  auto j = json::parse(r.out);
  CHECK(j["enumerator"] == "0^1 8^9 12^6");
  CHECK(j["properties"]["proper"] == true);
  CHECK(j["properties"]["regular"] == true);
  CHECK(j["properties"]["projective"] == true);
  CHECK(j["srg"]["k"] == 9);
  CHECK(j["srg"]["rho1"] == -3);
  CHECK(j["eigen_relations"]["ok"] == true);

  auto units = json::parse(run({"verify", fixtures + "/gf4xgf2.code", "--gamma", "units"}).out);
  CHECK(units["gamma"] == "3");
  auto half = json::parse(run({"verify", fixtures + "/gf4xgf2.code", "--gamma", "3/2"}).out);
  CHECK(half["enumerator"] == "0^1 4^9 6^6");
}

TEST_CASE("invalid input exits with 2") {
  CHECK(run({}).code == kExitInvalid);
  CHECK(run({"verify", "/nonexistent.code"}).code == kExitInvalid);
  CHECK(run({"frobnicate"}).code == kExitInvalid);
  CHECK(run({"hjelmslev", "Z8", "1"}).code == kExitInvalid);
  CHECK(run({"hjelmslev", "Z4", "2"}).code == kExitInvalid);
  CHECK(run({"screen", fixtures + "/eliminated162.csv", "--format", "xml"}).code == kExitInvalid);
  CHECK(run({"screen", fixtures + "/eliminated162.csv", "--full-ring", "maybe"}).code == kExitInvalid);
  CHECK(run({"search", "not-a-row"}).code == kExitInvalid);
  CHECK(run({"search", "16,6,2,2", "--shape", "2,2"}).code == kExitInvalid);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("screen the eliminated rows") {
  auto r = run({"screen", fixtures + "/eliminated162.csv"});
  REQUIRE(r.code == kExitOk);
  auto j = json::parse(r.out);
  REQUIRE(j["rows"].size() == 3);
  for (const auto& row : j["rows"]) {
    CHECK(row["eliminated"] == true);
    CHECK(row["verdict"] == "fail-xT");
    CHECK(row["full_ring"] == true);
    CHECK(row["reason"].get<std::string>().find("n = 1") != std::string::npos);
  }

  auto csv = run({"screen", fixtures + "/eliminated162.csv", "--format", "csv"});
  CHECK(csv.out.rfind("id,N,k,lambda,mu,verdict,eliminated,reason\n", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 4);
}

TEST_CASE("screen reports are deterministic") {
  const std::vector<std::string> args{"screen", fixtures + "/table82.csv", "--no-search"};
  auto a = run(args);
  auto b = run(args);
  auto args4 = args;
  args4.insert(args4.end(), {"--workers", "4"});
  auto c = run(args4);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  auto j = json::parse(a.out);
  CHECK(j["rows"].size() == 82);
  CHECK(j["summary"]["candidates"] == 82);
}

TEST_CASE("undecided rows exit with 3") {
  auto r = run({"screen", "--node-cap", "1000", fixtures + "/eliminated162.csv", "--full-ring", "off"});
  CHECK(r.code == kExitUndecided);
  auto j = json::parse(r.out);
  for (const auto& row : j["rows"]) {
    CHECK(row["verdict"] == "undecided");
    CHECK(row["node_cap"] == 1000);
  }
}

TEST_CASE("search writes codes that re-verify") {
  auto dir = scratch("search");
  auto r = run({"search", "16,6,2,2", "--ring", "Z4", "--shape", "2,2", "--out", dir.string()});
  REQUIRE(r.code == kExitOk);
  auto j = json::parse(r.out);
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0]["status"] == "found");
  const auto& files = j["rows"][0]["results"][0]["files"];
  REQUIRE(files.size() >= 1);
  CHECK(fs::exists(dir / "report.json"));
  for (const auto& f : files) {
    auto v = json::parse(run({"verify", (dir / f.get<std::string>()).string()}).out);
    CHECK(v["srg"]["N"] == 16);
    CHECK(v["srg"]["k"] == 6);
    CHECK(v["srg"]["lambda"] == 2);
    CHECK(v["srg"]["mu"] == 2);
  }
  fs::remove_all(dir);

  auto g = json::parse(run({"search", "16,9,4,6", "--ring", "GF(4)xGF(2)", "--shape", "1;1,1"}).out);
  CHECK(g["rows"][0]["status"] == "found");

  auto none = run({"search", "16,9,4,6", "--ring", "Z4", "--shape", "2,2"});
  CHECK(none.code == kExitOk);
  CHECK(json::parse(none.out)["rows"][0]["status"] == "exhausted");
}

TEST_CASE("hjelmslev command") {
  auto dir = scratch("hjelmslev");
  auto r = run({"hjelmslev", "Z9", "2", "--out", dir.string()});
  REQUIRE(r.code == kExitOk);
  auto j = json::parse(r.out);
  CHECK(j["matches_prediction"] == true);
  CHECK(j["points"] == 12);
  CHECK(j["classes"].size() == 4);
  auto again = json::parse(run({"verify", (dir / j["file"].get<std::string>()).string()}).out);
  CHECK(again["srg"] == j["srg"]);
  fs::remove_all(dir);
}

TEST_CASE("gray-check command") {
  auto r = run({"gray-check", "Z4", "1"});
  REQUIRE(r.code == kExitOk);
  auto j = json::parse(r.out);
  CHECK(j["distinct"] == 4);
  CHECK(j["linear"] == 0);
  CHECK(j["nonlinear"] == 4);
  CHECK(j["gray_map"]["2"] == "11");

  auto dir = scratch("gray");
  CHECK(run({"gray-check", "Z4", "1", "--out", dir.string()}).code == kExitOk);
  CHECK(fs::exists(dir / "gray_Z4_s1_0.gray"));
  CHECK(fs::exists(dir / "gray_Z4_s1_0.code"));
  fs::remove_all(dir);

  auto mono = json::parse(run({"gray-check", "Z4", "1", "--dedupe", "monomial"}).out);
  CHECK(mono["distinct"] == 1);
}
