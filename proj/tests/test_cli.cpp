#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "render.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "ttk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = ttk::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("classify prints the contract fields") {
  const Result r = run({"classify", "--p", "3", "--k", "1", "--sign", "plus", "--s", "2", "--r", "2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["lspace"] == "yes");
  CHECK(j["reason"] == "staircase");
  CHECK(j["generators"] == 9);
  CHECK(j["q"] == 4);
  CHECK(j["genus"] == 5);
  CHECK(j["total_hat_rank"] == 9);
  CHECK(j["predicate"] == true);
  CHECK(j["agree"] == true);
  CHECK(j["delta"]["5"] == 1);
  CHECK(j["delta"]["-4"] == -1);
  for (const char* key : {"p", "k", "sign", "s", "r", "q", "generators", "total_hat_rank", "genus", "delta", "lspace",
                          "reason", "predicate", "agree"})
    CHECK(j.contains(key));
}

TEST_CASE("oracle prints the trefoil polynomial") {
  const Result r = run({"oracle", "--p", "2", "--k", "1", "--sign", "plus", "--s", "1", "--r", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "t^1 - 1 + t^-1\n");
}

TEST_CASE("hfk text and JSON") {
  const Result text = run({"hfk", "--p", "2", "--k", "1", "--s", "1", "--r", "0"});
  CHECK(text.code == 0);
  CHECK(text.out.find("delta t^1 - 1 + t^-1") != std::string::npos);
  const Result js = run({"hfk", "--p", "2", "--k", "1", "--s", "1", "--r", "0", "--json"});
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["complex"]["generators"].size() == 3);
  CHECK(j["ranks"].size() == 3);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"classify", "--k", "1"}).code == 2);
  CHECK(run({"classify", "--p", "3", "--s", "3"}).code == 2);
  CHECK(run({"classify", "--p", "3", "--sign", "sideways"}).code == 2);
  CHECK(run({"render", "picture", "--p", "3"}).code == 2);
  CHECK(run({"classify", "--p", "4", "--k", "2", "--sign", "plus", "--s", "2", "--r", "1", "--seed-denominator", "0"})
            .code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"classify", "--p", "4", "--k", "1", "--sign", "minus", "--s", "2", "--r", "2"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> svg{"render", "diagram", "--p", "3", "--k", "1", "--s", "2", "--r", "2"};
  CHECK(run(svg).out == run(svg).out);
}

TEST_CASE("corridor width flag leaves the combinatorics alone") {
  const auto a = nlohmann::json::parse(run({"classify", "--p", "4", "--s", "2", "--r", "1"}).out);
  const auto b = nlohmann::json::parse(run({"classify", "--p", "4", "--s", "2", "--r", "1", "--seed-denominator", "4"}).out);
  CHECK(a == b);
}

TEST_CASE("sweep grid cardinality and skipped rows") {
  const auto grid = ttk::cli::sweep_grid(6, 2, 3);
  CHECK(grid.size() == 180);
  long in_scope = 0;
  for (const auto& c : grid) in_scope += c.skip_reason.empty();
  CHECK(in_scope == 129);
}

TEST_CASE("small sweep writes CSV and JSON in grid order") {
  const auto dir = std::filesystem::temp_directory_path() / "ttk_cli_test";
  std::filesystem::create_directories(dir);
  const std::string base = (dir / "sweep").string();
  const Result r = run({"sweep", "--p-max", "3", "--k-max", "1", "--r-max", "2", "--out", base, "--jobs", "2", "--csv"});
  CHECK(r.code == 0);
  std::ifstream csv(base + ".csv");
  std::string line;
  std::getline(csv, line);
  CHECK(line == ttk::cli::kSweepCsvHeader);
  int rows = 0, skipped = 0;
  while (std::getline(csv, line)) {
    CHECK(line.rfind(std::to_string(rows) + ",", 0) == 0);
    skipped += line.find(",skipped,") != std::string::npos;
    ++rows;
  }
  CHECK(rows == static_cast<int>(ttk::cli::sweep_grid(3, 1, 2).size()));
  CHECK(skipped == 6);  // q = 1 at p = 2 (two r values), s = 1 at p = 3 (both signs, two r values)
  std::ifstream js(base + ".json");
  const auto j = nlohmann::json::parse(js);
  CHECK(j.size() == static_cast<std::size_t>(rows));
  CHECK(r.out.rfind(ttk::cli::kSweepCsvHeader, 0) == 0);
  const Result again = run({"sweep", "--p-max", "3", "--k-max", "1", "--r-max", "2", "--jobs", "1"});
  CHECK(again.out == r.out);
  std::filesystem::remove_all(dir);
}

TEST_CASE("sweep reports disagreement with exit 1") {
  // The q = p - 1 cell K(4,3;2,2) computes as a staircase while the predicate says no.
  const Result r = run({"sweep", "--p-max", "4", "--k-max", "1", "--r-max", "2"});
  CHECK(r.err.find("K(4,3;2,2)") != std::string::npos);
}

TEST_CASE("the documented sweep example exits 0") {
  CHECK(run({"sweep", "--p-max", "4", "--k-max", "1", "--r-max", "2"}).code == 0);
}

TEST_CASE("render staircase for K(3,4;2,2)") {
  const Result r = run({"render", "staircase", "--p", "3", "--k", "1", "--s", "2", "--r", "2"});
  REQUIRE(r.code == 0);
  CHECK(count(r.out, "class=\"generator\"") == 9);
  CHECK(count(r.out, "class=\"arrow") == 8);
  CHECK(count(r.out, "arrow horizontal") == 4);
  CHECK(count(r.out, "arrow vertical") == 4);
  CHECK(count(r.out, "diagonal") == 0);
}

TEST_CASE("render diagrams") {
  const Result unknot = run({"render", "diagram", "--p", "2", "--k", "1", "--sign", "minus", "--s", "1", "--r", "1"});
  REQUIRE(unknot.code == 0);
  CHECK(count(unknot.out, "class=\"crossing\"") == 1);
  CHECK(count(unknot.out, "class=\"z\"") == 1);
  CHECK(count(unknot.out, "class=\"w\"") == 1);
  CHECK(count(unknot.out, "class=\"beta\"") == 2);
  const Result k45 = run({"render", "diagram", "--p", "4", "--k", "1", "--s", "2", "--r", "1"});
  CHECK(count(k45.out, "class=\"crossing\"") == 11);
  CHECK(k45.out.rfind("<svg", 0) == 0);
}

TEST_CASE("render writes to --svg") {
  const auto path = (std::filesystem::temp_directory_path() / "ttk_render_test.svg").string();
  const Result r = run({"render", "staircase", "--p", "2", "--k", "1", "--s", "1", "--r", "0", "--svg", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(count(buf.str(), "class=\"generator\"") == 3);
  std::filesystem::remove(path);
}
