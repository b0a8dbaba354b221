#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "chirality_lab/catalog.hpp"
#include "chirality_lab/error.hpp"
#include "chirality_lab/report_io.hpp"

using namespace chirality_lab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "chirality_lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "chirality_lab_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("analyze a family as JSON") {
  const auto r = run({"analyze", "--family", "alt", "--params", "n=7", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["kappa"] == 2520);
  CHECK(j["darts"] == 2520);
  CHECK(j["totally_chiral"] == true);
  CHECK(j["perfect"] == true);
  for (const char* key : {"darts", "monodromy_order", "type", "euler_char", "kappa", "x_structure", "reflexible",
                          "totally_chiral", "perfect", "budget_exceeded"})
    CHECK(j.contains(key));
  CHECK(j["type"] == nlohmann::json::array({7, 7, 3}));
  CHECK(j["euler_char"]["den"] == 1);
}

TEST_CASE("analyze the trivial .hm file") {
  const auto path = scratch("trivial.hm");
  write_file(path, "darts 1\nR ()\nL ()\n");
  const auto r = run({"analyze", "--input", path.string(), "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["kappa"] == 1);
  CHECK(j["type"] == nlohmann::json::array({1, 1, 1}));
  CHECK(j["euler_char"]["num"] == 2);
  CHECK(j["euler_char"]["den"] == 1);
}

TEST_CASE("CSV report of AGL1(8)") {
  const auto r = run({"analyze", "--family", "agl1", "--params", "q=8", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == kReportCsvHeader);
  CHECK(row == "agl1:q=8,56,56,7,7,2,-12,1,8,8,2.2.2,false,false,false,false");
}

TEST_CASE("orthogonal cyclic pair") {
  const auto r = run({"orthogonal", "--a", "cyclic:p=5,i=1,j=0", "--b", "cyclic:p=5,i=0,j=1"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  CHECK(run({"orthogonal", "--a", "cyclic:p=5,i=1,j=0", "--b", "cyclic:p=5,i=1,j=0"}).out == "false\n");
}

TEST_CASE("hm round trip") {
  const auto a7 = alternating_map(7);
  const auto path = scratch("a7.hm");
  write_hm(a7, path.string());
  const auto back = read_hm(path.string());
  CHECK(back == a7);
  std::ifstream in(path, std::ios::binary);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(format_hm(back) == text.str());
  CHECK(text.str().rfind("darts 2520\nR (", 0) == 0);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_hm("darts 2\nR (1 2\nL ()\n"), doctest::Contains("line 2"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_hm("darts 2\nR (1 2)\nL (1 3)\n"), doctest::Contains("line 3"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_hm("darts  2\nR ()\nL ()\n"), doctest::Contains("line 1"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_hm("darts 2\r\nR ()\nL ()\n"), doctest::Contains("line 1"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_hm("darts 2\nR ()\n"), doctest::Contains("line 3"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_hm("darts 2\nL ()\nR ()\n"), doctest::Contains("line 2"), ValidationError);
  CHECK_THROWS_AS(parse_hm("darts 4\nR (1 2)\nL (3 4)\n"), ValidationError);  // intransitive

  const auto path = scratch("bad.hm");
  write_file(path, "darts 2\nR (1 2\nL ()\n");
  const auto r = run({"analyze", "--input", path.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"analyze"}).code == 2);
  CHECK(run({"analyze", "--family", "agl1", "--params", "q=6"}).code == 2);
  CHECK(run({"analyze", "--family", "agl1", "--params", "q=8", "--format", "yaml"}).code == 2);
  CHECK(run({"analyze", "--family", "agl1", "--params", "q=8", "--budget-pairs", "0"}).code == 2);
  CHECK(run({"analyze", "--input", "/nonexistent/x.hm"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const auto over = run({"analyze", "--family", "alt", "--params", "n=7", "--budget-pairs", "100000", "--format", "json"});
  CHECK(over.code == 3);
  CHECK(nlohmann::json::parse(over.out)["budget_exceeded"] == true);
  CHECK(nlohmann::json::parse(over.out)["kappa"].is_null());
  CHECK(run({"analyze", "--family", "alt", "--params", "n=8", "--budget-group", "1000"}).code == 3);
  CHECK(run({"scan", "--group", "psl2:q=11", "--budget", "100"}).code == 3);
}

TEST_CASE("pair budget from the environment") {
  ::setenv("CHIRALITY_LAB_BUDGET_PAIRS", "1000", 1);
  CHECK(budgets_from_environment().pairs == 1000);
  CHECK(run({"analyze", "--family", "agl1", "--params", "q=13"}).code == 3);
  CHECK(run({"analyze", "--family", "agl1", "--params", "q=13", "--budget-pairs", "100000"}).code == 0);
  ::setenv("CHIRALITY_LAB_BUDGET_PAIRS", "lots", 1);
  CHECK(run({"analyze", "--family", "agl1", "--params", "q=13"}).code == 2);
  ::unsetenv("CHIRALITY_LAB_BUDGET_PAIRS");
  CHECK(budgets_from_environment().pairs == Budgets{}.pairs);
}

TEST_CASE("hypermap-valued subcommands") {
  const auto mirror = run({"mirror", "--family", "metacyclic", "--params", "n=7,m=3,r=2"});
  REQUIRE(mirror.code == 0);
  const auto h = metacyclic(7, 3, 2, 0);
  CHECK(parse_hm(mirror.out) == h.mirror());

  const auto cover = run({"cover", "--family", "agl1", "--params", "q=5"});
  REQUIRE(cover.code == 0);
  CHECK(parse_hm(cover.out).darts() == 100);

  const auto quotient = run({"quotient", "--family", "agl1", "--params", "q=5", "--format", "json"});
  REQUIRE(quotient.code == 0);
  CHECK(nlohmann::json::parse(quotient.out)["darts"] == 4);

  const auto path = scratch("agl5.hm");
  write_hm(agl1(5), path.string());
  const auto joined = run({"join", "--a", path.string(), "--b", "cyclic:p=5,i=1,j=0", "--format", "json"});
  REQUIRE(joined.code == 0);
  const auto met = run({"meet", "--a", path.string(), "--b", "cyclic:p=5,i=1,j=0", "--format", "json"});
  REQUIRE(met.code == 0);
  CHECK(nlohmann::json::parse(joined.out)["darts"].get<int>() * nlohmann::json::parse(met.out)["darts"].get<int>() ==
        100);

  const auto factor = run({"factor-check", "--a", "alt:n=7", "--b", "alt:n=7", "--format", "json"});
  REQUIRE(factor.code == 0);
  CHECK(nlohmann::json::parse(factor.out)["isomorphic"] == true);
}

TEST_CASE("scan and census output") {
  const auto scan = run({"scan", "--group", "symmetric:n=4", "--format", "json"});
  REQUIRE(scan.code == 0);
  const auto j = nlohmann::json::parse(scan.out);
  CHECK(j["pairs_asymmetric"] == 0);
  CHECK(j["strongly_symmetric"] == true);

  const auto witness = run({"scan", "--group", "alt:n=7", "--mode", "witness", "--format", "json"});
  REQUIRE(witness.code == 0);
  CHECK(nlohmann::json::parse(witness.out)["witness"]["x_word"] == "R");

  const auto sampled = run({"scan", "--group", "psl2:q=13", "--mode", "sampled", "--samples", "500", "--seed", "9"});
  CHECK(sampled.code == 0);
  CHECK(sampled.out == run({"scan", "--group", "psl2:q=13", "--mode", "sampled", "--samples", "500", "--seed", "9"}).out);

  const auto census = run({"census", "--spec", "agl1:q=8", "--spec", "agl1:q=6", "--format", "csv"});
  CHECK(census.code == 0);
  CHECK(census.out.find("agl1:q=8,56,") != std::string::npos);
  CHECK(census.out.find("agl1:q=6,") != std::string::npos);
}

TEST_CASE("byte-identical output across runs") {
  const std::vector<std::string> args{"analyze", "--family", "agammal1", "--params", "q=8", "--format", "json"};
  CHECK(run(args).out == run(args).out);
  const auto path = scratch("out.json");
  CHECK(run({"analyze", "--family", "agl1", "--params", "q=8", "--format", "json", "--out", path.string()}).code == 0);
  std::ifstream in(path, std::ios::binary);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == run({"analyze", "--family", "agl1", "--params", "q=8", "--format", "json"}).out);
}
