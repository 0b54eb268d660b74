#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hurwitz/cli.hpp"

using namespace hurwitz;
using namespace hurwitz::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<const char*> args) {
  args.insert(args.begin(), "hurwitz-slope");
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const char* name) { return std::string("/tmp/hurwitz_test_") + name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("ranges") {
  CHECK(parse_range("5").first == 5);
  CHECK(parse_range("5").last == 5);
  CHECK(parse_range("3..7").first == 3);
  CHECK(parse_range("3..7").last == 7);
  CHECK_THROWS_AS(parse_range("7..3"), UsageError);
  CHECK_THROWS_AS(parse_range("x"), UsageError);
  CHECK_THROWS_AS(parse_range("-1"), UsageError);
  CHECK_THROWS_AS(parse_range(""), UsageError);
}

TEST_CASE("argument parsing") {
  const char* argv[] = {"hurwitz-slope", "slope", "-d", "3..5", "-g", "2", "--k", "4", "--format", "csv"};
  const RunConfig c = parse_args(10, argv);
  CHECK(c.command == Command::kSlope);
  CHECK(c.d.first == 3);
  CHECK(c.d.last == 5);
  CHECK(c.k == 4);
  CHECK(c.format == OutputFormat::kCsv);
  const char* no_k[] = {"hurwitz-slope", "verify", "-d", "3", "-g", "2"};
  CHECK_FALSE(parse_args(6, no_k).k.has_value());
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"enumerate", "-d", "3", "-g", "2"}).code == kExitOk);
  CHECK(run_cli({"verify", "-d", "2..4", "-g", "2"}).code == kExitOk);
  CHECK(run_cli({"frobnicate", "-d", "3", "-g", "2"}).code == kExitUsage);
  CHECK(run_cli({"enumerate", "-g", "2"}).code == kExitUsage);
  CHECK(run_cli({"enumerate", "-d", "1", "-g", "2"}).code == kExitUsage);
  CHECK(run_cli({"enumerate", "-d", "3", "-g", "2", "--format", "xml"}).code == kExitUsage);
  CHECK(run_cli({"slope", "-d", "4", "-g", "2", "--closed-form"}).code == kExitUsage);
  CHECK(run_cli({"slope", "-d", "3", "-g", "3", "--closed-form"}).code == kExitUsage);
  CHECK(run_cli({"enumerate", "-d", "3", "-g", "2", "--closed-form"}).code == kExitUsage);
  CHECK(run_cli({"enumerate", "-d", "7", "-g", "3"}).code == kExitBudget);
  CHECK(run_cli({"enumerate", "-d", "4", "-g", "2", "--budget", "100"}).code == kExitBudget);
  const Result help = run_cli({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("enumerate") != std::string::npos);
  CHECK(run_cli({"--version"}).out.find(version()) != std::string::npos);
}

TEST_CASE("enumerate table") {
  const Result r = run_cli({"enumerate", "-d", "3", "-g", "2"});
  CHECK(r.out.find("   3   2         16          4          3          0          9   1:3") != std::string::npos);
}

TEST_CASE("structured output fields") {
  const Result r = run_cli({"slope", "-d", "3", "-g", "2", "--format", "structured"});
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  for (const char* key : {"d", "g", "k", "N", "N0", "N1_by_h", "N1", "N2", "N3", "slope", "delta0", "delta_profile",
                          "lambda", "genus_W", "components", "provenance", "version"}) {
    CHECK_MESSAGE(doc.contains(key), key);
  }
  CHECK(doc["slope"] == "7/1");
  CHECK(doc["N"] == 16);
  CHECK(doc["delta0"] == "8/1");
  CHECK(doc["lambda"] == "2/1");
  CHECK(doc["genus_W"] == "10");
  CHECK(doc["provenance"] == "bruteforce");
  CHECK(doc["N1_by_h"]["1"] == 3);
}

TEST_CASE("closed-form slope") {
  const Result r = run_cli({"slope", "-d", "5..7", "-g", "2", "--closed-form", "--format", "structured"});
  REQUIRE(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  auto doc = nlohmann::json::parse(line);
  CHECK(doc["slope"] == "31/5");
  CHECK(doc["N"].is_null());
  CHECK(doc["provenance"] == "closedform");
  std::getline(lines, line);
  doc = nlohmann::json::parse(line);
  CHECK(doc["slope"] == "41/7");
  CHECK(doc["genus_W"] == "271");
  CHECK_FALSE(std::getline(lines, line));

  const Result wide = run_cli({"slope", "-d", "3..99", "-g", "2", "--closed-form", "--format", "csv"});
  CHECK(wide.code == kExitOk);
  CHECK(std::count(wide.out.begin(), wide.out.end(), '\n') == 1 + 49);
  CHECK(run_cli({"enumerate", "-d", "17", "-g", "2"}).code == kExitUsage);
}

TEST_CASE("csv output") {
  const Result r = run_cli({"enumerate", "-d", "2..3", "-g", "2", "--format", "csv"});
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  std::getline(lines, line);
  CHECK(line.rfind("command,d,g,", 0) == 0);
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 2);
}

TEST_CASE("structured output is independent of workers") {
  const Result a = run_cli({"components", "-d", "4", "-g", "2", "--format", "structured", "--workers", "1"});
  const Result b = run_cli({"components", "-d", "4", "-g", "2", "--format", "structured", "--workers", "5"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
}

TEST_CASE("components output") {
  const auto doc = nlohmann::json::parse(run_cli({"components", "-d", "4", "-g", "2", "--format", "structured"}).out);
  CHECK(doc["components"].size() == 4);
  const auto odd = nlohmann::json::parse(run_cli({"components", "-d", "5", "-g", "2", "--format", "structured"}).out);
  CHECK(odd["components"].size() == 1);
  CHECK(odd["hurwitz_space_component_count"] == "1");
}

TEST_CASE("verify fails on corrupted counts") {
  ClassCounts c;
  c.d = 3;
  c.g = 2;
  c.N0 = 4;
  c.N1_by_h = {{1, 3}};
  c.N1 = 3;
  c.N3 = 10;
  c.N = 17;
  bool found = false;
  for (const auto& check : count_checks(c, 1)) {
    if (check.name == "5N3 = 27N1 - 9N0") {
      found = true;
      CHECK_FALSE(check.pass);
    }
  }
  CHECK(found);
  c.N3 = 9;
  c.N = 16;
  for (const auto& check : count_checks(c, 1)) CHECK_MESSAGE(check.pass, check.name);
}

TEST_CASE("verification checks pass on real data") {
  for (auto [d, g] : {std::pair{3, 2}, {4, 2}, {5, 2}, {3, 3}}) {
    for (const auto& check : verification_checks(enumerate_classes(d, g), 2 * g - 3, 1)) {
      CHECK_MESSAGE(check.pass, check.name, " d=", d, " g=", g);
    }
  }
}

TEST_CASE("dump round trip") {
  const std::string path = temp_path("dump.txt");
  REQUIRE(run_cli({"enumerate", "-d", "3..4", "-g", "2", "--dump", path.c_str()}).code == kExitOk);
  std::ifstream in(path);
  std::vector<DumpRecord> records;
  for (std::string line; std::getline(in, line);) records.push_back(parse_dump_line(line));
  CHECK(records.size() == 16 + 72);
  const ClassSet set = enumerate_classes(4, 2);
  for (std::size_t i = 0; i < set.classes.size(); ++i) {
    const DumpRecord& r = records[16 + i];
    CHECK(r.d == 4);
    CHECK(r.tuple == set.classes[i].rep);
    CHECK(r.classification == set.classes[i].classification);
    CHECK(dump_line(4, 2, set.classes[i]) == dump_line(r.d, r.g, {r.tuple, r.classification, 1}));
  }
  std::remove(path.c_str());
  CHECK_THROWS_AS(parse_dump_line("3 2 Cov1 | id | id"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dump_line("3 2 Cov9 | id | id | (1 2) (1 2)"), std::invalid_argument);
}

TEST_CASE("output file") {
  const std::string path = temp_path("out.txt");
  REQUIRE(run_cli({"enumerate", "-d", "3", "-g", "2", "-o", path.c_str()}).out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("96") != std::string::npos);
  std::remove(path.c_str());
}

}  // TEST_SUITE
