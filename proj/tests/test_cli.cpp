#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <vector>

#include "ordt/cli.hpp"
#include "ordt/serialize.hpp"

using namespace ordt;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ordt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("order") {
  auto r = run({"order", "7", "3"});
  CHECK(r.code == 0);
  CHECK(r.json() == Json{{"order", 3}});
  r = run({"order", "17", "3", "--cap", "2"});
  CHECK(r.code == 0);
  CHECK(r.json().at("order").is_null());
  CHECK(r.json().at("cap") == 2);
  r = run({"order", "14", "6", "--format", "text"});
  CHECK(r.out == "7/3: order 3\n");
}

TEST_CASE("domain errors exit 1") {
  auto r = run({"order", "3", "2"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("x >= 2") != std::string::npos);
  CHECK(run({"order", "7", "0"}).code == 1);
  CHECK(run({"order", "seven", "3"}).code == 1);
  CHECK(run({"classes", "9", "10"}).code == 1);  // over the default budget
  CHECK(run({"count", "2", "6", "--closed-form"}).code == 1);
}

TEST_CASE("usage errors exit 1 with usage text on stderr") {
  for (auto args : std::vector<std::vector<std::string>>{
           {}, {"frobnicate"}, {"order", "7"}, {"order", "7", "3", "--bogus"},
           {"classes", "2", "3", "--method", "magic"}, {"order", "7", "3", "--cap", "0"},
           {"order", "7", "3", "--format", "yaml"}}) {
    const auto r = run(args);
    CHECK(r.code == 1);
    CHECK(r.err.find("Usage") != std::string::npos);
  }
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("classes") {
  auto r = run({"classes", "1", "4", "--method", "both"});
  CHECK(r.code == 0);
  CHECK(r.json().at("residues") == Json::array({1, 3}));
  CHECK(r.json().at("agree") == true);
  r = run({"classes", "2", "3", "--format", "csv"});
  CHECK(r.out == "n,M,k\n2,3,8\n2,3,14\n2,3,16\n2,3,22\n");
  r = run({"classes", "2", "3", "--method", "brute"});
  CHECK(r.json().get<ClassSet>() == enumerate_recursive(2, 3));
  CHECK_FALSE(r.json().contains("agree"));
  // cap 3 cannot resolve every representative mod 125
  r = run({"classes", "2", "5", "--method", "both", "--cap", "3"});
  CHECK(r.code == 2);
}

TEST_CASE("count") {
  auto r = run({"count", "2", "6"});
  CHECK(r.json().at("A") == "18");
  r = run({"count", "2", "4", "--closed-form"});
  CHECK(r.json().at("A") == "8");
  CHECK(r.json().at("method") == "closed_form");
  r = run({"count", "3", "5", "--table", "--format", "csv"});
  CHECK(count_rows_from_csv(r.out) == count_rows(3, 5));
}

TEST_CASE("density") {
  auto r = run({"density", "4", "--terms", "12"});
  CHECK(r.code == 0);
  const auto report = r.json().get<DensityReport>();
  CHECK(report.partial_sum == partial_sum(4, 12));
  r = run({"density", "2", "--terms", "3", "--empirical", "100", "--cap", "5"});
  const auto emp = r.json().at("empirical").get<EmpiricalCounts>();
  CHECK(emp.counted_finite == 47);
  CHECK(r.json().at("terms")[1].at("observed_count") == 24);
}

TEST_CASE("family and mu") {
  auto r = run({"family", "3", "2"});
  CHECK(r.json().at("a") == "22");
  CHECK(r.json().at("result") == Json{{"order", 2}});
  r = run({"family", "7", "40"});
  CHECK(r.json().at("result") == Json{{"order", 40}});
  r = run({"mu", "3", "2"});
  CHECK(r.json().at("mu") == "8");
  r = run({"mu", "2", "3", "--limit", "10"});
  CHECK(r.json().at("found") == false);
}

TEST_CASE("orbit") {
  auto r = run({"orbit", "7", "3"});
  const auto t = r.json().get<OrbitTrace>();
  CHECK(t.steps.size() == 3);
  CHECK(t.result == OrderResult::finite(3));
  r = run({"orbit", "7", "3", "--format", "csv"});
  CHECK(r.out == "step,q,r,h,new_den,image_num,image_den\n1,2,1,1,3,8,3\n2,2,2,1,3,10,3\n3,3,1,3,1,4,1\n");
}

TEST_CASE("scan writes and resumes a checkpoint") {
  const auto path = std::filesystem::temp_directory_path() / "ordt_cli_scan.json";
  std::filesystem::remove(path);
  auto r = run({"scan", "--M-lo", "2", "--M-hi", "2", "--a-hi", "100", "--cap", "2",
                "--checkpoint", path.string()});
  CHECK(r.code == 0);
  CHECK(r.json().at("exceeders").size() == 12);
  CHECK(r.json().at("complete") == true);
  CHECK(std::filesystem::exists(path));
  r = run({"scan", "--M-lo", "2", "--M-hi", "2", "--a-hi", "100", "--cap", "3",
           "--checkpoint", path.string()});
  CHECK(r.code == 1);
  std::filesystem::remove(path);
}

TEST_CASE("environment overrides") {
  setenv("ORDT_CAP", "2", 1);
  auto r = run({"order", "7", "3"});
  CHECK(r.json().at("order").is_null());
  r = run({"order", "7", "3", "--cap", "10"});
  CHECK(r.json().at("order") == 3);
  unsetenv("ORDT_CAP");
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
