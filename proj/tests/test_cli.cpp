#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "satake/cli.hpp"

using namespace sph;
using nlohmann::json;

namespace {

struct Run {
  int rc;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int rc = run_cli(args, out, err);
  return {rc, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "satake_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

struct EnvGuard {
  explicit EnvGuard(const char* value) { setenv("SATAKE_PRECISION", value, 1); }
  ~EnvGuard() { unsetenv("SATAKE_PRECISION"); }
};

}  // namespace

TEST_CASE("kostka subcommand") {
  auto r = run({"kostka", "--lambda", "2,1,0", "--mu", "1,1,1", "--foulkes"});
  REQUIRE(r.rc == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["value"] == "q + q^2");
  CHECK(j["coeffs"] == json::array({0, 1, 1}));
  r = run({"kostka", "--lambda", "2,1,0", "--mu", "1,1,1"});
  CHECK(json::parse(r.out)["value"] == 2);
}

TEST_CASE("convolve subcommand, JSON and CSV") {
  auto r = run({"convolve", "--n", "2", "--f", "c:1,0", "--g", "c:1,0", "--csv"});
  REQUIRE(r.rc == kExitOk);
  CHECK(r.out == "key,value\n\"2,0\",1\n\"1,1\",1 + v^2\n");
  r = run({"convolve", "--n", "2", "--f", "c:1,0", "--g", "c:1,0"});
  REQUIRE(r.rc == kExitOk);
  CHECK(json::parse(r.out)["command"] == "convolve");
}

TEST_CASE("base-change and satake subcommands") {
  auto r = run({"base-change", "--n", "2", "--r", "2", "--f", "a:1,0"});
  REQUIRE(r.rc == kExitOk);
  CHECK(json::parse(r.out)["command"] == "base-change");
  r = run({"satake", "--n", "2", "--f", "c:1,0", "--csv"});
  REQUIRE(r.rc == kExitOk);
  CHECK(r.out.find("v") != std::string::npos);
}

TEST_CASE("bprime subcommand") {
  const auto r = run({"bprime", "--n", "2", "--q", "3", "--f", "c:1,0", "--s", "pi^2;0;0;1"});
  REQUIRE(r.rc == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["text"] == "1");
  CHECK(j["profile"].size() == 1);
}

TEST_CASE("verify fl reports pass and its CSV layout") {
  auto r = run({"verify", "fl", "--n", "2", "--q", "3", "--a", "1,0", "--f", "a:0,0"});
  REQUIRE(r.rc == kExitOk);
  const auto j = json::parse(r.out);
  REQUIRE(j["reports"].size() == 1);
  const auto& rep = j["reports"][0];
  CHECK(rep["lhs_at_q"] == "2");
  CHECK(rep["rhs_at_q"] == "-2");
  CHECK(rep["sign"] == -1);
  CHECK(rep["pass"] == true);
  CHECK_FALSE(rep.contains("wall_time"));
  CHECK(j["summary"]["status"] == "PASS");

  r = run({"verify", "fl", "--n", "2", "--q", "3", "--a", "1,0", "--f", "a:0,0", "--csv"});
  REQUIRE(r.rc == kExitOk);
  CHECK(r.out == "id,lhs,rhs,sign,pass,wall_time\n\"fl/n=2/q=3/a=1,0/f=a:0,0\",2,-2,-1,PASS,-\n");

  r = run({"verify", "fl", "--n", "2", "--q", "3", "--a", "1,0", "--f", "a:0,0", "--timing"});
  CHECK(json::parse(r.out)["reports"][0].contains("wall_time"));
}

TEST_CASE("verify output does not depend on the job count") {
  const std::vector<std::string> base{"verify", "fl", "--n", "2", "--q", "3", "--a", "0,0", "--a", "1,0", "--a", "2,2", "--csv"};
  auto one = base, four = base;
  one.insert(one.end(), {"--jobs", "1"});
  four.insert(four.end(), {"--jobs", "4"});
  const auto a = run(one), b = run(four);
  CHECK(a.rc == kExitOk);
  CHECK(a.out == b.out);
}

TEST_CASE("verify w0 and satake-oracle") {
  auto r = run({"verify", "w0", "--n", "2", "--q", "3", "--d", "0,1"});
  CHECK(r.rc == kExitOk);
  CHECK(json::parse(r.out)["summary"]["total"] == 8);
  r = run({"verify", "satake-oracle", "--n", "2", "--q", "2", "--max-weight", "2"});
  CHECK(r.rc == kExitOk);
}

TEST_CASE("precision comes from the flag, then the environment") {
  {
    EnvGuard env("9");
    auto r = run({"verify", "fl", "--n", "2", "--q", "3", "--a", "1,0", "--f", "a:0,0"});
    CHECK(json::parse(r.out)["reports"][0]["precision"] == 9);
    r = run({"verify", "fl", "--n", "2", "--q", "3", "--a", "1,0", "--f", "a:0,0", "--precision", "12"});
    CHECK(json::parse(r.out)["reports"][0]["precision"] == 12);
  }
  {
    EnvGuard env("nine");
    CHECK(run({"verify", "fl", "--n", "2", "--q", "3", "--a", "1,0"}).rc == kExitUsage);
  }
}

TEST_CASE("a window too small for the data is a precision error") {
  const auto r = run({"verify", "fl", "--n", "2", "--q", "3", "--a", "2,2", "--precision", "1"});
  CHECK(r.rc == kExitUsage);
}

TEST_CASE("sweep from a config file, written to --out") {
  const auto cfg = scratch("sweep.cfg");
  const auto dest = scratch("sweep.csv");
  {
    std::ofstream f(cfg);
    f << "# small sweep\n"
         "theorem = fl\n"
         "n = 2\n"
         "q = 3\n"
         "a_vals = 0,1 ; 0,2\n"
         "f = a:0,0 ; a:1,0\n"
         "jobs = 2\n";
  }
  std::filesystem::remove(dest);
  const auto r = run({"sweep", cfg.string(), "--csv", "--out", dest.string()});
  CHECK(r.rc == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(dest);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 1 + 4 * 2);

  {
    std::ofstream f(cfg);
    f << "theorem = fl\nn = 2\nn = 3\n";
  }
  CHECK(run({"sweep", cfg.string()}).rc == kExitUsage);
  {
    std::ofstream f(cfg);
    f << "theorem = fl\nbogus line\n";
  }
  CHECK(run({"sweep", cfg.string()}).rc == kExitUsage);
  CHECK(run({"sweep", scratch("missing.cfg").string()}).rc == kExitUsage);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({}).rc == kExitUsage);
  CHECK(run({"bogus"}).rc == kExitUsage);
  CHECK(run({"kostka", "--lambda", "1,2", "--mu", "2,1"}).rc == kExitUsage);
  CHECK(run({"verify", "fl", "--n", "2", "--q", "6", "--a", "1,0"}).rc == kExitUsage);
  CHECK(run({"verify", "fl", "--n", "2", "--q", "4", "--a", "1,0"}).rc == kExitUsage);
  CHECK(run({"verify", "fl", "--n", "2", "--q", "9", "--p", "5", "--a", "1,0"}).rc == kExitUsage);
  CHECK(run({"convolve", "--n", "2", "--f", "c:1,0"}).rc == kExitUsage);
  CHECK(run({"--help"}).rc == kExitOk);
}
