#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fig8/cli.hpp"

using namespace fig8;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Cli, CensusExample) {
  const auto r = run({"census", "--cutoff", "4.5", "--mode", "paired"});
  EXPECT_EQ(r.code, 0);
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "# seed=0");
  std::getline(is, line);
  EXPECT_EQ(line, "trace,length,family,slope");
  int rows = 0;
  while (std::getline(is, line)) {
    EXPECT_EQ(line.substr(0, 2), "9,");
    ++rows;
  }
  EXPECT_EQ(rows, 6);
}

TEST(Cli, ExtendParity) {
  const auto r = run({"extend", "--genus", "1", "--classes", "2"});
  EXPECT_EQ(r.code, 1);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["extends"], false);
  EXPECT_EQ(j["reason"], "parity");
  EXPECT_EQ(j["schema"], 1);
}

TEST(Cli, McShane) {
  const auto r = run({"mcshane", "--cutoff", "1e6", "--form", "trace"});
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["partial_sum"].get<double>(), 1.0, 5e-3);
  EXPECT_GT(j["terms"].get<int>(), 0);
}

TEST(Cli, ExitCodeMatrix) {
  const std::vector<std::pair<std::vector<std::string>, int>> cases{
      {{}, 2},
      {{"no-such-command"}, 2},
      {{"census", "--cutoff", "4.5", "--mode", "sideways"}, 2},
      {{"census"}, 2},
      {{"mcshane", "--cutoff", "100"}, 0},
      {{"mc2", "--cutoff", "100"}, 0},
      {{"mc2", "--cutoff", "5"}, 2},
      {{"selfint", "--word", "ab"}, 0},
      {{"selfint", "--word", "abAB"}, 2},
      {{"selfint", "--word", "abz"}, 2},
      {{"extend", "--genus", "0", "--classes", "2", "--classes", "2"}, 0},
      {{"extend", "--genus", "0", "--classes", "2,1", "--classes", "3"}, 1},
      {{"extend", "--genus", "0", "--classes", "2", "--classes", "3"}, 2},
      {{"extend", "--genus", "0", "--classes", "0,2"}, 2},
      {{"regular-extend", "--genus", "1", "--classes", "1,1"}, 0},
      {{"regular-extend", "--genus", "1", "--classes", "2"}, 1},
      {{"regular-extend", "--genus", "0", "--classes", "9"}, 3},
      {{"frobenius", "--classes", "2,1", "--classes", "2,1"}, 0},
      {{"twocycles", "--perm", "(1 2)(3 4)"}, 0},
      {{"twocycles", "--perm", "(1 2)"}, 2},
      {{"twocycles", "--perm", "(1 2"}, 2},
      {{"stripcover", "--sigma", "(1 2 3)", "--tau", "(1 2)"}, 0},
      {{"stripcover", "--sigma", "(1 2)", "--tau", "(1 2)", "--degree", "3"}, 2},
      {{"stallings", "--word", "abAB"}, 0},
      {{"stallings", "--word", ""}, 2},
      {{"prime", "--word", "abAB"}, 0},
      {{"prime", "--word", ""}, 2},
      {{"prime-scatter", "--samples", "5"}, 2},
      {{"prime-scatter", "--samples", "0", "--seed", "3"}, 2},
      {{"prime-scatter", "--samples", "5", "--seed", "3"}, 0},
      {{"depth", "--word", "abAB"}, 0},
      {{"depth-table", "--max-j", "3"}, 0},
      {{"witness", "--word", "abAB", "--k", "2"}, 0},
      {{"witness", "--word", "abAB", "--k", "3"}, 2},
      {{"expectedprime", "--terms", "9"}, 0},
      {{"avgindex", "--samples", "100"}, 2},
      {{"avgindex", "--samples", "100", "--seed", "1"}, 0},
      {{"lpsgirth", "--p", "5", "--q", "13"}, 0},
      {{"lpsgirth", "--p", "5", "--q", "11"}, 2},
      {{"surface-certify", "--word", "ac"}, 0},
      {{"surface-certify", "--word", "abABdcDC"}, 1},
      {{"surface-certify", "--word", "ae"}, 2},
      {{"counts", "--lengths", "4,6"}, 0},
      {{"counts", "--lengths", ""}, 2},
      {{"census", "--cutoff", "4.5", "--format", "xml"}, 2},
  };
  for (const auto& [args, code] : cases) {
    std::string cmd;
    for (const auto& a : args) cmd += a + " ";
    EXPECT_EQ(run(args).code, code) << cmd;
  }
}

TEST(Cli, JsonCarriesSchemaAndSeed) {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"prime", "--word", "ab"}, {"avgindex", "--samples", "50", "--seed", "9"},
        {"frobenius", "--classes", "3", "--classes", "3", "--classes", "3"}, {"surface-certify", "--word", "c"}}) {
    const json j = json::parse(run(args).out);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_TRUE(j.contains("seed"));
  }
  EXPECT_EQ(json::parse(run({"avgindex", "--samples", "50", "--seed", "9"}).out)["seed"], 9);
}

TEST(Cli, ByteDeterminism) {
  const std::vector<std::vector<std::string>> cmds{
      {"avgindex", "--samples", "2000", "--seed", "77"},
      {"prime-scatter", "--samples", "200", "--seed", "77", "--format", "csv"},
      {"census", "--cutoff", "12", "--mode", "full"},
      {"counts", "--lengths", "6,8,10,12"},
  };
  for (const auto& c : cmds) {
    const CliRun a = run(c);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(fnv1a(a.out), fnv1a(run(c).out));
    for (const char* t : {"1", "2", "3"}) {
      auto ct = c;
      ct.insert(ct.end(), {"--threads", t});
      EXPECT_EQ(run(ct).out, a.out) << c[0] << " threads " << t;
    }
  }
}

TEST(Cli, OutputFile) {
  const auto dir = std::filesystem::temp_directory_path() / "fig8_cli_test";
  std::filesystem::create_directories(dir);
  const auto p1 = dir / "a.csv", p2 = dir / "b.csv";
  const std::vector<std::string> base{"prime-scatter", "--samples", "100", "--seed", "5", "--format", "csv"};
  auto a = base, b = base;
  a.insert(a.end(), {"--output", p1.string()});
  b.insert(b.end(), {"--output", p2.string(), "--threads", "2"});
  const CliRun ra = run(a);
  EXPECT_EQ(ra.code, 0);
  EXPECT_TRUE(ra.out.empty());
  EXPECT_EQ(run(b).code, 0);
  const std::string s1 = slurp(p1);
  EXPECT_EQ(s1.substr(0, 7), "# seed=");
  EXPECT_EQ(fnv1a(s1), fnv1a(slurp(p2)));
  EXPECT_EQ(s1, run(base).out);
  std::filesystem::remove_all(dir);
}
