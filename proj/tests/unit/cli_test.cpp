#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "unitcircle_cli/cli.hpp"

namespace cli = unitcircle::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, Extremal) {
  auto r = run({"extremal", "--N", "3", "--s", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "gamma = [1, 5/3]")) << r.out;
  r = run({"extremal", "--N", "11", "--s", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "gamma = [1, 28/11, 91/55]")) << r.out;
  r = run({"extremal", "--N", "11", "--s", "2", "--format", "json"});
  EXPECT_TRUE(contains(r.out, "\"91/55\"")) << r.out;
  EXPECT_EQ(run({"extremal", "--N", "2", "--s", "3"}).code, 2);
  EXPECT_EQ(run({"extremal", "--N", "x"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OnCircle) {
  EXPECT_EQ(run({"oncircle", "--N", "3", "--s", "1", "--gamma", "5/3"}).code, 0);
  EXPECT_EQ(run({"oncircle", "--N", "3", "--s", "1", "--gamma", "2/1"}).code, 1);
  EXPECT_EQ(run({"oncircle", "--N", "3", "--s", "1", "--gamma", "1.7"}).code, 1);
  EXPECT_EQ(run({"oncircle", "--N", "11", "--s", "2", "--gamma", "28/11,91/55"}).code, 0);
  EXPECT_EQ(run({"oncircle", "--coeffs", "1,0,-1"}).code, 0);
  EXPECT_EQ(run({"oncircle", "--coeffs", "1,2"}).code, 1);
  EXPECT_EQ(run({"oncircle", "--coeffs", "1,x"}).code, 2);
  EXPECT_EQ(run({"oncircle", "--N", "3", "--s", "1", "--gamma", "1,2"}).code, 2);
  const auto r = run({"oncircle", "--coeffs", "1,0,-1", "--format", "json"});
  EXPECT_TRUE(contains(r.out, "\"all_on_circle\": true")) << r.out;
}

TEST(Cli, Region) {
  auto r = run({"region", "--N", "10", "--s", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "closed-form boundary unavailable; use classify")) << r.err;

  r = run({"region", "--N", "12", "--s", "2", "--format", "csv", "--resolution", "1/5", "--tau-samples", "40"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("# unitcircle ", 0), 0u);
  EXPECT_TRUE(contains(r.out, "gamma1,gamma2,verdict\n"));
  EXPECT_TRUE(contains(r.out, "\n0,0,1\n"));

  r = run({"region", "--N", "11", "--s", "2", "--format", "svg", "--resolution", "1/5", "--tau-samples", "80"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "<svg"));
  EXPECT_TRUE(contains(r.out, "stroke-dasharray=\"6 4\""));
  EXPECT_TRUE(contains(r.out, "id=\"box-hat\""));
  EXPECT_TRUE(contains(r.out, "id=\"box-tilde\""));
  EXPECT_TRUE(contains(r.out, "<polyline class=\"U_0\""));
  EXPECT_TRUE(contains(r.out, "<polyline class=\"U_pi\""));
  EXPECT_TRUE(contains(r.out, "<polyline class=\"U_tau\""));

  r = run({"region", "--N", "7", "--s", "1", "--format", "json", "--resolution", "1/10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\"schema\": \"unitcircle.region/1\"")) << r.out.substr(0, 200);
  EXPECT_EQ(run({"region", "--N", "7", "--s", "1", "--format", "svg"}).code, 2);
  EXPECT_EQ(run({"region", "--N", "7", "--s", "2", "--resolution", "0"}).code, 2);
}

TEST(Cli, Classify) {
  auto r = run({"classify", "--N", "6", "--s", "3", "--resolution", "1/2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\n0,0,0,1\n")) << r.out.substr(0, 200);
}

TEST(Cli, ChebAndFactorize) {
  auto r = run({"cheb", "--N", "3", "--s", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "-4 + 24*z^2"));
  EXPECT_TRUE(contains(r.out, "Theta = -8"));
  r = run({"factorize", "--N", "3", "--s", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(run({"factorize", "--N", "3", "--s", "1", "--tol", "1e-40"}).code, 1);
  EXPECT_EQ(run({"factorize", "--N", "3", "--s", "4"}).code, 2);
}

TEST(Cli, Verify) {
  EXPECT_EQ(run({"verify", "--max-n", "3"}).code, 2);
  const auto path = std::filesystem::temp_directory_path() / "unitcircle_cli_verify.json";
  const auto r = run({"verify", "--max-n", "20", "--json", path.string()});
  EXPECT_EQ(r.code, 0) << r.out;
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string json = buf.str();
  EXPECT_TRUE(contains(json, "\"schema\": \"unitcircle.verify/1\""));
  EXPECT_TRUE(contains(json, "\"exact_zero\": true"));
  EXPECT_FALSE(contains(json, "\"status\": \"fail\""));
  std::filesystem::remove(path);
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> cases{
      {"extremal", "--N", "9", "--s", "4", "--format", "json"},
      {"region", "--N", "12", "--s", "2", "--format", "json", "--resolution", "1/4", "--tau-samples", "30"},
      {"region", "--N", "11", "--s", "2", "--format", "svg", "--resolution", "1/4", "--tau-samples", "30"},
      {"verify", "--max-n", "6"},
  };
  for (const auto& args : cases) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << args[0];
  }
}
