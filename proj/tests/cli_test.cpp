#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "succdist_cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "succdist");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = succdist::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(CliDist, CsvRows) {
  const CliRun r = run({"dist", "--spec", "1,2,2", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 5U);
  EXPECT_EQ(lines[0], "r,count,probability_exact,probability_decimal");
  EXPECT_EQ(lines[1], "0,7,7/30,0.233333333333");
  EXPECT_EQ(lines[2], "1,12,2/5,0.4");
  EXPECT_EQ(lines[3], "2,9,3/10,0.3");
  EXPECT_EQ(lines[4], "3,2,1/15,0.0666666666667");
}

TEST(CliDist, SingleLetter) {
  const CliRun r = run({"dist", "--spec", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("total: 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("polynomial: 1\n"), std::string::npos);
}

TEST(CliDist, AllMethodsAgree) {
  const CliRun r = run({"dist", "--spec", "2,3,4", "--method", "all"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("agreement: OK"), std::string::npos);
  EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos);
  EXPECT_NE(r.out.find("93 + 330w + 435w^2 + 300w^3 + 90w^4 + 12w^5"), std::string::npos);
}

TEST(CliDist, JsonSchemaAndDeterminism) {
  const CliRun a = run({"dist", "--spec", "1,2,2", "--format", "json"});
  const CliRun b = run({"dist", "--spec", "1,2,2", "--format", "json"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["spec"], nlohmann::json::array({1, 2, 2}));
  EXPECT_EQ(j["counts"], nlohmann::json::array({"7", "12", "9", "2"}));
  EXPECT_EQ(j["total"], "30");
  EXPECT_EQ(j["moments"]["mean"], "6/5");
  EXPECT_EQ(j["moments"]["variance"], "19/25");
  EXPECT_TRUE(j["moments"]["factorial"].is_array());
}

TEST(CliMoments, PublishedFiveLetterSpec) {
  const CliRun r = run({"moments", "--spec", "2,3,1,2,2", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("mean,3/2,1.5\n"), std::string::npos);
  EXPECT_NE(r.out.find("variance,217/180,"), std::string::npos);
  EXPECT_NE(r.out.find("second_factorial,88/45,"), std::string::npos);
}

TEST(CliMoments, SingleLetterIsDegenerate) {
  const CliRun r = run({"moments", "--spec", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("mean: 0 (0)"), std::string::npos);
  EXPECT_NE(r.out.find("variance: 0 (0)"), std::string::npos);
}

TEST(CliMoments, ThirdFactorialMoment) {
  const CliRun r = run({"moments", "--spec", "1,2,2", "--mmax", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("E[R^(3)]: 2/5 (0.4)"), std::string::npos);
}

TEST(CliCheck, Suites) {
  for (const std::vector<std::string>& args : {std::vector<std::string>{"check", "--suite", "a000255", "--kmax", "8"},
                                               {"check", "--suite", "oracle", "--nmax", "6"},
                                               {"check", "--suite", "recurrence", "--spec", "1,1,2", "--dir", "2",
                                                "--steps", "5"}}) {
    const CliRun r = run(args);
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("overall: PASS"), std::string::npos);
  }
}

TEST(CliCheck, JsonReport) {
  const CliRun r = run({"check", "--suite", "closed-form", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["suites"][0]["name"], "closed-form");
}

TEST(CliExitCodes, UsageErrors) {
  EXPECT_EQ(run({"dist", "--spec", "1,x"}).code, 2);
  EXPECT_EQ(run({"dist", "--spec", "0,0"}).code, 2);
  EXPECT_EQ(run({"dist", "--spec", "1,1,1,1", "--method", "closed-form"}).code, 2);
  EXPECT_EQ(run({"dist", "--spec", "1,2", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"check", "--suite", "nope"}).code, 2);
}

TEST(CliExitCodes, OracleBudget) {
  EXPECT_EQ(run({"dist", "--spec", "3,3,3", "--method", "oracle", "--budget", "100"}).code, 3);
  ::setenv("SUCCDIST_BUDGET", "100", 1);
  const int via_env = run({"dist", "--spec", "3,3,3", "--method", "oracle"}).code;
  const int flag_wins = run({"dist", "--spec", "3,3,3", "--method", "oracle", "--budget", "5000"}).code;
  ::unsetenv("SUCCDIST_BUDGET");
  EXPECT_EQ(via_env, 3);
  EXPECT_EQ(flag_wins, 0);
}

TEST(CliOutput, WritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "succdist_cli_test.csv";
  const CliRun r = run({"dist", "--spec", "1,1", "--format", "csv", "--output", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), "r,count,probability_exact,probability_decimal\n0,1,1/2,0.5\n1,1,1/2,0.5\n");
  std::filesystem::remove(path);
}

}  // namespace
