#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(AW_BINARY) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

const std::string kBase = "--u 1/2 --a 1/2 --b 1/3 --c 1/5 --d 1/7";
const std::string kTable = "--q 1/9 --a 6/7 --b 5/7 --c 4/7 --d 3/7";

TEST(Cli, Table1Csv) {
  const auto r = run("table1 --precision 128 --format csv");
  EXPECT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 4U);
  EXPECT_EQ(rows[0][0], "n");
  EXPECT_EQ(rows[1], (std::vector<std::string>{"7", "-0.864348856", "0.33690627", "0.948809497", "0.981913401"}));
  EXPECT_EQ(rows[2], (std::vector<std::string>{"9", "-0.922505234", "0.336904827", "0.948809477", "0.986122226"}));
}

TEST(Cli, VerifyDdePasses) {
  const auto r = run("verify --check dde " + kBase + " --n 1..8");
  EXPECT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 9U);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i][2], "PASS");
    EXPECT_EQ(rows[i][3], "0");
  }
}

TEST(Cli, VerifyStructureFloatBackend) {
  const auto r = run("verify --check structure --backend float --u 9/10 --a 1/2 --b 1/3 --c 1/5 --d 1/7 --n 2..5");
  EXPECT_EQ(r.code, 0);
}

TEST(Cli, VerifyFailureExitsOne) {
  const auto r = run("verify --check koornwinder " + kBase + " --n 0..1");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyOtherChecks) {
  for (const char* check : {"product-rules", "contiguous", "expansion", "band", "shift", "koornwinder-reduced"}) {
    EXPECT_EQ(run(std::string("verify --check ") + check + " " + kBase + " --n 0..6").code, 0) << check;
  }
}

TEST(Cli, EvalConstant) {
  const auto r = run("eval --n 0 --x 0.3 " + kBase);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_csv(r.out).at(1).at(2), "1.0");
}

TEST(Cli, EvalExactPolynomial) {
  const auto r = run("eval --n 1 --x 0 " + kBase);
  EXPECT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  EXPECT_EQ(rows.at(1).at(1), "0");
  EXPECT_EQ(rows.at(1).at(2).find('.'), std::string::npos);  // exact rational
}

TEST(Cli, ExactRefusedForIrrationalQuarterRoot) {
  EXPECT_EQ(run("eval --n 2 " + kTable).code, 2);
  EXPECT_EQ(run("eval --n 2 --backend float " + kTable).code, 0);
}

TEST(Cli, ZerosAndBounds) {
  const auto z = run("zeros " + kTable + " --n 7");
  EXPECT_EQ(z.code, 0);
  const auto rows = parse_csv(z.out);
  ASSERT_EQ(rows.size(), 8U);
  EXPECT_EQ(rows[1][2].substr(0, 11), "-0.86434885");

  const auto b = run("bounds " + kTable + " --n 7");
  EXPECT_EQ(b.code, 0);
  const auto brows = parse_csv(b.out);
  EXPECT_EQ(brows.at(1).at(1), brows.at(1).at(4));  // (up1) equals the smaller G_{2,6} root
}

TEST(Cli, LimitsPass) {
  const auto r = run("limits --q 1/4 --a 1/2 --b 1/3 --c 1/5 --n 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_csv(r.out).size(), 13U);
}

TEST(Cli, CsvAndJsonCarryIdenticalValues) {
  const std::string args = "bounds " + kTable + " --n 2..6 --precision 100";
  const auto csv = parse_csv(run(args + " --format csv").out);
  const auto json = nlohmann::json::parse(run(args + " --format json").out);
  EXPECT_EQ(json["command"], "bounds");
  EXPECT_EQ(json["status"], "OK");
  ASSERT_EQ(json["rows"].size() + 1, csv.size());
  for (std::size_t r = 0; r < json["rows"].size(); ++r) {
    for (std::size_t c = 0; c < csv[0].size(); ++c) EXPECT_EQ(json["rows"][r][csv[0][c]], csv[r + 1][c]);
  }
}

TEST(Cli, DeterministicForFixedSeed) {
  const std::string args = "verify --check product-rules " + kBase + " --n 0..5 --seed 9";
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("eval --bogus 1").code, 2);
  EXPECT_EQ(run("eval --n 2 --a 1/2 --b 1/3 --c 1/5 --d 1/7").code, 2);              // no base
  EXPECT_EQ(run("eval --n 2 --u 1/2 --q 1/16 --a 1/2 --b 1/3 --c 1/5 --d 1/7").code, 2);  // both
  EXPECT_EQ(run("eval --n 40 " + kBase).code, 2);
  EXPECT_EQ(run("eval --n 5..2 " + kBase).code, 2);
  EXPECT_EQ(run("eval --n 2 --backend exact --precision 128 " + kBase).code, 2);
  EXPECT_EQ(run("verify --check nope " + kBase + " --n 2").code, 2);
  EXPECT_EQ(run("zeros --backend exact " + kTable + " --n 3").code, 2);
  EXPECT_EQ(run("eval --n 2 --u 1/2 --a 2 --b 2 --c 2 --d 2").code, 2);  // singular normalization
}

TEST(Cli, PrecisionFromEnvironment) {
  const auto r = run("bounds " + kTable + " --n 7 --format csv");
  const std::string cmd = "AW_PRECISION=200 " + std::string(AW_BINARY) + " bounds " + kTable + " --n 7";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
  EXPECT_EQ(pclose(pipe), 0);
  EXPECT_NEAR(std::stod(parse_csv(out).at(1).at(1)), std::stod(parse_csv(r.out).at(1).at(1)), 1e-10);
}

}  // namespace
