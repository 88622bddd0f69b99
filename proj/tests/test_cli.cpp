#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = turnpike::cli::run(args, {in, out, err});
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("turnpike_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                                                 ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& body) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << body;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

const std::string kWorkedW =
    "0 2 3 5 8 12 14 17 30 33 37 38 49 51 52 54 57 60 68 71 76 89 90 94 97 101 "
    "103 106 108 109 111 114 127 128 139 141 144 165 177 179 182";

std::string field(const std::string& text, const std::string& label) {
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);)
    if (line.rfind(label + ":", 0) == 0) return line.size() > label.size() + 2 ? line.substr(label.size() + 2) : "";
  return "<absent>";
}

}  // namespace

TEST(CliGen, FullSet) {
  const Result r = run({"gen", "--n", "5", "--k", "5", "--seed", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 1 2 3 4\n");
}

TEST(CliGen, PinnedSeed) { EXPECT_EQ(run({"gen", "--n", "1024", "--k", "8", "--seed", "42"}).out, "152 398 585 658 726 738 967 976\n"); }

TEST(CliGen, ReportsRandomSeed) {
  const Result r = run({"gen", "--n", "100", "--k", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.err.rfind("seed: ", 0), 0u);
}

TEST(CliGen, KAboveN) {
  const Result r = run({"gen", "--n", "4", "--k", "8", "--seed", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
  EXPECT_TRUE(r.out.empty());
}

TEST(CliDist, LinearAndCircular) {
  EXPECT_EQ(run({"dist"}, "44 31 13 5 2").out, "0 3 8 11 13 18 26 29 31 39 42\n");
  EXPECT_EQ(run({"dist", "--modulus", "13"}, "0 1 4").out, "0 1 3 4 9 10 12\n");
  EXPECT_EQ(run({"dist", "--modulus", "13"}, "0 13").code, 2);
}

TEST(CliSolve, WorkedExample) {
  const Result r = run({"solve"}, kWorkedW);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 3 5 17 54 106 111 114 144 182\n");
}

TEST(CliSolve, Singleton) { EXPECT_EQ(run({"solve"}, "0").out, "0\n"); }

TEST(CliSolve, NonRealizable) {
  const Result r = run({"solve"}, "0 1 5");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("FAILED: ", 0), 0u);
}

TEST(CliSolve, MissingZeroIsInserted) {
  const Result r = run({"solve"}, "3 8 11 13 18 26 29 31 39 42");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 3 11 29 42\n");
  EXPECT_NE(r.err.find("inserted"), std::string::npos);
}

TEST(CliSolve, ParseErrors) {
  EXPECT_EQ(run({"solve"}, "0 3 x").code, 2);
  EXPECT_EQ(run({"solve"}, "").code, 2);
  EXPECT_EQ(run({"solve", "/nonexistent/file"}).code, 2);
  EXPECT_EQ(run({"solve", "--modulus", "13"}, "0 1").code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliSolve, TraceMatchesWorkedIntermediates) {
  const Result r = run({"solve", "--trace", "--t", "3"}, kWorkedW);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(field(r.err, "u01"), "3");
  EXPECT_EQ(field(r.err, "Z"), "0 3 5 8 17 33 52 54 57 60 71 97 106 109 111 114 144 182");
  EXPECT_EQ(field(r.err, "anchors"), "3 5 17");
  EXPECT_EQ(field(r.err, "survivors"), "54 106 111 114 144 182");
  EXPECT_EQ(field(r.err, "forward_candidate"), "0 3 5 17 54 106 111 114 144 182");
  EXPECT_EQ(field(r.err, "path"), "forward-union");
  EXPECT_NE(r.err.find("graph:\n  0: 114 144 182\n"), std::string::npos);
}

TEST(CliSolve, FastOnly) {
  EXPECT_EQ(run({"solve", "--fast-only"}, "0 3 8 11 13 18 26 29 31 39 42").out, "0 3 11 29 42\n");
}

TEST(CliSolveCircular, RingOfThirteen) {
  const Result r = run({"solve-circular", "--modulus", "13", "--trace"}, "0 1 3 4 9 10 12");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 1 4\n");
  EXPECT_EQ(field(r.err, "u02"), "4");
}

TEST(CliSolveCircular, RequiresModulus) {
  EXPECT_EQ(run({"solve-circular"}, "0 1 3").code, 2);
  EXPECT_EQ(run({"solve-circular", "--modulus", "13"}, "0 1 3").code, 2);  // not closed under negation
}

TEST(CliVerify, Cases) {
  TempDir dir;
  const std::string v = dir.write("v.txt", "2 5 13 31 44\n");
  const std::string w = dir.write("w.txt", "0 3 8 11 13 18 26 29 31 39 42\n");
  EXPECT_EQ(run({"verify", v, w}).code, 0);

  const std::string zero = dir.write("zero.txt", "0");
  EXPECT_EQ(run({"verify", zero, zero}).code, 0);

  const std::string v01 = dir.write("v01.txt", "0 1");
  const std::string w02 = dir.write("w02.txt", "0 2");
  const Result bad = run({"verify", v01, w02});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out, "missing: 1 / extra: 2\n");

  const std::string ring = dir.write("ring.txt", "0 1 3 4 9 10 12");
  const std::string tri = dir.write("tri.txt", "0 1 4");
  EXPECT_EQ(run({"verify", tri, ring, "--modulus", "13"}).code, 0);

  const std::string junk = dir.write("junk.txt", "zero");
  EXPECT_EQ(run({"verify", junk, w}).code, 2);
}

TEST(CliOracle, ListsSolutionsAndExhaustion) {
  const Result r = run({"oracle"}, "0 3 8 11 13 18 26 29 31 39 42");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 3 11 29 42\nexhausted: yes\n");

  const Result none = run({"oracle"}, "0 1 5");
  EXPECT_EQ(none.code, 1);
  EXPECT_EQ(none.out, "exhausted: yes\n");

  EXPECT_EQ(run({"oracle", "--backtrack"}, kWorkedW).out, "0 3 5 17 54 106 111 114 144 182\nexhausted: yes\n");
  EXPECT_EQ(run({"oracle", "--modulus", "13"}, "0 1 3 4 9 10 12").out, "0 1 4\nexhausted: yes\n");
  EXPECT_EQ(run({"oracle", "--budget", "2"}, kWorkedW).out, "exhausted: no\n");
}

TEST(CliOracle, Census) {
  const Result r = run({"oracle", "--census", "--k", "3", "--max-diameter", "12"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("total 36 4\n"), std::string::npos);
}

TEST(CliSimulate, SingleCell) {
  const Result r = run({"simulate", "--ns", "16", "--ks", "2", "--trials", "1", "--seed", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,k,trials,successes,success_rate,mean_solve_micros\n16,2,1,1,1.0000,NA\n");
}

TEST(CliSimulate, GridShapeAndDeterminism) {
  const std::vector<std::string> args{"simulate", "--ns", "64,128", "--ks", "2,3,4", "--trials", "5", "--seed", "7"};
  const Result a = run(args);
  std::vector<std::string> threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  const Result b = run(threaded);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 7);
}

TEST(CliSimulate, RequiresSeedAndValidGrid) {
  EXPECT_EQ(run({"simulate", "--ns", "16", "--ks", "2", "--trials", "1"}).code, 2);
  EXPECT_EQ(run({"simulate", "--ns", "16", "--ks", "16", "--trials", "1", "--seed", "1"}).code, 2);
  EXPECT_EQ(run({"simulate", "--ns", "16", "--ks", "2", "--trials", "0", "--seed", "1"}).code, 2);
  EXPECT_EQ(run({"simulate", "--ns", "16", "--ks", "2", "--trials", "1", "--seed", "1", "--mode", "spiral"}).code, 2);
  EXPECT_EQ(run({"simulate", "--ns", "1x", "--ks", "2", "--trials", "1", "--seed", "1"}).code, 2);
}

TEST(CliSimulate, EmitsPlotScriptAndCsvFile) {
  TempDir dir;
  const std::string csv = dir.file("grid.csv");
  const std::string plot = dir.file("grid.gp");
  const Result r = run({"simulate", "--ns", "64", "--ks", "2,3", "--trials", "2", "--seed", "1", "--output", csv, "--emit-plot", plot});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(plot);
  const std::string script{std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  EXPECT_NE(script.find("'" + csv + "'"), std::string::npos);
  EXPECT_NE(script.find("$1==64"), std::string::npos);
  std::ifstream c(csv);
  std::string header;
  std::getline(c, header);
  EXPECT_EQ(header, "n,k,trials,successes,success_rate,mean_solve_micros");
}

TEST(CliHelp, ExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }
