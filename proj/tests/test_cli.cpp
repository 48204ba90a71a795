#include <gtest/gtest.h>

#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"
#include "report.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stderr is folded into the captured output.
Run run(const std::string& args) {
  const std::string cmd = std::string(DISKT_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, f)) r.out.append(buf, n);
  const int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST(CliTransform, Examples) {
  auto r = run("transform P 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "z̄ − z")) << r.out;
  EXPECT_TRUE(contains(run("transform H 1").out, "−1"));
  EXPECT_TRUE(contains(run("transform S 'w^2'").out, "2 z z̄ − 1"));
}

TEST(CliTransform, JsonAndCsv) {
  auto j = nlohmann::json::parse(run("--format json transform B 'w^2*conj(w)'").out);
  EXPECT_EQ(j["operator"], "B");
  EXPECT_EQ(j["pretty"], "2/3 z");
  ASSERT_EQ(j["terms"].size(), 1u);
  EXPECT_EQ(j["terms"][0]["m"], 1);
  auto c = run("--format csv transform P 1");
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out.substr(0, 12), "m,n,re,im\r\n0");
}

TEST(CliErrors, ExitCodes) {
  auto r = run("transform P 'w +\n  3*)'");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.out, "line 2, column 5")) << r.out;
  EXPECT_EQ(run("--tol-quad=-1 verify").code, 2);
  EXPECT_EQ(run("transform Q 1").code, 2);
  EXPECT_EQ(run("norm pinf --p 1.5").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
}

TEST(CliVerify, LowDegreeSkipsWithoutFailing) {
  auto r = run("--format json --max-degree 0 verify");
  EXPECT_EQ(r.code, 0) << r.out;
  const auto rows = nlohmann::json::parse(r.out);
  bool skipped = false, failed = false;
  for (const auto& row : rows) {
    skipped = skipped || row["status"] == "SKIPPED";
    failed = failed || row["status"] == "FAIL";
  }
  EXPECT_TRUE(skipped);
  EXPECT_FALSE(failed);
}

TEST(CliVerify, DeterministicJson) {
  const auto a = run("--format json verify"), b = run("--format json verify");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto rows = nlohmann::json::parse(a.out);
  ASSERT_FALSE(rows.empty());
  for (const auto* key : {"check_id", "paper_anchor", "expected", "computed", "abs_err", "tol", "status"})
    EXPECT_TRUE(rows[0].contains(key)) << key;
}

TEST(CliNorm, Kinds) {
  auto p = run("--format csv norm pinf --p inf");
  EXPECT_EQ(p.code, 0);
  EXPECT_TRUE(contains(p.out, "2.546479089470")) << p.out;
  auto l = nlohmann::json::parse(run("--format json norm 1 --grid radial:5").out);
  bool conj_at_zero = false;
  for (const auto& row : l) conj_at_zero = conj_at_zero || (row["w"] == "0" && contains(row["flag"].get<std::string>(), "CONJECTURE"));
  EXPECT_TRUE(conj_at_zero);
  EXPECT_EQ(run("norm rt --p 4").code, 0);
}

TEST(Report, CsvQuotingAndNan) {
  diskt::cli::Report r{{"a", "b"}, {{std::string("x,\"y\""), std::nan("")}, {1L, 0.5}}};
  std::ostringstream os;
  diskt::cli::write_csv(os, r);
  EXPECT_EQ(os.str(), "a,b\r\n\"x,\"\"y\"\"\",\r\n1,0.5\r\n");
  std::ostringstream js;
  diskt::cli::write_json(js, r);
  const auto j = nlohmann::json::parse(js.str());
  EXPECT_TRUE(j[0]["b"].is_null());
  EXPECT_EQ(j[1]["a"], 1);
}
