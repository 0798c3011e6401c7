#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(K3TAU_CLI) + " " + args + " 2>&1";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has(const CliRun& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

}  // namespace

TEST(Cli, Check) {
  CliRun r = run("check 78 --n 2");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r, "(3, L, 13)")) << r.out;
  EXPECT_TRUE(has(r, "(78, 25L, 312)")) << r.out;
  EXPECT_TRUE(has(r, "(p, q) = (2, 1)")) << r.out;

  CliRun j = run("check 438 --n 2,3 --format json");
  EXPECT_EQ(j.code, 0);
  EXPECT_TRUE(has(j, "\"F3\"")) << j.out;
}

TEST(Cli, BadDegree) {
  CliRun r = run("check 7");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r, "d must be even")) << r.out;
  EXPECT_EQ(run("check 42 --n 1").code, 2);
  EXPECT_EQ(run("check 42 --format xml").code, 2);
}

TEST(Cli, Scan) {
  CliRun r = run("scan 12 120 --only tau_strict --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r, "\n42,")) << r.out;
  EXPECT_TRUE(has(r, "\n78,"));
  EXPECT_TRUE(has(r, "\n114,"));
  EXPECT_FALSE(has(r, "\n150,"));
  CliRun empty = run("scan 100 90");
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(empty.out, "");
  EXPECT_EQ(run("scan 2 10 --only prime").code, 2);
}

TEST(Cli, Pell) {
  CliRun a = run("pell 39 -3");
  EXPECT_EQ(a.code, 0);
  EXPECT_TRUE(has(a, "(x, y) = (6, 1)")) << a.out;
  CliRun b = run("pell 219 -3");
  EXPECT_EQ(b.code, 0);
  EXPECT_TRUE(has(b, "no solution"));
  CliRun c = run("pell --affine 3 7 -1 --constraint p-odd,q-even");
  EXPECT_TRUE(has(c, "(P, Q) = (3, 2)")) << c.out;
  EXPECT_EQ(run("pell 16 1").code, 2);
  EXPECT_EQ(run("pell 5").code, 2);
}

TEST(Cli, Verify) {
  CliRun r = run("verify disc-action --d-list 42,78");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r, "all checks passed"));
  EXPECT_EQ(run("verify nonsense").code, 2);
}

TEST(Cli, Usage) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}
