#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Outcome {
  int status;
  std::string out;
};

Outcome cli(const std::string& args) {
  const std::string cmd = std::string(NESTLAB_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string fixture(const std::string& name) { return std::string("--doc ") + NESTLAB_FIXTURES + "/" + name; }

}  // namespace

TEST(Cli, AlgSucceeds) {
  const Outcome o = cli("alg " + fixture("four_chain.json"));
  EXPECT_EQ(o.status, 0);
  EXPECT_NE(o.out.find("\"dimension\": 6"), std::string::npos) << o.out;
}

TEST(Cli, TableFormat) {
  const Outcome o = cli("check-reflexive --format table " + fixture("e13_generated.json"));
  EXPECT_EQ(o.status, 0);
  EXPECT_NE(o.out.find("reflexive  true"), std::string::npos) << o.out;
}

TEST(Cli, ValidationErrorExitsOne) {
  EXPECT_EQ(cli("chain-predict m0 " + fixture("exa1_phi.json")).status, 0);
  EXPECT_EQ(cli("alg " + fixture("incomparable.json")).status, 1);
  EXPECT_EQ(cli("frobnicate " + fixture("four_chain.json")).status, 1);
  EXPECT_EQ(cli("proptest nope").status, 1);
}

TEST(Cli, ParseErrorExitsTwo) {
  EXPECT_EQ(cli("alg --doc /nonexistent.json").status, 2);
  EXPECT_EQ(cli("alg").status, 2);
  EXPECT_EQ(cli("alg --format xml " + fixture("four_chain.json")).status, 2);
  EXPECT_EQ(cli("alg --doc - < /dev/null").status, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(cli("--help").status, 0); }

TEST(Cli, ProptestIsReproducible) {
  const Outcome a = cli("proptest rankone --seed 4 --cases 5");
  const Outcome b = cli("proptest rankone --seed 4 --cases 5");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"seed\": 4"), std::string::npos);
}
