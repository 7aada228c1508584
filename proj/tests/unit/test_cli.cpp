#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run ord(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = ordcli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CmpFinite) {
  auto r = ord({"cmp", "2", "3"});
  EXPECT_EQ(r.code, ordcli::kOk);
  EXPECT_NE(r.out.find("verdict lt"), std::string::npos);
  EXPECT_NE(ord({"cmp", "w", "w"}).out.find("verdict eq"), std::string::npos);
  EXPECT_NE(ord({"cmp", "5", "2+2"}).out.find("verdict gt"), std::string::npos);
}

TEST(Cli, CmpUnknownExitCode) {
  auto r = ord({"cmp", "w", "1+w"});
  EXPECT_EQ(r.code, ordcli::kUnknown);
  EXPECT_NE(r.out.find("verdict unknown"), std::string::npos);
}

TEST(Cli, CmpKernelResolves) {
  auto r = ord({"cmp", "w", "1+w", "--kernel"});
  EXPECT_EQ(r.code, ordcli::kOk);
  EXPECT_NE(r.out.find("verdict eq"), std::string::npos);
}

TEST(Cli, CmpEmitCert) {
  auto r = ord({"cmp", "1", "2", "--emit-cert"});
  EXPECT_EQ(r.code, ordcli::kOk);
  EXPECT_NE(r.out.find("cert "), std::string::npos);
}

TEST(Cli, ParseErrorExitCode) {
  auto r = ord({"cmp", "w +", "1"});
  EXPECT_EQ(r.code, ordcli::kError);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(ord({"frobnicate"}).code, ordcli::kError);
  EXPECT_EQ(ord({"tree", "w", "--mu-bound", "x"}).code, ordcli::kError);
}

TEST(Cli, Tree) {
  auto r = ord({"tree", "3", "--mu-bound", "4"});
  EXPECT_EQ(r.code, ordcli::kOk);
  EXPECT_EQ(r.out, "[]\n[0]\n[0,0]\n[0,0,0]\n");
  EXPECT_EQ(ord({"tree", "w", "--mu-bound", "3"}).out, "[]\n[0]\n[1]\n[2]\n[1,0]\n");
}

TEST(Cli, Eval) {
  auto r = ord({"eval", "2*3+1"});
  EXPECT_EQ(r.code, ordcli::kOk);
  EXPECT_NE(r.out.find("value 7"), std::string::npos);
}

TEST(Cli, MlProve) {
  auto yes = ord({"ml-prove", "2 < 3"});
  EXPECT_EQ(yes.code, ordcli::kOk);
  EXPECT_NE(yes.out.find("derivable true"), std::string::npos);
  auto no = ord({"ml-prove", "3 < 3"});
  EXPECT_NE(no.out.find("derivable false"), std::string::npos);
  EXPECT_EQ(ord({"ml-prove", "w <= w"}).code, ordcli::kError);
}

TEST(Cli, CheckLaws) {
  auto r = ord({"check-laws", "--seed", "7", "--cases", "20"});
  EXPECT_EQ(r.code, ordcli::kOk);
  EXPECT_EQ(r.out.rfind("PASS", 0), 0u);
}

TEST(Cli, DemoLpo) {
  auto r = ord({"demo", "lpo", "--prefix", "001", "--tail", "opaque"});
  EXPECT_EQ(r.code, ordcli::kOk);
  EXPECT_NE(r.out.find("engine: unknown"), std::string::npos);
  EXPECT_NE(r.out.find("ml: provable"), std::string::npos);
  EXPECT_EQ(ord({"demo", "lpo", "--prefix", "10"}).code, ordcli::kError);
}

TEST(Cli, DemoLlpo) {
  auto r = ord({"demo", "llpo", "--prefix", "0010", "--tail", "const"});
  EXPECT_EQ(r.code, ordcli::kOk);
  EXPECT_NE(r.out.find("condition even true"), std::string::npos);
  EXPECT_NE(r.out.find("condition odd false"), std::string::npos);
}

TEST(Cli, Help) { EXPECT_EQ(ord({"--help"}).code, ordcli::kOk); }
