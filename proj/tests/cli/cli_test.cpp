#include "cli.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace tropical::cli {
namespace {

using ::testing::HasSubstr;
using ::testing::StartsWith;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, RankOfFano) {
  const Invocation r = call({"rank", "builtin:fano7"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "rank 3\nmode standard\nwitness rows{1,2,3} cols{1,2,3}\n");
  const Invocation s = call({"rank", "builtin:fano7_sym", "--symmetric"});
  EXPECT_THAT(s.out, StartsWith("rank 4\nmode symmetric\n"));
}

TEST(CliTest, DetListsEveryWitness) {
  const Invocation r = call({"--format", "json", "det", "builtin:diag_ones3"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["value"], 0);
  EXPECT_EQ(j["witnesses"], nlohmann::json::parse("[[2,3,1],[3,1,2]]"));
  EXPECT_EQ(j["truncated"], false);
  const Invocation capped = call({"--cap", "3", "--format", "json", "det", "builtin:q3"});
  EXPECT_EQ(capped.code, kExitOk);
}

TEST(CliTest, CellDimension) {
  const Invocation r = call({"celldim", "builtin:shitov6_sym_v2", "--r", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_THAT(r.out, StartsWith("dimension 33\nambient 36\n"));
  const Invocation e = call({"celldim", "builtin:q3", "--r", "3", "--emit-equations"});
  EXPECT_THAT(e.out, HasSubstr("x_{1,1} + x_{2,2} = x_{1,2} + x_{2,1}"));
  const Invocation bad = call({"celldim", "builtin:fano7", "--r", "3"});
  EXPECT_EQ(bad.code, kExitFailed);
  EXPECT_THAT(bad.err, HasSubstr("rows{1,2,3}"));
}

TEST(CliTest, Membership) {
  const Invocation r = call({"member", "builtin:diag_ones3", "--r", "3", "--symmetric"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_THAT(r.out, StartsWith("member false\nfailing minor rows{1,2,3} cols{1,2,3}"));
  const Invocation v = call({"member", "builtin:diag_ones3", "--r", "3", "--via-minors"});
  EXPECT_EQ(v.out, "member true\n");
}

TEST(CliTest, MinorsStream) {
  const Invocation r = call({"minors", "--m", "2", "--n", "3", "--r", "2"});
  EXPECT_EQ(r.out,
            "X_{1,1}X_{2,2} (+) X_{1,2}X_{2,1}\n"
            "X_{1,1}X_{2,3} (+) X_{1,3}X_{2,1}\n"
            "X_{1,2}X_{2,3} (+) X_{1,3}X_{2,2}\n");
  const Invocation j = call({"--format", "json", "minors", "--m", "2", "--n", "2", "--r", "2"});
  EXPECT_EQ(j.out, "{\"cols\":[1,2],\"poly\":\"X_{1,1}X_{2,2} (+) X_{1,2}X_{2,1}\",\"rows\":[1,2]}\n");
}

TEST(CliTest, Gap) {
  const Invocation r = call({"gap", "--m", "7", "--n", "7", "--r", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_THAT(r.out, HasSubstr("prevariety dim >= 41 > 40 = variety dim"));
  const Invocation s = call({"--format", "json", "gap", "--n", "7", "--r", "5", "--symmetric"});
  EXPECT_EQ(nlohmann::json::parse(s.out)["prevariety_lower_bound"], 23);
  EXPECT_EQ(call({"gap", "--m", "6", "--n", "6", "--r", "4"}).code, kExitUsage);
}

TEST(CliTest, ConstructAndBuiltin) {
  const Invocation b = call({"builtin", "diag_ones3"});
  EXPECT_EQ(b.out, "3 3 symmetric\n1 0 0\n0 1 0\n0 0 1\n");
  const Invocation border = call({"construct", "border", "builtin:diag_ones3", "--P", "5", "--M", "-2"});
  EXPECT_EQ(border.code, kExitOk);
  EXPECT_THAT(border.out, StartsWith("4 4"));
  EXPECT_THAT(border.out, HasSubstr("5 5 5 -2"));
  const Invocation col = call({"construct", "append-col", "builtin:q3", "--coeff", "1=0", "--coeff", "3=2"});
  EXPECT_EQ(col.code, kExitOk);
  EXPECT_THAT(col.out, StartsWith("3 4\n"));
  EXPECT_EQ(call({"construct", "separating-coeffs", "builtin:diag_ones3"}).code, kExitFailed);
  EXPECT_EQ(call({"construct", "append-col", "builtin:q3", "--coeff", "9=0"}).code, kExitUsage);
  EXPECT_EQ(call({"construct", "sym-border", "builtin:fano7"}).code, kExitUsage);
}

TEST(CliTest, ReadsMatrixFiles) {
  const auto path = std::filesystem::temp_directory_path() / "tropical_cli_test.txt";
  {
    std::ofstream f(path);
    f << "2 2\n0 1/2\n3 -1\n";
  }
  const Invocation r = call({"det", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_THAT(r.out, StartsWith("tropdet -1\n"));
  {
    std::ofstream f(path);
    f << "2 2\n0 x\n3 -1\n";
  }
  EXPECT_EQ(call({"det", path.string()}).code, kExitUsage);
  std::filesystem::remove(path);
  EXPECT_EQ(call({"det", "/nonexistent/matrix.txt"}).code, kExitUsage);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"rank"}).code, kExitUsage);
  EXPECT_EQ(call({"--format", "xml", "rank", "builtin:q3"}).code, kExitUsage);
  EXPECT_EQ(call({"rank", "builtin:nope"}).code, kExitUsage);
  EXPECT_EQ(call({"rank", "builtin:fano7", "--symmetric"}).code, kExitUsage);
  EXPECT_EQ(call({"celldim", "builtin:q3", "--r", "0"}).code, kExitUsage);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST(CliTest, JsonIsIdenticalAcrossThreadCounts) {
  for (const std::vector<std::string>& cmd :
       {std::vector<std::string>{"rank", "builtin:fano7_sym", "--symmetric"},
        {"celldim", "builtin:fano7_sym", "--r", "4", "--emit-equations"},
        {"verify-paper", "--claims", "rank-fano7,gap-sweep-standard"}}) {
    std::vector<std::string> one{"--threads", "1", "--format", "json"};
    std::vector<std::string> four{"--threads", "4", "--format", "json"};
    one.insert(one.end(), cmd.begin(), cmd.end());
    four.insert(four.end(), cmd.begin(), cmd.end());
    const Invocation a = call(one), b = call(four), c = call(one);
    EXPECT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    EXPECT_EQ(a.out.find("elapsed"), std::string::npos);
  }
}

TEST(CliTest, TimingsAreOptIn) {
  const Invocation r = call({"--timings", "--format", "json", "rank", "builtin:q3"});
  EXPECT_TRUE(nlohmann::json::parse(r.out).contains("elapsed_ms"));
}

TEST(CliTest, ClaimLedger) {
  const Invocation r = call({"--format", "json", "verify-paper", "--claims", "rank-fano7,q3-equations"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["all_pass"], true);
  EXPECT_EQ(j["claims"][0]["provenance"], "published");
  EXPECT_EQ(call({"verify-paper", "--claims", "no-such-claim"}).code, kExitUsage);
}

}  // namespace
}  // namespace tropical::cli
