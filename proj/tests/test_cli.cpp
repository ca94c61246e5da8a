#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "hump/cli.hpp"
#include "oracle.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = hump::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return oracle::read_file(std::string(HUMP_FIXTURE_DIR) + "/" + name); }

}  // namespace

TEST(CliTriangle, PrintedTables) {
  auto r = run({"triangle", "hm", "--backend", "enum", "--n-max", "10"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, fixture("hm_triangle.csv"));
  r = run({"triangle", "s", "--backend", "formula", "--n-max", "8"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, fixture("s_triangle.csv"));
}

TEST(CliTriangle, SmallestSeriesTable) {
  const auto r = run({"triangle", "hm", "--backend", "series", "--n-max", "2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "n,1\n2,1\n");
}

TEST(CliTriangle, Json) {
  const auto r = run({"triangle", "mp", "--backend", "series", "--n-max", "3", "--format", "json"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "{\"n_min\":0,\"k_min\":0,\"rows\":[[1],[1,1],[2,2,1],[4,5,3,1]]}\n");
}

TEST(CliTriangle, UsageErrors) {
  EXPECT_EQ(run({"triangle", "pm", "--backend", "series"}).status, 1);
  EXPECT_EQ(run({"triangle", "mp", "--backend", "formula"}).status, 1);
  EXPECT_EQ(run({"triangle", "zz"}).status, 1);
  EXPECT_EQ(run({"triangle", "hm", "--format", "xml"}).status, 1);
  EXPECT_EQ(run({}).status, 1);
  const auto big = run({"--cap", "8", "triangle", "hm", "--n-max", "10"});
  EXPECT_EQ(big.status, 1);
  EXPECT_NE(big.err.find("SIZE_LIMIT"), std::string::npos);
}

TEST(CliVerify, DocumentedExamplesPass) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "eq1", "--n-max", "12"}, {"verify", "cor34", "--n-max", "11"}, {"verify", "thm12", "--n-max", "10"}}) {
    const auto r = run(args);
    EXPECT_EQ(r.status, 0) << r.out << r.err;
    EXPECT_NE(r.out.find(": PASS"), std::string::npos);
  }
}

TEST(CliVerify, EveryRegisteredIdentityPassesOnItsDefaultRange) {
  const auto r = run({"verify", "all"});
  EXPECT_EQ(r.status, 0) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
  EXPECT_EQ(static_cast<std::size_t>(std::count(r.out.begin(), r.out.end(), '\n')), hump::identity_registry().size());
}

TEST(CliVerify, Errors) {
  EXPECT_EQ(run({"verify", "eq99"}).status, 1);
  EXPECT_EQ(run({"verify", "eq1", "--n-max", "30"}).status, 1);
}

TEST(CliVerify, FailingReportShowsCounterexample) {
  hump::VerificationReport r{"demo", 0, 3, "0..n", 4, hump::Counterexample{"n=3 k=1", "5", "6"}};
  EXPECT_EQ(hump::cli::format_report(r), "demo n=0..3 k=0..n cases=4: FAIL at n=3 k=1: 5 != 6");
}

TEST(CliBijection, Examples) {
  auto r = run({"bijection", "psi", "--input", "UFUFFDDUD", "--hump", "2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "UFUUDUUFF\n");
  r = run({"bijection", "cap-phi", "--input", "UFUFFDDUD", "--hump", "2"});
  EXPECT_EQ(r.out, "{\"row1\":[1,2,4,5,7],\"row2\":[3,6,8],\"column\":[9]}\n");
  r = run({"bijection", "varphi", "--input", "UD"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "UU\n");
  r = run({"bijection", "psi", "--input", "UFUUDUUFF", "--inverse"});
  EXPECT_EQ(r.out, "UFUFFDDUD --hump 2\n");
  r = run({"bijection", "cap-phi", "--inverse", "--input", "{\"row1\":[1,2,4,5,7],\"row2\":[3,6,8],\"column\":[9]}"});
  EXPECT_EQ(r.out, "UFUFFDDUD --hump 2\n");
  r = run({"bijection", "rho1", "--inverse", "--input", "U", "--n", "4"});
  EXPECT_EQ(r.out, "UUFF\n");
  r = run({"bijection", "phi", "--inverse", "--input", "UUDUUDUDF"});
  EXPECT_EQ(r.out, fixture("figure_phi_inverse.json"));
}

TEST(CliBijection, Errors) {
  auto r = run({"bijection", "rho2", "--input", "UUDD"});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("NOT_IN_DOMAIN"), std::string::npos);
  r = run({"bijection", "psi", "--input", "UXD", "--hump", "0"});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("INVALID_CHARACTER"), std::string::npos);
  EXPECT_EQ(run({"bijection", "psi", "--input", "UD"}).status, 1);   // missing --hump
  EXPECT_EQ(run({"bijection", "rho1", "--inverse", "--input", "U"}).status, 1);
  EXPECT_EQ(run({"bijection", "nope", "--input", "UD"}).status, 1);
}

TEST(CliBijection, TraceIsJson) {
  const auto r = run({"bijection", "psi", "--input", "UFUFFDDUD", "--hump", "2", "--trace"});
  ASSERT_EQ(r.status, 0);
  const auto second = r.out.substr(r.out.find('\n') + 1);
  const auto j = nlohmann::json::parse(second);
  ASSERT_EQ(j.at("segments").size(), 3u);
  EXPECT_EQ(j["segments"][1]["text"], "UFFD");
  EXPECT_EQ(j["segments"][1]["range"], nlohmann::json::array({2, 6}));

  const auto c = run({"bijection", "cap-phi", "--input", "UFUFFDDUD", "--hump", "2", "--trace"});
  const auto cj = nlohmann::json::parse(c.out.substr(c.out.find('\n') + 1));
  ASSERT_EQ(cj.at("stages").size(), 3u);
  EXPECT_EQ(cj["stages"][1]["output"], "UUDUUDUDF");
}

TEST(CliFigures, WalkthroughLines) {
  const auto r = run({"figures"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("psi          UFUUDUUFF\n"), std::string::npos);
  EXPECT_NE(r.out.find("varphi^-1    UUDUUDUDF\n"), std::string::npos);
  EXPECT_NE(r.out.find("1 2 4 5 7\n3 6 8\n9\n"), std::string::npos);
}
