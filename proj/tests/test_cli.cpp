#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "kmss/error.hpp"

namespace kmss::cli {
namespace {

const std::string kData = KMSS_TEST_DATA;
const std::string kGolden = KMSS_TEST_GOLDEN;

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data_path(const std::string& name) { return kData + "/" + name; }

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(' ');
  const auto e = s.find_last_not_of(' ');
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> cases;
  std::ifstream in(kGolden + "/cases.txt");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto bar = line.find('|');
    GoldenCase c{trim(line.substr(0, bar)), {}};
    std::istringstream words(line.substr(bar + 1));
    std::string w;
    while (words >> w) c.args.push_back(w.ends_with(".gcm") ? data_path(w) : w);
    cases.push_back(std::move(c));
  }
  return cases;
}

TEST(ParseMatrix, CommentsBlankLinesAndCrlf) {
  std::istringstream in("# header\r\n\r\n2  # size\r\n 2 -1\r\n-1\t2 # row\r\n\r\n");
  const auto m = parse_matrix(in);
  EXPECT_EQ(m.rows, (std::vector<std::vector<std::int64_t>>{{2, -1}, {-1, 2}}));
  EXPECT_EQ(m.row_lines, (std::vector<std::size_t>{4, 5}));
}

TEST(ParseMatrix, ErrorsNameTheLine) {
  const std::vector<std::pair<std::string, std::string>> bad = {
      {"2\n2 -1\n-1\n", "line 3"},
      {"2\n2 x\n-1 2\n", "line 2"},
      {"2\n2 -1\n-1 2\n5\n", "line 4"},
      {"0\n", "line 1"},
      {"2\n2 -1\n", "expected 2 rows"},
      {"# nothing\n", "no matrix size"},
      {"2\n2 -1.5\n-1 2\n", "line 2"},
  };
  for (const auto& [text, where] : bad) {
    std::istringstream in(text);
    try {
      parse_matrix(in);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError);
      EXPECT_NE(e.detail().find(where), std::string::npos) << e.detail();
    }
  }
}

TEST(Cli, ValidationErrorsExitOne) {
  const auto zero = invoke({"validate", write_temp("zero.gcm", "2\n2 -1\n0 2\n")});
  EXPECT_EQ(zero.status, 1);
  EXPECT_NE(zero.err.find("ZeroAsymmetry"), std::string::npos);
  EXPECT_NE(zero.err.find("(1,2)/(2,1)"), std::string::npos);
  const auto diag = invoke({"validate", data_path("bad_diag.gcm")});
  EXPECT_EQ(diag.status, 1);
  EXPECT_NE(diag.err.find("DiagonalNotTwo: at (1,1) (line 2)"), std::string::npos) << diag.err;
  EXPECT_EQ(invoke({"validate", data_path("bad_sign.gcm")}).status, 1);
  EXPECT_EQ(invoke({"validate", data_path("bad_parse.gcm")}).status, 1);
  EXPECT_EQ(invoke({"validate", data_path("missing.gcm")}).status, 1);
  EXPECT_TRUE(invoke({"validate", data_path("bad_parse.gcm")}).out.empty());
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(invoke({"frobnicate", data_path("a2.gcm")}).status, 1);
  EXPECT_EQ(invoke({"validate"}).status, 1);
  EXPECT_EQ(invoke({"e2", data_path("a2.gcm")}).status, 1);
  EXPECT_EQ(invoke({"e2", data_path("a2.gcm"), "--prime", "4"}).status, 1);
  EXPECT_EQ(invoke({"e2", data_path("a2.gcm"), "--prime", "5", "--coefficients", "real"}).status, 1);
  EXPECT_EQ(invoke({"validate", data_path("a2.gcm"), "--format", "xml"}).status, 1);
  EXPECT_EQ(invoke({"group-cohomology", data_path("affine_a1.gcm"), "--prime", "3", "--max-degree", "3"}).status, 1);
}

TEST(Cli, PreconditionFailuresExitTwo) {
  const auto bad = invoke({"e2", data_path("affine_a1.gcm"), "--prime", "2"});
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.err.find("BadPrime"), std::string::npos);
  const auto nc = invoke({"poincare", data_path("affine_a1.gcm"), "--prime", "2"});
  EXPECT_EQ(nc.status, 2);
  EXPECT_NE(nc.err.find("NotCollapsed"), std::string::npos);
  const auto cap = invoke({"poset", data_path("b3.gcm"), "--cap", "10"});
  EXPECT_EQ(cap.status, 2);
  EXPECT_NE(cap.err.find("CapExceeded"), std::string::npos);
  EXPECT_EQ(invoke({"validate", data_path("a3.gcm"), "--max-rank", "2"}).status, 2);
}

TEST(Cli, CollapseOnAffine) {
  const auto r = invoke({"collapse", data_path("affine_a1.gcm"), "--prime", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("collapsed=true reason=PaperCriterion"), std::string::npos);
  const auto refused = invoke({"collapse", data_path("affine_a1.gcm"), "--prime", "2"});
  EXPECT_EQ(refused.status, 0);
  EXPECT_NE(refused.out.find("collapsed=false"), std::string::npos);
}

TEST(Cli, CrlfFileMatchesLf) {
  const auto lf = invoke({"poset", data_path("rank3.gcm"), "--format", "structured"});
  const auto crlf = invoke({"poset", write_temp("rank3_crlf.gcm", "# crlf\r\n3\r\n2 -1 -2\r\n-1 2 -2\r\n-2 -2 2\r\n"),
                            "--format", "structured"});
  EXPECT_EQ(lf.status, 0);
  EXPECT_EQ(lf.out, crlf.out);
}

TEST(Cli, GoldenReports) {
  const auto cases = golden_cases();
  ASSERT_GE(cases.size(), 15U);
  for (const auto& c : cases) {
    const auto r = invoke(c.args);
    EXPECT_EQ(r.status, 0) << c.name << ": " << r.err;
    EXPECT_EQ(r.out, slurp(kGolden + "/" + c.name + ".out")) << c.name;
  }
}

TEST(Cli, StructuredOutputIsDeterministic) {
  for (const auto& c : golden_cases()) {
    const auto first = invoke(c.args);
    const auto second = invoke(c.args);
    EXPECT_EQ(first.out, second.out) << c.name;
  }
}

}  // namespace
}  // namespace kmss::cli
