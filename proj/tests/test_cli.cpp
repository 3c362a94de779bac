#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "symq/cli.hpp"
#include "symq/forms.hpp"
#include "symq/sos.hpp"

namespace symq {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("symq_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  std::filesystem::path path_;
};

TEST(Cli, FormRoundTripsForEveryId) {
  for (const std::string id : {"L:4", "L:5", "L:9", "C:4", "C:8", "cl44", "robinson", "lax5", "lift:L:5:1",
                               "lift:robinson:2"}) {
    const Result r = run({"form", id});
    ASSERT_EQ(r.code, cli::kPositive) << id;
    EXPECT_EQ(parse_polynomial(r.out), build_form(FormId::parse(id))) << id;
  }
}

TEST(Cli, FormRejectsBadIds) {
  EXPECT_EQ(run({"form", "L:x"}).code, cli::kInputError);
  EXPECT_EQ(run({"form", "bogus"}).code, cli::kInputError);
  EXPECT_EQ(run({"form", "L:3"}).code, cli::kPrecondition);
  EXPECT_EQ(run({"form", "C:5"}).code, cli::kPrecondition);
}

TEST(Cli, Eval) {
  EXPECT_EQ(run({"eval", "L:5", "1,0,0,0,0"}).out, "8/1\n");
  EXPECT_EQ(run({"eval", "lax5", "1,0,0,0,0"}).out, "1/1\n");
  EXPECT_EQ(run({"eval", "L:4", "1/2,1/2,0,0"}).out, "0/1\n");
  EXPECT_EQ(run({"eval", "L:5", "1,0"}).code, cli::kInputError);
  EXPECT_EQ(run({"eval", "L:5", "1,a,0,0,0"}).code, cli::kInputError);
}

TEST(Cli, PsdStatuses) {
  const Result ok = run({"psd", "L:6"});
  EXPECT_EQ(ok.code, cli::kPositive);
  EXPECT_TRUE(ok.out.ends_with("verdict psd\n"));

  TempDir dir;
  const std::string neg = dir.write("neg.poly", to_text(-make_L(5)));
  const Result bad = run({"psd", neg});
  EXPECT_EQ(bad.code, cli::kNegative);
  EXPECT_NE(bad.out.find("verdict not_psd"), std::string::npos);

  EXPECT_EQ(run({"psd", "robinson"}).code, cli::kPrecondition);
  EXPECT_EQ(run({"psd", "lift:L:5:1"}).code, cli::kPrecondition);
  EXPECT_EQ(run({"psd", dir.write("x.poly", "poly n=4 d=4\n1/1 4 0 0 0\n")}).code, cli::kPrecondition);
}

TEST(Cli, NotSos) {
  const Result c8 = run({"notsos", "C:8", "--weights", "4,5"});
  EXPECT_EQ(c8.code, cli::kPositive);
  EXPECT_NE(c8.out.find("kernel-dimension 0"), std::string::npos);
  EXPECT_EQ(run({"notsos", "L:7", "--seed", "5"}).code, cli::kPositive);
  EXPECT_EQ(run({"notsos", "L:6"}).code, cli::kNegative);
  EXPECT_EQ(run({"notsos", "robinson"}).code, cli::kPrecondition);
  EXPECT_EQ(run({"notsos", "L:5", "--weights", "9"}).code, cli::kPrecondition);
  EXPECT_EQ(run({"notsos", "L:9", "--seed", "3"}).out, run({"notsos", "L:9", "--seed", "3"}).out);
}

TEST(Cli, VerifySos) {
  TempDir dir;
  const Result summands = run({"sos-summands", "6"});
  ASSERT_EQ(summands.code, cli::kPositive);
  const std::string good = dir.write("good.sum", summands.out);
  const Result ok = run({"verify-sos", "L:6", good});
  EXPECT_EQ(ok.code, cli::kPositive);
  EXPECT_EQ(ok.out, "identity: true\n");

  auto pairs = Ln_even_sos_identity(4).summands;
  pairs[0].first += Polynomial::variable(4, 3);
  const Result corrupted = run({"verify-sos", "L:4", dir.write("bad.sum", summands_to_text(pairs))});
  EXPECT_EQ(corrupted.code, cli::kNegative);
  EXPECT_EQ(corrupted.out, "identity: false\n");

  const std::string x4 = dir.write("x4.poly", "poly n=1 d=4\n1/1 4\n");
  const std::string x1 = dir.write("x1.sum", "poly n=1 d=1\n1/1 1\npoly n=1 d=1\n1/1 1\n");
  EXPECT_EQ(run({"verify-sos", x4, x1}).code, cli::kPositive);

  EXPECT_EQ(run({"verify-sos", "L:4", dir.write("odd.sum", "poly n=1 d=1\n1/1 1\n")}).code, cli::kInputError);
}

TEST(Cli, Chart) {
  const Result r = run({"chart", "6", "8"});
  EXPECT_EQ(r.code, cli::kPositive);
  EXPECT_NE(r.out.find("4       Y  Y  N  N  N\n"), std::string::npos);
  EXPECT_NE(run({"chart", "4", "4", "--unicode"}).out.find("✓"), std::string::npos);
  EXPECT_EQ(run({"chart", "4", "5"}).code, cli::kPrecondition);
  EXPECT_EQ(run({"chart", "1", "4"}).code, cli::kInputError);
}

TEST(Cli, Lift) {
  const Result r = run({"lift", "L:5", "1"});
  EXPECT_EQ(r.code, cli::kPositive);
  EXPECT_EQ(parse_polynomial(r.out), lift(make_L(5), 1));
  EXPECT_EQ(run({"lift", "L:5", "0"}).code, cli::kPrecondition);
}

TEST(Cli, Sample) {
  const Result ok = run({"sample", "L:4", "--kernel", "scalar"});
  EXPECT_EQ(ok.code, cli::kPositive);
  EXPECT_NE(ok.out.find("points 625\n"), std::string::npos);
  TempDir dir;
  const Result neg = run({"sample", dir.write("neg.poly", "poly n=2 d=2\n1/1 2 0\n-2/1 0 2\n")});
  EXPECT_EQ(neg.code, cli::kNegative);
  EXPECT_NE(neg.out.find("minimum -8/1 at 0/1,-2/1"), std::string::npos);
  EXPECT_EQ(run({"sample", "L:4", "--kernel", "gpu"}).code, cli::kInputError);
}

TEST(Cli, InputErrors) {
  TempDir dir;
  EXPECT_EQ(run({"psd", dir.write("bad.poly", "poly n=2 d=2\n1/1 2\n")}).code, cli::kInputError);
  EXPECT_EQ(run({"psd", "/nonexistent/file"}).code, cli::kInputError);
  EXPECT_EQ(run({}).code, cli::kInputError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(run({"--help"}).code, cli::kPositive);
}

}  // namespace
}  // namespace symq
