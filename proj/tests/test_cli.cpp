#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
};

// Runs the CLI inside `dir`; stderr is merged into the captured output.
Outcome run(const fs::path& dir, const std::string& args) {
  const std::string cmd = "cd '" + dir.string() + "' && '" HOPFKIT_CLI "' " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string corpus(const std::string& f) { return std::string(HOPFKIT_CORPUS_DIR) + "/" + f; }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hopfkit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, TaftPipelineThroughFiles) {
  ASSERT_EQ(run(dir_, "build --preset taft --n 3 -o t.hopf").code, 0);
  ASSERT_EQ(run(dir_, "double t.hopf -o d.hopf --rmat d.rmat").code, 0);
  Outcome q = run(dir_, "quotient d.rmat --by 'chi*g' -o k.hopf --rmat k.rmat");
  ASSERT_EQ(q.code, 0) << q.out;

  Outcome v = run(dir_, "--json verify k.rmat --all");
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_NE(v.out.find("\"ok\": true"), std::string::npos) << v.out;

  Outcome r = run(dir_, "ribbon k.rmat");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("g^-2 u"), std::string::npos) << r.out;
}

TEST_F(Cli, SavedFilesRoundTrip) {
  ASSERT_EQ(run(dir_, "build --preset taft --n 4 -o a.hopf").code, 0);
  ASSERT_EQ(run(dir_, "build --halg '" + corpus("taft.halg") + "' --set n=4 -o b.hopf").code, 0);
  // Same structure; only metadata may differ, so compare dimensions and certification.
  Outcome a = run(dir_, "verify a.hopf");
  Outcome b = run(dir_, "verify b.hopf");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(b.code, 0);
  const std::string first = slurp(dir_ / "a.hopf");
  ASSERT_EQ(run(dir_, "build --preset taft --n 4 -o c.hopf").code, 0);
  EXPECT_EQ(slurp(dir_ / "c.hopf"), first);
}

TEST_F(Cli, FailedCheckExitsOne) {
  ASSERT_EQ(run(dir_, "build --preset taft --n 3 -o t.hopf").code, 0);
  std::string text = slurp(dir_ / "t.hopf");
  const std::string from = "[1, 1, 2, \"1\"]";
  auto pos = text.find(from);
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, from.size(), "[1, 1, 2, \"2\"]");
  std::ofstream(dir_ / "bad.hopf") << text;
  Outcome v = run(dir_, "verify bad.hopf --axioms");
  EXPECT_EQ(v.code, 1) << v.out;
  EXPECT_NE(v.out.find("FAIL"), std::string::npos) << v.out;
}

TEST_F(Cli, UncertifiedInputToBuildStepExitsThree) {
  ASSERT_EQ(run(dir_, "build --preset taft --n 3 -o t.hopf").code, 0);
  std::string text = slurp(dir_ / "t.hopf");
  const std::string from = "[1, 1, 2, \"1\"]";
  text.replace(text.find(from), from.size(), "[1, 1, 2, \"2\"]");
  std::ofstream(dir_ / "bad.hopf") << text;
  EXPECT_EQ(run(dir_, "double bad.hopf -o d.hopf").code, 3);
}

TEST_F(Cli, BadParametersExitTwo) {
  EXPECT_EQ(run(dir_, "build --preset A_l --p 5 --q 3 -o x.hopf").code, 2);
  EXPECT_EQ(run(dir_, "build --preset taft --n 3 --bogus -o x.hopf").code, 2);
  ASSERT_EQ(run(dir_, "build --preset taft --n 3 -o t.hopf").code, 0);
  EXPECT_EQ(run(dir_, "verify t.hopf --quasitriangular").code, 2);
}

TEST_F(Cli, ParseErrorExitsFour) {
  std::ofstream(dir_ / "broken.hopf") << "{\"dim\": ";
  EXPECT_EQ(run(dir_, "verify broken.hopf").code, 4);
}

TEST_F(Cli, MissingGroupLikesExitFive) {
  ASSERT_EQ(run(dir_, "build --preset taft --n 3 -o t.hopf").code, 0);
  std::string text = slurp(dir_ / "t.hopf");
  // Without metadata and with enumeration disabled there are no group-likes to search.
  auto a = text.find("\"grouplikes\"");
  ASSERT_NE(a, std::string::npos);
  auto b = text.find("\"characters\"", a);
  ASSERT_NE(b, std::string::npos);
  text.replace(a, b - a, "\"grouplikes\": [],\n  ");
  std::ofstream(dir_ / "t2.hopf") << text;
  ASSERT_EQ(run(dir_, "double t2.hopf -o d.hopf --rmat d.rmat").code, 0);
  EXPECT_EQ(run(dir_, "--enumerate-limit 0 ribbon d.rmat").code, 5);
}

TEST_F(Cli, AnalyzeCorpusData) {
  EXPECT_EQ(run(dir_, "analyze '" + corpus("h_omega_5.datum") + "'").code, 0);
  EXPECT_EQ(run(dir_, "analyze '" + corpus("h_omega_21.datum") + "'").code, 1);
  EXPECT_EQ(run(dir_, "analyze '" + corpus("k_alpha_5.datum") + "'").code, 0);
  EXPECT_EQ(run(dir_, "analyze '" + corpus("taft_rank1.datum") + "'").code, 0);
  Outcome k7 = run(dir_, "analyze '" + corpus("k_alpha_7.datum") + "'");
  EXPECT_EQ(k7.code, 1) << k7.out;
}

TEST_F(Cli, ReportListsDigests) {
  ASSERT_EQ(run(dir_, "build --preset group --m 7 --n 3 -o g.hopf").code, 0);
  Outcome r = run(dir_, "--json report g.hopf");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("\"digest\""), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"tool\""), std::string::npos) << r.out;
}
