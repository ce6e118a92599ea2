#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "effdom/effdom.hpp"
#include "generators.hpp"
#include "json.hpp"

namespace effdom {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("effdom-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "effdom");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return cli::run(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

const char* kP4 = "p ed 4 3\ne 1 2\ne 2 3\ne 3 4\n";
const char* kC4 = "p ed 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n";

TEST_F(Cli, SolveP4Json) {
  const auto in = file("p4.ed", kP4);
  EXPECT_EQ(run({"solve", "--class", "p5", "--input", in, "--json"}), cli::kSolved);
  const auto j = nlohmann::json::parse(out_.str());
  EXPECT_EQ(j["status"], "solved");
  EXPECT_EQ(j["vertices"], nlohmann::json::array({1, 4}));
  EXPECT_EQ(j["weight"], 2);
  EXPECT_EQ(j["class"], "p5");
}

TEST_F(Cli, OracleOnC4) {
  const auto in = file("c4.ed", kC4);
  EXPECT_EQ(run({"oracle", "--input", in}), cli::kNoEd);
  EXPECT_NE(out_.str().find("no_ed"), std::string::npos);
  EXPECT_EQ(run({"oracle", "--input", in, "--method", "brute", "--json"}), cli::kNoEd);
}

TEST_F(Cli, NotInClassCarriesWitness) {
  const auto in = file("p5.ed", "p ed 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n");
  EXPECT_EQ(run({"solve", "--class", "p5", "--input", in, "--json"}), cli::kNotInClass);
  const auto j = nlohmann::json::parse(out_.str());
  EXPECT_EQ(j["status"], "not_in_class");
  EXPECT_EQ(j["witness"]["pattern"], "P5");
  EXPECT_EQ(j["witness"]["vertices"].size(), 5u);
}

TEST_F(Cli, GenerateWritesGraphAndRoles) {
  const auto cnf = file("one.cnf", "p cnf 3 1\n1 2 3 0\n");
  const auto out = path("g.ed");
  ASSERT_EQ(run({"generate", "--cnf", cnf, "--girth", "3", "--out", out}), cli::kSolved);
  std::ifstream in(out);
  const auto g = parse_graph(in);
  EXPECT_EQ(static_cast<std::uint64_t>(g.order()), reduction_order(3, 1, 3));
  std::ifstream roles(out + ".roles");
  int lines = 0;
  for (std::string l; std::getline(roles, l);) ++lines;
  EXPECT_EQ(lines, g.order());
}

TEST_F(Cli, SolveOutputRoundTripsThroughCheck) {
  testing::Rng rng(173);
  for (int t = 0; t < 10; ++t) {
    const auto g = testing::with_random_weights(testing::planted_ed(12, 3, 0.3, rng), rng);
    const auto in = file("g.ed", render_graph(g));
    ASSERT_EQ(run({"solve", "--input", in, "--json"}), cli::kSolved);
    const auto sol = file("sol.json", out_.str());
    EXPECT_EQ(run({"check", "--input", in, "--ed", sol}), cli::kSolved);
  }
}

TEST_F(Cli, CheckPlainIds) {
  const auto in = file("p4.ed", kP4);
  EXPECT_EQ(run({"check", "--input", in, "--ed", file("good", "1 4\n")}), cli::kSolved);
  EXPECT_EQ(run({"check", "--input", in, "--ed", file("bad", "1 3")}), cli::kNoEd);
  EXPECT_EQ(run({"check", "--input", in, "--ed", file("range", "1 7")}), cli::kError);
  EXPECT_EQ(run({"check", "--input", in, "--ed", file("junk", "1 x")}), cli::kError);
}

TEST_F(Cli, AutoNeverReportsNotInClass) {
  const auto in = file("p7.ed", "p ed 7 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 7\n");
  EXPECT_EQ(run({"solve", "--input", in, "--class", "auto"}), cli::kSolved);
}

TEST_F(Cli, BoundedClassUsesK) {
  const auto in = file("star.ed", "p ed 4 3\ne 1 2\ne 1 3\ne 1 4\n");
  EXPECT_EQ(run({"solve", "--input", in, "--class", "2bwed", "--k", "2"}), cli::kNoEd);
  EXPECT_EQ(run({"solve", "--input", in, "--class", "brute"}), cli::kSolved);
  EXPECT_EQ(run({"solve", "--input", in, "--class", "2bwed", "--k", "5"}), cli::kError);
}

TEST_F(Cli, ParallelFlag) {
  const auto in = file("p4.ed", kP4);
  EXPECT_EQ(run({"solve", "--input", in, "--class", "p2p4", "--parallel"}), cli::kSolved);
}

TEST_F(Cli, Recognize) {
  const auto in = file("p5.ed", "p ed 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n");
  EXPECT_EQ(run({"recognize", "--input", in, "--json"}), cli::kSolved);
  const auto j = nlohmann::json::parse(out_.str());
  EXPECT_FALSE(j["p5"]["member"].get<bool>());
  EXPECT_TRUE(j["p6s122"]["member"].get<bool>());
  EXPECT_FALSE(j["2p2"]["member"].get<bool>());
}

TEST_F(Cli, Errors) {
  EXPECT_EQ(run({}), cli::kError);
  EXPECT_EQ(run({"solve"}), cli::kError);
  EXPECT_EQ(run({"solve", "--input", path("missing.ed")}), cli::kError);
  EXPECT_NE(err_.str().find("cannot open"), std::string::npos);
  EXPECT_EQ(run({"solve", "--input", file("bad.ed", "p ed 2 1\ne 1 3\n")}), cli::kError);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos);
  EXPECT_EQ(run({"solve", "--input", file("ok.ed", kP4), "--class", "nope"}), cli::kError);
  EXPECT_EQ(run({"frobnicate"}), cli::kError);
  EXPECT_EQ(run({"solve", "--input", file("ok2.ed", kP4), "--bogus"}), cli::kError);
  EXPECT_EQ(run({"generate", "--cnf", file("neg.cnf", "p cnf 3 1\n1 -2 3 0\n"), "--out",
                 path("x.ed")}),
            cli::kError);
  EXPECT_EQ(run({"--help"}), 0);
}

}  // namespace
}  // namespace effdom
