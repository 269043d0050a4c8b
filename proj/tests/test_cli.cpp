#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qvenn/cli.hpp"
#include "qvenn/serialize.hpp"

namespace qvenn {
namespace {

struct CliRun {
  int code = 0;
  std::string out, err;
  Json json() const { return parse_json(out, "stdout"); }
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / ("qvenn_test_" + name);
  std::ofstream(p) << content;
  return p;
}

TEST(Cli, AnalyzeFullDepolarizing) {
  const CliRun r = run({"analyze-channel", "--channel", "depolarizing:0.75", "--input", "maximally-mixed:2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j.at("command"), "analyze-channel");
  EXPECT_DOUBLE_EQ(j.at("result").at("information_I").get<double>(), 0.0);
  EXPECT_DOUBLE_EQ(j.at("result").at("loss_L").get<double>(), 2.0);
  EXPECT_TRUE(j.at("tolerances").contains("identity"));
}

TEST(Cli, AnalyzeDiagonalInput) {
  const CliRun r = run({"analyze-channel", "--channel", "erasure:0.5", "--input", "diag:0.5,0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_DOUBLE_EQ(r.json().at("result").at("information_I").get<double>(), 1.0);
}

TEST(Cli, CodeCheckFiveQubit) {
  const CliRun r = run({"code-check", "builtin:five-qubit", "--erasures", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json res = r.json().at("result");
  EXPECT_TRUE(res.at("correctable").get<bool>());
  EXPECT_LE(res.at("worst_pattern_loss").get<double>(), 1e-7);
  EXPECT_EQ(res.at("patterns_checked").get<int>(), 10);
}

TEST(Cli, BoundsCsv) {
  const CliRun r = run({"bounds", "--model", "erasure", "--p-grid", "0:1:0.25"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "p,formula_id,r_max\n"
            "0,erasure_1_2p,1\n"
            "0.25,erasure_1_2p,0.5\n"
            "0.5,erasure_1_2p,0\n"
            "0.75,erasure_1_2p,0\n"
            "1,erasure_1_2p,0\n");
}

TEST(Cli, BoundsJson) {
  const CliRun r = run({"bounds", "--model", "depolarizing", "--p-grid", "0:0.5:0.25", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json().at("result").at("curves").size(), 3u);
}

TEST(Cli, VennTextRendering) {
  const CliRun r = run({"venn", "--builtin", "ghz", "--format", "text"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("S(X:Y:Z)"), std::string::npos);
}

TEST(Cli, VennFromStateFile) {
  const CliRun dump = run({"analyze-channel", "--channel", "identity", "--input", "maximally-mixed:2"});
  ASSERT_EQ(dump.code, 0);
  // A three-qubit product state written by hand.
  Json state = {{"layout", Json::array({{{"label", "A"}, {"dim", 2}}, {{"label", "B"}, {"dim", 2}}, {{"label", "C"}, {"dim", 2}}})}};
  Json m = Json::array();
  for (int i = 0; i < 8; ++i) {
    Json row = Json::array();
    for (int c = 0; c < 8; ++c) row.push_back({i == c ? 0.125 : 0.0, 0.0});
    m.push_back(row);
  }
  state["matrix"] = m;
  const auto path = temp_file("venn_state.json", state.dump());
  const CliRun r = run({"venn", "--state", path.string(), "--x", "A", "--y", "B", "--z", "C"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_DOUBLE_EQ(r.json().at("result").at("exclusive_x").get<double>(), 1.0);
}

TEST(Cli, BlockReportCapEnforced) {
  const CliRun r = run({"block-report", "--channel", "erasure:0.1", "--n", "7"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("n = 7"), std::string::npos);
}

TEST(Cli, BlockReportRuns) {
  const CliRun r = run({"block-report", "--channel", "erasure:0.5", "--n", "2", "--input", "product"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_DOUBLE_EQ(r.json().at("result").at("rate_bound").get<double>(), 0.5);
}

TEST(Cli, MixtureAndDual) {
  const CliRun r = run({"mixture", "--model", "erasure", "--n", "1", "--p", "0.3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json res = r.json().at("result");
  EXPECT_DOUBLE_EQ(res.at("mixture").at("convex_bound").get<double>(), 1.4);
  EXPECT_TRUE(res.at("dual").at("holds").get<bool>());
  EXPECT_EQ(run({"mixture", "--model", "depolarizing", "--p", "0.9"}).code, 2);
}

TEST(Cli, TeleportDemo) {
  const CliRun r = run({"teleport-demo"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json res = r.json().at("result");
  EXPECT_DOUBLE_EQ(res.at("center").get<double>(), -2.0);
  EXPECT_DOUBLE_EQ(res.at("c").get<double>(), 2.0);
}

TEST(Cli, SideCheck) {
  EXPECT_TRUE(run({"side-check", "builtin:five-qubit", "--erasures", "2"}).json().at("result").at("correctable").get<bool>());
  EXPECT_FALSE(run({"side-check", "builtin:five-qubit", "--erasures", "3"}).json().at("result").at("correctable").get<bool>());
}

TEST(Cli, ClassicalReport) {
  const CliRun r = run({"classical-report", "--channel", "bsc:0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_DOUBLE_EQ(r.json().at("result").at("I").get<double>(), 0.0);
  EXPECT_TRUE(r.json().at("result").at("quantum_embedding").at("consistent").get<bool>());
}

TEST(Cli, PropertySuiteSeedFromEnvironment) {
  ::setenv("QVENN_SEED", "424242", 1);
  const CliRun r = run({"property-suite", "--only", "chain_rule"});
  ::unsetenv("QVENN_SEED");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json().at("result").at("seed").get<std::uint64_t>(), 424242u);
  const CliRun flag = run({"property-suite", "--only", "chain_rule", "--seed", "7"});
  EXPECT_EQ(flag.json().at("result").at("seed").get<std::uint64_t>(), 7u);
  ::setenv("QVENN_SEED", "abc", 1);
  EXPECT_EQ(run({"property-suite", "--only", "chain_rule"}).code, 2);
  ::unsetenv("QVENN_SEED");
}

TEST(Cli, ValidationFailuresExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"analyze-channel", "--channel", "depolarizing:abc"}).code, 2);
  EXPECT_EQ(run({"analyze-channel", "--channel", "depolarizing:1.5"}).code, 2);
  EXPECT_EQ(run({"analyze-channel", "--channel", "erasure:0.1", "--input", "maximally-mixed:3"}).code, 2);
  EXPECT_EQ(run({"code-check", "builtin:seven-qubit", "--erasures", "1"}).code, 2);
  EXPECT_EQ(run({"bounds", "--model", "magic"}).code, 2);
  const auto bad = temp_file("bad.json", "{ not json");
  const CliRun r = run({"analyze-channel", "--channel", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "qvenn_test_out.csv";
  std::filesystem::remove(path);
  const CliRun r = run({"bounds", "--model", "erasure", "--p-grid", "0:1:0.5", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  EXPECT_EQ(header, "p,formula_id,r_max");
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"analyze-channel", "--channel", "depolarizing:0.3", "--input", "diag:0.2,0.8"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, RerunOnSerializedInputsIsIdentical) {
  const CliRun first = run({"analyze-channel", "--channel", "depolarizing:0.3", "--input", "diag:0.2,0.8"});
  ASSERT_EQ(first.code, 0);
  const Json j = first.json();
  const auto ch = temp_file("rerun_channel.json", j.at("inputs").at("channel").dump());
  const auto in = temp_file("rerun_input.json", j.at("inputs").at("input").dump());
  const CliRun second = run({"analyze-channel", "--channel", ch.string(), "--input", in.string()});
  ASSERT_EQ(second.code, 0) << second.err;
  EXPECT_EQ(second.out, first.out);
}

}  // namespace
}  // namespace qvenn
