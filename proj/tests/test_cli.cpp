#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

// Runs the CLI with the given argument string; stderr is discarded.
Result rotor_cli(const std::string& args) {
  const std::string cmd = std::string("'") + ROTOR_CLI_PATH + "' " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& stem) {
  return std::string("'") + ROTOR_FIXTURE_DIR + "/" + stem + ".rot'";
}

}  // namespace

TEST(Cli, SelftestPasses) {
  const Result r = rotor_cli("selftest");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("selftest passed"), std::string::npos);
  EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos) << r.out;
}

TEST(Cli, RunSpinorFixtureJson) {
  const Result r = rotor_cli("run " + fixture("sigma_y_quarter_turn") + " --format json");
  ASSERT_EQ(r.code, 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  const auto& b = j["emits"].back()["bloch"];
  EXPECT_NEAR(b[0].get<double>(), 1.0, 1e-10);
  EXPECT_NEAR(b[1].get<double>(), 0.0, 1e-10);
  EXPECT_NEAR(b[2].get<double>(), 0.0, 1e-10);
}

TEST(Cli, RunTextDefault) {
  const Result r = rotor_cli("run " + fixture("stern_gerlach"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("final:"), std::string::npos);
}

TEST(Cli, EvalConventionFlag) {
  const Result left = rotor_cli("eval 'rot z 90deg; audit' --convention left --format json");
  ASSERT_EQ(left.code, 0);
  const nlohmann::json j = nlohmann::json::parse(left.out);
  EXPECT_EQ(j["convention"], "left");
  EXPECT_EQ(j["steps"][1]["audit"]["handedness"], "LeftScrew");

  const Result right = rotor_cli("eval 'rot z 90deg; audit' --format json");
  EXPECT_EQ(nlohmann::json::parse(right.out)["steps"][1]["audit"]["handedness"], "RightScrew");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(rotor_cli("eval 'rot z'").code, 2);
  EXPECT_EQ(rotor_cli("eval ''").code, 2);
  EXPECT_EQ(rotor_cli("eval 'rot z 90\xC2\xB0'").code, 2);
  EXPECT_EQ(rotor_cli("eval 'state up; collapse +'").code, 3);
  EXPECT_EQ(rotor_cli("eval 'measure z; collapse -'").code, 3);
  EXPECT_NE(rotor_cli("run /nonexistent/file.rot").code, 0);
  EXPECT_NE(rotor_cli("eval 'state up' --format yaml").code, 0);
}

TEST(Cli, AuditMatrix) {
  const Result r = rotor_cli(
      "audit --matrix '0.7071067811865476+0.7071067811865476i,0,0,0.7071067811865476-0.7071067811865476i'"
      " --format json");
  ASSERT_EQ(r.code, 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["audit"]["handedness"], "RightScrew");
  EXPECT_NEAR(j["audit"]["angle_deg"].get<double>(), 90.0, 1e-9);
  EXPECT_EQ(j["audit"]["axis"], nlohmann::json::parse("[0.0, 0.0, 1.0]"));
}

TEST(Cli, AuditReferenceFlipsReportedSense) {
  const std::string m = "--matrix '0.7071067811865476+0.7071067811865476i,0,0,0.7071067811865476-0.7071067811865476i'";
  const Result r = rotor_cli("audit " + m + " --reference 0,0,-1 --format json");
  ASSERT_EQ(r.code, 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["audit"]["handedness"], "LeftScrew");
  EXPECT_EQ(j["audit"]["axis"], nlohmann::json::parse("[0.0, 0.0, -1.0]"));
}

TEST(Cli, AuditIdentityAndErrors) {
  const Result id = rotor_cli("audit --matrix '1,0,0,1' --format json");
  ASSERT_EQ(id.code, 0);
  const nlohmann::json j = nlohmann::json::parse(id.out);
  EXPECT_EQ(j["audit"]["handedness"], "Identity");
  EXPECT_EQ(j["audit"]["ambiguous_axis"], true);

  EXPECT_EQ(rotor_cli("audit --matrix '0,1,1,0'").code, 3);      // det -1
  EXPECT_EQ(rotor_cli("audit --matrix '1,0,0'").code, 2);        // three entries
  EXPECT_EQ(rotor_cli("audit --matrix '1,0,0,1x'").code, 2);     // bad literal
}
