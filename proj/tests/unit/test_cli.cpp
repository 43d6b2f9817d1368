#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "test_support.hpp"

using namespace crnt::testing;

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  std::string cmd = std::string(CRNT_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string d(const std::string& name) { return data_path(name); }

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("analyze " + d("futile_cycle.crn")).status, 0);
  EXPECT_EQ(run_cli("").status, 1);
  EXPECT_EQ(run_cli("frobnicate " + d("futile_cycle.crn")).status, 1);
  EXPECT_EQ(run_cli("analyze /nonexistent/file.crn").status, 2);
  EXPECT_EQ(run_cli("analyze " + d("futile_cycle.rates")).status, 2);
  EXPECT_EQ(run_cli("translate --search " + d("network38.crn")).status, 4);
  EXPECT_EQ(run_cli("steady-states --search --solve " + d("futile_cycle.crn")).status, 1);
  EXPECT_EQ(run_cli("steady-states " + d("improper_unresolvable.crn") + " --translation " +
                 d("improper_unresolvable.translation"))
                .status,
            5);
  EXPECT_EQ(run_cli("--sign-dim-cap 3 steady-states --search " + d("futile_cycle.crn")).status, 3);
  EXPECT_EQ(run_cli("--max-candidates 0 translate --search " + d("futile_cycle.crn")).status, 4);
  EXPECT_EQ(run_cli("--max-candidates 10 translate --search " + d("futile_cycle.crn")).status, 0);
}

TEST(Cli, JsonIsByteIdenticalAcrossRuns) {
  for (const std::string& args :
       {"steady-states --search " + d("futile_cycle.crn") + " --rates " + d("futile_cycle.rates") + " --x0 " +
            d("futile_cycle.x0") + " --solve",
        "translate --search " + d("shinar_feinberg.crn"), "generators " + d("mfc2.crn")}) {
    CliRun a = run_cli("--json " + args), b = run_cli("--json " + args);
    ASSERT_EQ(a.status, 0) << args;
    EXPECT_EQ(a.out, b.out);
    auto j = nlohmann::ordered_json::parse(a.out);
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j.dump(2) + "\n", a.out);
  }
}

TEST(Cli, TextAndJsonAgree) {
  std::string args = "tree-constants " + d("shinar_feinberg.crn") + " --translation " +
                     d("shinar_feinberg.translation") + " --rates " + d("shinar_feinberg.rates");
  CliRun text = run_cli(args), json = run_cli("--json " + args);
  ASSERT_EQ(text.status, 0);
  auto j = nlohmann::ordered_json::parse(json.out);
  for (const auto& tc : j["tree_constants"]) {
    EXPECT_NE(text.out.find(tc["symbolic"].get<std::string>()), std::string::npos);
    EXPECT_NE(text.out.find(tc["value"].get<std::string>()), std::string::npos);
  }
}

TEST(Cli, FoundTranslationRoundTripsThroughFile) {
  CliRun a = run_cli("--json translate --search " + d("futile_cycle.crn"));
  ASSERT_EQ(a.status, 0);
  auto j = nlohmann::ordered_json::parse(a.out);
  std::string file = ::testing::TempDir() + "futile_found.translation";
  {
    FILE* f = std::fopen(file.c_str(), "w");
    ASSERT_TRUE(f);
    std::string body = j["translations"]["candidates"][0]["translation_file"].get<std::string>();
    std::fwrite(body.data(), 1, body.size(), f);
    std::fclose(f);
  }
  CliRun b = run_cli("--json translate " + d("futile_cycle.crn") + " --translation " + file);
  ASSERT_EQ(b.status, 0);
  auto k = nlohmann::ordered_json::parse(b.out);
  EXPECT_EQ(k["translations"]["candidates"][0]["shifts"], j["translations"]["candidates"][0]["shifts"]);
}
