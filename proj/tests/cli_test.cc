// Copyright 2026 The extractorlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "extractorlab/io.h"

namespace extractorlab {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "extractorlab");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

TEST(CliTest, Rate) {
  EXPECT_EQ(run({"rate", "--n", "3", "--d", "2", "--alpha", "17/7"}).out, "21/44\n");
  EXPECT_EQ(run({"rate", "--n", "4", "--d", "3", "--alpha", "5/2"}).out, "4/9\n");
  EXPECT_EQ(run({"rate", "--n", "3", "--d", "2", "--alpha", "99/41"}).out, "123/260\n");
  EXPECT_EQ(run({"rate", "--n", "3", "--d", "2", "--alpha", "2"}).out, "3/8\n");
  EXPECT_EQ(run({"rate", "--n", "3", "--d", "2", "--alpha", "3"}).code, cli::kExitBadInput);
  const Result json =
      run({"rate", "--n", "4", "--d", "3", "--alpha", "5/2", "--format", "json"});
  EXPECT_EQ(json.code, 0);
  EXPECT_NE(json.out.find("8/3"), std::string::npos);
}

TEST(CliTest, Extract) {
  const Result r = run({"extract", "--p", "7", "--x", "1,2", "--y", "3,4", "--verbose"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\nf = 3\nsigma = 3/7\n");
  EXPECT_TRUE(r.err.empty());
  const Result w = run({"extract", "--p", "13", "--x", "1,5", "--y", "2,10"});
  EXPECT_EQ(w.out, "1\n");
  EXPECT_NE(w.err.find("warning: -1 is a square mod 13"), std::string::npos);
  EXPECT_EQ(run({"extract", "--p", "9", "--x", "1,2", "--y", "3,4"}).code,
            cli::kExitBadInput);
  EXPECT_EQ(run({"extract", "--p", "7", "--x", "1", "--y", "3,4"}).code,
            cli::kExitBadInput);
  EXPECT_EQ(run({"extract", "--p", "7"}).code, cli::kExitBadInput);
  EXPECT_EQ(run({"nonsense"}).code, cli::kExitBadInput);
}

TEST(CliTest, FixtureAndBias) {
  const std::string path = temp_path("extractorlab_cli_line.json");
  ASSERT_EQ(run({"fixture", "--kind", "line", "--p", "13", "--out", path}).code, 0);
  const Result r = run({"bias", "--fixture", path});
  EXPECT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(validate_report(j, ReportKind::kEnvelope).empty());
  EXPECT_EQ(j["reports"][0]["sd"], 0.5);
  EXPECT_TRUE(validate_report(j["reports"][0], ReportKind::kBias).empty());
  std::filesystem::remove(path);

  const Result point = run({"bias", "--source", "point", "--p", "11"});
  EXPECT_EQ(Json::parse(point.out)["reports"][0]["sd"], 0.5);
}

TEST(CliTest, BiasCsvDecreases) {
  const Result r = run({"bias", "--source", "uniform", "--p", "7,11,19,23",
                        "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("# extractorlab 0.1.0 config_hash=", 0), 0u);
  std::getline(in, line);
  EXPECT_EQ(line, std::string(kMeasurementCsvHeader));
  double previous = 1.0;
  int sd_rows = 0;
  while (std::getline(in, line)) {
    if (line.find(",sd,") == std::string::npos) continue;
    const auto first = line.find(",sd,") + 4;
    const double sd = std::stod(line.substr(first, line.find(',', first) - first));
    EXPECT_LT(sd, previous);
    previous = sd;
    ++sd_rows;
  }
  EXPECT_EQ(sd_rows, 4);
}

TEST(CliTest, CapViolationExitsThree) {
  const Result r = run({"bias", "--source", "uniform", "--p", "31", "--cap-pairs", "1000"});
  EXPECT_EQ(r.code, cli::kExitCap);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(CliTest, EnergyReportsBothMethods) {
  const Result r = run({"energy", "--p", "7", "--paraboloid", "--d", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("18865"), std::string::npos);
  EXPECT_TRUE(validate_report(Json::parse(r.out), ReportKind::kEnvelope).empty());
}

TEST(CliTest, ScanAndInadmissibleField) {
  const Result ok = run({"scan", "--p", "7", "--d", "4", "--sizes", "5,10",
                         "--trials", "3", "--format", "csv"});
  ASSERT_EQ(ok.code, 0) << ok.err;
  EXPECT_NE(ok.out.find(std::string(kScanCsvHeader)), std::string::npos);
  EXPECT_EQ(run({"scan", "--p", "13", "--d", "3", "--sizes", "5"}).code,
            cli::kExitBadInput);
  const Result allowed = run({"scan", "--p", "13", "--d", "3", "--sizes", "5",
                              "--allow-inadmissible"});
  EXPECT_EQ(allowed.code, 0);
  EXPECT_FALSE(allowed.err.empty());
}

TEST(CliTest, FourierAndCheckLemma) {
  const Result f = run({"fourier", "--p", "101"});
  ASSERT_EQ(f.code, 0) << f.err;
  const Json j = Json::parse(f.out);
  EXPECT_NEAR(j["reports"][0]["ratio_to_log_p"].get<double>(), 0.8451792456277559, 1e-9);
  const Result lemma = run({"checklemma", "--trials", "200", "--p", "11", "--nmax",
                            "2", "--seed", "1", "--form", "both"});
  EXPECT_EQ(lemma.code, 0) << lemma.err;
}

TEST(CliTest, ConfigFileAndExplicitOverride) {
  const std::string path = temp_path("extractorlab_cli_config.json");
  {
    std::ofstream cfg(path);
    cfg << R"({"n": 4, "d": 3, "alpha": "5/2"})";
  }
  EXPECT_EQ(run({"rate", "--config", path}).out, "4/9\n");
  EXPECT_EQ(run({"rate", "--config", path, "--alpha", "2"}).out,
            run({"rate", "--n", "4", "--d", "3", "--alpha", "2"}).out);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"rate", "--config", path}).code, cli::kExitBadInput);
}

TEST(CliTest, SeedFromEnvironment) {
  const std::vector<std::string> args = {"fixture", "--kind", "random-flat", "--p",
                                         "11", "--size", "5"};
  ::setenv("EXTRACTORLAB_SEED", "77", 1);
  const Result env = run(args);
  ::unsetenv("EXTRACTORLAB_SEED");
  std::vector<std::string> explicit_args = args;
  explicit_args.insert(explicit_args.end(), {"--seed", "77"});
  EXPECT_EQ(env.out, run(explicit_args).out);
  EXPECT_NE(env.out, run(args).out);
  EXPECT_EQ(Json::parse(env.out)["seed"], 77);
}

TEST(CliTest, OutputIsThreadIndependent) {
  auto strip = [](std::string s) {
    Json j = Json::parse(s);
    for (auto& r : j["reports"]) r.erase("wall_time_ms");
    return j.dump();
  };
  const std::vector<std::string> base = {"bias", "--source", "uniform", "--p", "7,11"};
  std::string reference;
  for (const char* t : {"1", "2", "8"}) {
    auto args = base;
    args.insert(args.end(), {"--threads", t});
    const std::string s = strip(run(args).out);
    if (reference.empty()) reference = s;
    EXPECT_EQ(s, reference) << t;
  }
}

}  // namespace
}  // namespace extractorlab
