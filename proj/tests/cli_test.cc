// Copyright 2026 The Rotakit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "rotakit/cli.h"

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <sstream>

#include "rotakit/io.h"

namespace rotakit {
namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "rotakit");
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(ROTAKIT_FIXTURES) + "/" + name;
}

// Restores ROTAKIT_CAPS on scope exit.
class CapsEnv {
 public:
  explicit CapsEnv(const char* value) { setenv("ROTAKIT_CAPS", value, 1); }
  ~CapsEnv() { unsetenv("ROTAKIT_CAPS"); }
};

TEST(Solve, MssAtRPrimeGivesXY) {
  const CliRun r = run({"solve", "--concept", "mss", fixture("three_alternatives.json"),
                     "--profile", "R'"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  ASSERT_EQ(j["reports"].size(), 1u);
  EXPECT_EQ(j["reports"][0]["profile"], "R'");
  EXPECT_EQ(j["reports"][0]["outcome_sets"], Json::parse(R"([["x","y"]])"));
}

TEST(Solve, CoreOfEmptyGammaIsEverything) {
  const CliRun r = run({"solve", "--concept", "core", fixture("empty_gamma.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["reports"][0]["state_sets"],
            Json::parse(R"([["s1","s2","s3","s4"]])"));
}

TEST(Solve, AbsorbingHousingIsMu) {
  const CliRun r = run({"--format", "text", "solve", "--concept", "absorbing",
                     fixture("housing.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "R: absorbing {(h2,h3,h1)}\n");
}

TEST(Solve, JobsFlagGivesSameReports) {
  const CliRun serial =
      run({"solve", "--concept", "mss", fixture("three_alternatives.json")});
  const CliRun parallel = run({"--jobs", "4", "solve", "--concept", "mss",
                            fixture("three_alternatives.json")});
  ASSERT_EQ(serial.code, kExitOk);
  EXPECT_EQ(serial.out, parallel.out);
}

TEST(Solve, GssCapTruncates) {
  const CliRun r = run({"--gss-cap", "1", "solve", "--concept", "gss",
                     fixture("three_alternatives.json")});
  EXPECT_EQ(r.code, kExitTruncated);
  EXPECT_TRUE(r.json()["reports"][0].contains("truncated"));
}

TEST(Solve, RotationFailureIsExitTwo) {
  // The hand-written structure has no rotation-program partition at R.
  const CliRun r = run({"solve", "--concept", "rotation", fixture("three_alternatives.json"),
                     "--profile", "R"});
  EXPECT_EQ(r.code, kExitSolveFailure) << r.out;
}

TEST(Check, ThreeAlternativeRuleVerdicts) {
  const CliRun r = run({"--format", "text", "check", "--condition", "all",
                     fixture("three_alternatives.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("efficiency: ok"), std::string::npos);
  EXPECT_NE(r.out.find("indirect: ok"), std::string::npos);
  EXPECT_NE(r.out.find("rotation-monotonicity: violated"), std::string::npos);
}

TEST(Check, ConstantRuleIsMaskinMonotonic) {
  const CliRun r =
      run({"check", "--condition", "maskin", fixture("constant_scr.json")});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.json()["verdicts"][0]["ok"].get<bool>()) << r.out;
}

TEST(Check, CapsFromEnvironmentTruncate) {
  CapsEnv caps("order=1");
  const CliRun r = run({"check", "--condition", "rotation-monotonicity",
                     fixture("jobrot_common_best.json")});
  EXPECT_EQ(r.code, kExitTruncated);
  EXPECT_EQ(r.json()["verdicts"][0]["status"], "truncated");
}

TEST(Check, BadCapsAreInputErrors) {
  {
    CapsEnv caps("order=0");
    EXPECT_EQ(run({"check", fixture("three_alternatives.json")}).code, kExitInputError);
  }
  {
    CapsEnv caps("depth=3");
    EXPECT_EQ(run({"check", fixture("three_alternatives.json")}).code, kExitInputError);
  }
}

TEST(Construct, FullStructurePassesOnThreeAlternatives) {
  const CliRun r = run({"construct", "--theorem", "1", fixture("three_alternatives.json"),
                     "--verify", "mss"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  EXPECT_TRUE(j["verification"]["ok"].get<bool>());
  // The emitted structure re-parses to the same document.
  const Document doc = parse_document(j["document"]);
  EXPECT_EQ(to_json(doc), j["document"]);
  EXPECT_EQ(doc.rights->num_states(), 8);
}

TEST(Construct, ConsecutiveStructureOnCommonBestJobPasses) {
  const CliRun r = run({"construct", "--theorem", "4",
                     fixture("jobrot_common_best.json"), "--verify",
                     "rotation"});
  ASSERT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_TRUE(r.json()["verification"]["ok"].get<bool>());
}

TEST(Construct, ConsecutiveStructureOnThreeAlternativesIsObstructed) {
  const CliRun r = run({"construct", "--theorem", "4", fixture("three_alternatives.json")});
  EXPECT_EQ(r.code, kExitObstruction);
  EXPECT_EQ(r.json()["obstruction"]["status"], "none");
}

TEST(Construct, DiagnosticsPerProfile) {
  const CliRun r = run({"construct", "--kind", "full", "--diagnostics",
                     fixture("three_alternatives.json")});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.json()["diagnostics"].contains("R'"));
}

TEST(Domain, GenerationIsSeeded) {
  const std::vector<std::string> args{"--seed", "7", "domain", "--generate",
                                      "common-best", "--n", "3",
                                      "--profiles", "2"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto domain = parse_job_domain(a.json());
  EXPECT_EQ(domain.size(), 2u);
}

TEST(Domain, ThreeCouplesDerivesOptimalMatchings) {
  const CliRun r = run({"domain", fixture("three_couples.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["domain"], "marriage");
  EXPECT_EQ(j["document"]["scr"]["R"].size(), 2u);
}

TEST(Domain, PlainDocumentIsRejected) {
  EXPECT_EQ(run({"domain", fixture("three_alternatives.json")}).code, kExitInputError);
}

TEST(ExportDot, HighlightsMss) {
  const CliRun r = run({"export-dot", fixture("housing.json"), "--highlight",
                     "mss"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
}

TEST(Errors, InputProblemsExitOne) {
  EXPECT_EQ(run({"solve", "/nonexistent.json"}).code, kExitInputError);
  EXPECT_EQ(run({"solve", "--bogus", fixture("three_alternatives.json")}).code,
            kExitInputError);
  EXPECT_EQ(run({"solve", fixture("three_alternatives.json"), "--profile", "Q"}).code,
            kExitInputError);
  EXPECT_EQ(run({}).code, kExitInputError);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Binary, ExitCodesSurviveTheProcessBoundary) {
  const std::string bin = ROTAKIT_BINARY;
  auto status = [&](const std::string& args) {
    const int s = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  EXPECT_EQ(status("check " + fixture("three_alternatives.json")), kExitOk);
  EXPECT_EQ(status("construct --theorem 4 " + fixture("three_alternatives.json")),
            kExitObstruction);
  EXPECT_EQ(status("solve --nope"), kExitInputError);
}

}  // namespace
}  // namespace rotakit
