#include <gtest/gtest.h>

#include <string>

#include "hitchin3/report.hpp"

using namespace hitchin3;

namespace {

JobResult run(const std::string& text) { return run_document_text(text); }

bool has_entry(const Json& report, const std::string& prefix) {
  for (const auto& e : report["verification"])
    if (e["name"].get<std::string>().rfind(prefix, 0) == 0) return true;
  return false;
}

}  // namespace

TEST(ReportTest, QuadraticOnAffineLine) {
  const JobResult r = run(R"({"surface": "affine_line", "f": [[2, "1"]]})");
  EXPECT_EQ(r.exit, ExitCode::Yes);
  const Json& v = r.report["verdict"];
  EXPECT_EQ(v["exists"], "Yes");
  EXPECT_EQ(v["region"]["text"], "(2, 5/2]");
  EXPECT_EQ(v["degrees_at_canonical"]["E2"]["exact"], "-1/2");
  EXPECT_EQ(v["degrees_at_canonical"]["E2"]["approx"], "-0.5");
  EXPECT_EQ(v["canonical_weights"][0]["d2"]["exact"], "5/2");
}

TEST(ReportTest, ConstantOnAffineLine) {
  const JobResult r = run(R"({"surface": "affine_line", "f": [[0, "1"]]})");
  EXPECT_EQ(r.exit, ExitCode::No);
  EXPECT_EQ(r.report["verdict"]["exists"], "No");
  EXPECT_EQ(r.report["verdict"]["reason"], "NilpotentSummand");
}

TEST(ReportTest, CoefficientPairInput) {
  const JobResult r = run(R"({"surface": "punctured_line", "q2": [[4, "3/4*c2"]], "q3": [[6, "1"]]})");
  EXPECT_EQ(r.exit, ExitCode::Yes);
  EXPECT_EQ(r.report["classification"]["sheets"], 2);
  EXPECT_EQ(r.report["classification"]["f"], "[(1)]*z^2");
  EXPECT_EQ(r.report["verdict"]["route"], "SpecialConstruction(2)");
}

TEST(ReportTest, OrthogonalizationAlwaysLogged) {
  for (const char* job : {R"({"surface": "affine_line", "f": [[2, "1"]]})",
                          R"({"surface": "affine_line", "f": [[1, "1"]]})",
                          R"({"surface": "punctured_line", "f": [[-2, "c2"]]})"}) {
    const JobResult r = run(job);
    const Json& log = r.report["verification"];
    bool solved = false;
    bool displayed = false;
    for (const auto& e : log) {
      const std::string name = e["name"];
      if (name.rfind("orthogonalize: solved", 0) == 0) solved = e["status"] == "pass";
      if (name.rfind("orthogonalize: displayed coefficient", 0) == 0)
        displayed = e["status"] == "fail" && e["residual"] == "[(-3)]";
    }
    EXPECT_TRUE(solved) << job;
    EXPECT_TRUE(displayed) << job;
  }
}

TEST(ReportTest, VerifyIdentitiesRunsSuites) {
  const JobResult plain = run(R"({"surface": "punctured_line", "f": [[-1, "2"]]})");
  EXPECT_FALSE(has_entry(plain.report, "jordan:"));
  const JobResult full =
      run(R"({"surface": "punctured_line", "f": [[-1, "2"]], "options": {"verify_identities": true}})");
  EXPECT_TRUE(has_entry(full.report, "jordan:"));
  EXPECT_TRUE(has_entry(full.report, "global degree"));
  EXPECT_TRUE(has_entry(full.report, "special(b=1):"));
  EXPECT_EQ(full.report["verdict"]["construction"]["a"], "(-2)");

  const JobResult reduced =
      run(R"({"surface": "punctured_line", "f": [[5, "1"]], "options": {"verify_identities": true}})");
  EXPECT_TRUE(has_entry(reduced.report, "reduced: jordan:"));
}

TEST(ReportTest, RegionSamples) {
  const JobResult r =
      run(R"({"surface": "punctured_line", "f": [[1, "1"], [0, "-1"]], "options": {"region_samples": 5, "seed": 3}})");
  ASSERT_EQ(r.report["region_samples"].size(), 5u);
  for (const auto& p : r.report["region_samples"]) {
    EXPECT_TRUE(p["good"].get<bool>());
    EXPECT_TRUE(p["perfect"].get<bool>());
    EXPECT_TRUE(p["stable"].get<bool>());
  }
  EXPECT_TRUE(has_entry(r.report, "region samples"));
}

TEST(ReportTest, Deterministic) {
  const std::string job =
      R"([{"surface": "affine_line", "f": [[6, "1"], [0, "1"]], "options": {"region_samples": 7, "seed": 99}},
          {"surface": "punctured_line", "f": [[3, "i"]], "options": {"verify_identities": true, "region_samples": 3}}])";
  const std::string a = serialize(run(job).report);
  const std::string b = serialize(run(job).report);
  EXPECT_EQ(a, b);
  OptionOverrides other;
  other.seed = 100;
  EXPECT_NE(a, serialize(run_document_text(job, other).report));
}

TEST(ReportTest, ArrayKeepsOrderAndWorstExit) {
  const JobResult r = run(R"([{"surface": "affine_line", "f": [[2, "1"]]},
                              {"surface": "affine_line", "f": [[1, "1"]]},
                              {"surface": "affine_line", "f": [[1, "1/0"]]}])");
  ASSERT_EQ(r.report.size(), 3u);
  EXPECT_EQ(r.report[0]["exit_code"], 0);
  EXPECT_EQ(r.report[1]["exit_code"], 1);
  EXPECT_EQ(r.report[2]["exit_code"], 2);
  EXPECT_EQ(r.exit, ExitCode::InputError);
}

TEST(ReportTest, InputErrors) {
  const JobResult parse = run(R"({"surface": "affine_line", "f": [[2, "3/4*"]]})");
  EXPECT_EQ(parse.exit, ExitCode::InputError);
  EXPECT_EQ(parse.report["error"]["code"], "ParseError");
  EXPECT_EQ(parse.report["error"]["offset"], 4);

  for (const char* bad : {R"({"surface": "affine_line", "f": [[-1, "1"]]})",
                          R"({"surface": "affine_line", "f": [[1, "1"], [1, "2"]]})",
                          R"({"surface": "sphere", "f": [[1, "1"]]})",
                          R"({"surface": "affine_line", "f": [[1, "1"]], "q3": [[1, "1"]]})",
                          R"({"surface": "affine_line", "q2": [[1, "1"]]})",
                          R"({"surface": "affine_line", "f": [[1, 1]]})",
                          R"({"surface": "affine_line", "f": [[1, "1"]], "extra": 1})",
                          R"({"surface": "affine_line", "f": [[1, "1"]], "options": {"seed": -1}})",
                          R"({"surface": "affine_line", "f": [[1, "1"]])"}) {
    const JobResult r = run(bad);
    EXPECT_EQ(r.exit, ExitCode::InputError) << bad;
    EXPECT_TRUE(r.report.contains("error")) << bad;
  }
}

TEST(ReportTest, OverridesApply) {
  OptionOverrides o;
  o.verify_identities = true;
  o.region_samples = 2;
  o.seed = 42;
  const JobResult r = run_document_text(R"({"surface": "affine_line", "f": [[3, "1"]]})", o);
  EXPECT_EQ(r.report["provenance"]["seed"], 42);
  EXPECT_EQ(r.report["region_samples"].size(), 2u);
  EXPECT_TRUE(has_entry(r.report, "jordan:"));
}
