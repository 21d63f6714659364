#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hitchin3/report.hpp"
#include "hitchin3/selfcheck.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Harmonic metric existence for rank-3 Hitchin-section Higgs bundles over C and C*"};
  app.set_version_flag("--version", hitchin3::kVersion);
  app.require_subcommand(1);

  std::string input_path;
  std::string report_path;
  bool verify = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  auto* analyze = app.add_subcommand("analyze", "Decide existence for a job or job array");
  analyze->add_option("--input", input_path, "Job document (JSON)")->required();
  analyze->add_option("--report", report_path, "Write the report here instead of stdout");
  analyze->add_flag("--verify-identities", verify, "Run the full identity suites");
  auto* samples_opt = analyze->add_option("--region-samples", samples, "Random points of the region to check");
  auto* seed_opt = analyze->add_option("--seed", seed, "Seed for region sampling");

  auto* selfcheck = app.add_subcommand("selfcheck", "Run the built-in identity suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (selfcheck->parsed()) return hitchin3::run_selfcheck(std::cout) ? 0 : 3;

  std::ifstream in(input_path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << input_path << '\n';
    return 2;
  }
  std::ostringstream text;
  text << in.rdbuf();

  hitchin3::OptionOverrides overrides;
  overrides.verify_identities = verify;
  if (*samples_opt) overrides.region_samples = samples;
  if (*seed_opt) overrides.seed = seed;

  const hitchin3::JobResult result = hitchin3::run_document_text(text.str(), overrides);
  const std::string out = hitchin3::serialize(result.report);
  if (report_path.empty()) {
    std::cout << out;
  } else {
    std::ofstream file(report_path, std::ios::binary);
    file << out;
    if (!file) {
      std::cerr << "cannot write " << report_path << '\n';
      return 2;
    }
  }
  return static_cast<int>(result.exit);
}
