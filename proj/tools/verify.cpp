// Command-line verification driver: runs the registered claims, prints one
// line per claim, and optionally writes a JSON report.
//
// Exit codes: 0 when every selected claim passes, 1 when at least one claim
// fails, 2 on usage errors (including a --claim pattern matching nothing).

#include "gt/claims.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>

namespace {

constexpr const char *kToolVersion = "1.0.0";

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Verification driver for the ternary Golay / Sp4(3) group-theory library"};

  std::string claim_glob = "*";
  std::string report_path;
  int threads = 1;
  unsigned seed = 12345;
  bool list = false;

  app.add_option("--claim", claim_glob, "Glob pattern selecting claim ids (default: all)");
  app.add_option("--report", report_path, "Write a JSON report to this path");
  app.add_option("--threads", threads, "Worker threads (content is thread-count independent)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for the randomized spot checks");
  app.add_flag("--list", list, "List claim ids and references, then exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::vector<gt::Claim> &registry = gt::claim_registry();

  if (list) {
    for (const gt::Claim &c : registry)
      std::printf("%-18s %s\n", c.id.c_str(), c.reference.c_str());
    return 0;
  }

  std::vector<const gt::Claim *> selected;
  for (const gt::Claim &c : registry)
    if (gt::glob_match(claim_glob, c.id))
      selected.push_back(&c);
  if (selected.empty()) {
    std::fprintf(stderr, "error: no claim matches '%s' (use --list to see ids)\n",
                 claim_glob.c_str());
    return 2;
  }

  std::vector<gt::ClaimResult> results = gt::run_claims(selected, seed, threads);

  int passed = 0, failed = 0;
  for (const gt::ClaimResult &r : results) {
    bool ok = r.status == "pass";
    (ok ? passed : failed) += 1;
    std::printf("%-4s %-18s (%.0f ms)\n", r.status.c_str(), r.id.c_str(), r.runtime_ms);
    if (!ok) {
      std::printf("     computed: %s\n", r.computed.c_str());
      std::printf("     expected: %s\n", r.expected.c_str());
    }
  }
  std::printf("%d passed, %d failed, %zu total (seed %u)\n", passed, failed, results.size(),
              seed);

  if (!report_path.empty()) {
    nlohmann::json report;
    report["tool"] = "verify";
    report["version"] = kToolVersion;
    report["seed"] = seed;
    report["claims"] = nlohmann::json::array();
    for (const gt::ClaimResult &r : results)
      report["claims"].push_back({{"id", r.id},
                                  {"reference", r.reference},
                                  {"status", r.status},
                                  {"computed", r.computed},
                                  {"expected", r.expected},
                                  {"runtime_ms", r.runtime_ms}});
    report["summary"] = {{"total", results.size()}, {"passed", passed}, {"failed", failed}};
    std::ofstream out(report_path);
    if (!out) {
      std::fprintf(stderr, "error: cannot write report to '%s'\n", report_path.c_str());
      return 2;
    }
    out << report.dump(2) << '\n';
  }

  return failed == 0 ? 0 : 1;
}
