// Claim registry for the verification tool.  Each claim recomputes one of
// the library's numeric or structural statements and summarizes the result
// as a short key=value string; the claim passes when the summary equals the
// expected string recorded here.  All computations are deterministic for a
// fixed seed.

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace gt {

struct Claim {
  std::string id;        // dot-namespaced identifier, e.g. "golay.weights"
  std::string reference; // the verified statement in one sentence
  std::string expected;  // expected summary string
  std::function<std::string(unsigned seed)> compute;
};

const std::vector<Claim> &claim_registry();

// Shell-style matching with '*' (any run) and '?' (one character).
bool glob_match(const std::string &pattern, const std::string &text);

struct ClaimResult {
  std::string id;
  std::string reference;
  std::string status; // "pass" or "fail"
  std::string computed;
  std::string expected;
  double runtime_ms = 0.0;
};

// Runs the selected claims on the given number of worker threads.  Results
// come back in registry order and their content does not depend on the
// thread count; only runtime_ms varies between runs.
std::vector<ClaimResult> run_claims(const std::vector<const Claim *> &selected, unsigned seed,
                                    int threads);

} // namespace gt
