#pragma once

#include <functional>
#include <string>
#include <vector>

namespace likegame::verify {

// Fault-injection seams for the verifier's own tests: substituting a wrong
// reference formula or tampering with a replayed history must flip the
// corresponding claim to failed. Production callers use the defaults.
struct VerifyHooks {
  // Reference combination of personal and social utility; empty means the
  // contract formula gamma * personal + (1 - gamma) * social.
  std::function<double(double gamma, double personal, double social)> combine;
  // Rewrites one replayed action into a self-engagement before the audit.
  bool tamper_self_engagement = false;
};

struct ClaimResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Checks the model's canned claims end to end: endpoint reductions of the
// combined utility, the all-idealist equilibrium family, belief invariance of
// idealist round-0 choices, the reciprocity like/reshare cycle, weak
// dominance of majority-aligned sharing, and ledger conservation on replay.
// Claims never throw; failures carry a diagnostic detail.
std::vector<ClaimResult> run_verification(const VerifyHooks& hooks = {});

}  // namespace likegame::verify
