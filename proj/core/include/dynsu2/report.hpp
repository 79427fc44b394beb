#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dynsu2/scalar.hpp"

namespace dynsu2 {

inline constexpr uint64_t kDefaultSeed = 0x64796e737532ULL;

struct SuiteOptions {
  int bound = -1;  // -1: per-suite default
  int points = kDefaultTrials;
  uint64_t seed = kDefaultSeed;
  bool exhaustive = false;
  int jobs = 0;  // 0 = hardware concurrency
  std::string variant;  // suite-specific switch (qdyb: "rational")
};

struct IdentityResult {
  std::string id;
  std::string anchor;   // paper equation label
  std::string indices;  // index tuple echo
  int points = 0;
  std::string status;  // pass | fail | skipped
  uint64_t seed = 0;
  std::string detail;  // failure info
};

struct SuiteReport {
  std::string suite;
  SuiteOptions opts;
  double wall_ms = 0;
  std::vector<IdentityResult> identities;
  bool passed() const;
  std::string to_json(bool with_timing = true) const;
};

/// Collects identity checks and runs them concurrently with per-identity
/// seeds derived from (suite seed, identity id, indices); assembly order is
/// the registration order regardless of scheduling.
class Suite {
 public:
  Suite(std::string name, const SuiteOptions& opts);
  /// fn(seed, points) -> pass; a throw records a failure with the message.
  void add(const std::string& id, const std::string& anchor, const std::string& indices,
           std::function<bool(uint64_t, int)> fn);
  void skip(const std::string& id, const std::string& anchor, const std::string& why);
  SuiteReport run();
  const SuiteOptions& opts() const { return opts_; }
  int bound_or(int dflt) const { return opts_.bound < 0 ? dflt : opts_.bound; }

 private:
  struct Pending {
    IdentityResult meta;
    std::function<bool(uint64_t, int)> fn;
  };
  std::string name_;
  SuiteOptions opts_;
  std::vector<Pending> pending_;
};

using SuiteFn = SuiteReport (*)(const SuiteOptions&);
const std::vector<std::pair<std::string, SuiteFn>>& suite_registry();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);
bool is_suite_name(const std::string& name);

// individual suites (see suite_registry for the CLI name map)
SuiteReport verify_qdyb(const SuiteOptions&);
SuiteReport verify_rll(const SuiteOptions&);
SuiteReport verify_bialgebroid(const SuiteOptions&);
SuiteReport verify_hopf(const SuiteOptions&);
SuiteReport verify_qseries(const SuiteOptions&);
SuiteReport verify_matelem(const SuiteOptions&);
SuiteReport verify_unitarity(const SuiteOptions&);
SuiteReport verify_racah_orth(const SuiteOptions&);
SuiteReport verify_cg_corep(const SuiteOptions&);
SuiteReport verify_cg_dynrep(const SuiteOptions&);
SuiteReport verify_biedenharn(const SuiteOptions&);
SuiteReport verify_addition(const SuiteOptions&);
SuiteReport verify_haar_suite(const SuiteOptions&);
SuiteReport verify_schur(const SuiteOptions&);
/// Rewriting-kernel soundness checks (normalize idempotence/linearity,
/// associativity, confluence, basis rank witnesses); part of `all`.
SuiteReport verify_kernel(const SuiteOptions&);

}  // namespace dynsu2
