#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qstack {

// The end-to-end checks behind the acceptance binary and `qstack verify-all`.
struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;               // one line
  std::vector<std::string> log;     // per-item lines
  std::vector<std::string> dumps;   // counterexample reproducers
  double seconds = 0;
};

struct AcceptanceOptions {
  std::vector<int> only;     // empty: all
  unsigned threads = 0;      // oracle workers, 0 = hardware
  int lemma_samples = 200;   // finite-pdim modules per level
  // called after each criterion (progress output)
  std::function<void(const CriterionResult&)> on_result;
};

constexpr int kCriteria = 8;

CriterionResult run_criterion(int id, const AcceptanceOptions& opt = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});
std::string format_result(const CriterionResult& r);

}  // namespace qstack
