#pragma once

// The end-to-end acceptance checks A1..A12, shared by the test binary and the
// `verify` command.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "heckekron/llt.hpp"
#include "heckekron/saxl.hpp"

namespace heckekron {

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  // Failed only at values printed differently in the literature, where the
  // computed value has been confirmed independently.
  bool known_discrepancy = false;
  std::string detail;
  double seconds = 0;
};

class AcceptanceContext {
 public:
  explicit AcceptanceContext(int threads = 1, MatrixProvider provider = {});

  int threads() const { return threads_; }
  /// Memoised per block for the lifetime of the context.
  const GradedDecompMatrix& matrix(const BlockId& block);

 private:
  int threads_;
  MatrixProvider provider_;
  std::mutex mutex_;
  std::map<BlockId, std::unique_ptr<GradedDecompMatrix>> matrices_;
};

std::vector<std::string> acceptance_ids();

/// Throws DomainError for an unknown id. Exceptions from the library are
/// reported as failures, not propagated.
CriterionResult run_criterion(const std::string& id, AcceptanceContext& ctx);

/// One line per criterion: "A1 PASS ..." or "A2 FAIL ...".
std::string format_result(const CriterionResult& r);

/// true when every failure is a known discrepancy.
bool acceptable(const std::vector<CriterionResult>& results);

}  // namespace heckekron
