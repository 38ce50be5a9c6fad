#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zcdpb {

/// Cumulative pseudo-regret sampled at checkpoint steps.
struct RegretTrace {
  std::vector<std::int64_t> steps;  // strictly increasing
  std::vector<double> regret;       // nonnegative, nondecreasing
  std::uint64_t run_seed = 0;
  std::string algo;
  double rho = 0.0;  // privacy budget of the run; 0 marks a non-private run

  double final_regret() const { return regret.empty() ? 0.0 : regret.back(); }
  /// Cumulative regret at the latest checkpoint <= t.
  double regret_at(std::int64_t t) const;
};

/// ~count log-spaced checkpoints in [1, horizon], deduplicated, always
/// containing the horizon itself.
std::vector<std::int64_t> log_checkpoints(std::int64_t horizon, int count = 200);

/// Accumulates per-step gaps and snapshots the running sum at checkpoints.
class RegretRecorder {
 public:
  RegretRecorder(std::int64_t horizon, int checkpoint_count = 200);

  void record(double gap);
  RegretTrace finish(std::string algo, double rho, std::uint64_t run_seed) &&;

  std::int64_t step() const { return step_; }
  double cumulative() const { return cumulative_; }

 private:
  std::vector<std::int64_t> checkpoints_;
  std::vector<double> values_;
  std::size_t next_ = 0;
  std::int64_t step_ = 0;
  double cumulative_ = 0.0;
};

}  // namespace zcdpb
