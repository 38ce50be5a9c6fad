#pragma once

#include <cstdint>
#include <vector>

#include "zcdpb/env.hpp"
#include "zcdpb/regret.hpp"
#include "zcdpb/rng.hpp"

namespace zcdpb {

struct FinitePolicyConfig {
  double beta = 1.0;
  double rho = 1.0;
  bool is_private = true;
  std::uint64_t base_seed = 1;
  std::uint64_t run = 0;
  int checkpoints = 200;
};

/// UCB index on the forgotten window. n_pair is twice the number of samples
/// in the arm's last completed episode (the doubling schedule makes that equal
/// to the arm's total pull count from the second episode on). The private
/// index adds N(0, 1/(2 rho (n_pair/2)^2)) noise and widens the bonus by the
/// 1/(rho (n_pair/2)^2) term.
double private_index(double window_mean, long long n_pair, long long t_ell,
                     double beta, double rho, bool is_private, RngStream& mech);

/// Optional per-run instrumentation for invariant checks.
struct FiniteRunLog {
  struct Episode {
    int arm = 0;
    std::int64_t start = 0;   // first step of the episode (1-based)
    std::int64_t length = 0;  // number of pulls
    double window_mean = 0.0; // mean of the samples this episode contributes
  };
  std::vector<Episode> episodes;  // includes the K initialisation pulls
  std::vector<int> actions;       // filled only when record_actions is set
  bool record_actions = false;
};

/// Episodic UCB with per-arm doubling, forgetting, and (optionally) the
/// private index. Pseudo-regret trace at log-spaced checkpoints.
RegretTrace run_finite(const FiniteEnvironment& env, std::int64_t horizon,
                       const FinitePolicyConfig& config, FiniteRunLog* log = nullptr);

}  // namespace zcdpb
