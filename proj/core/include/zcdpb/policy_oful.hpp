#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "zcdpb/env.hpp"
#include "zcdpb/regret.hpp"
#include "zcdpb/rng.hpp"

namespace zcdpb {

/// Contextual environment: theta* plus a per-round action-set generator.
struct ContextualEnvironment {
  Eigen::VectorXd theta_star;
  ContextGenerator generator;
  double noise_std = 1.0;
  bool clip = true;  // rewards clipped to [-1, 1]
};

struct OfulConfig {
  double lambda = 0.1;  // regulariser
  double C = 1.0;       // determinant doubling schedule
  double delta = 0.001;
  double rho = 1.0;
  double lambda0 = 0.1;           // context-process eigenvalue floor
  double theta_norm_bound = 1.0;  // ||theta*|| bound used in beta_t
  bool is_private = true;
  std::uint64_t base_seed = 1;
  std::uint64_t run = 0;
  int checkpoints = 200;
};

/// Determinant trigger det_now > (1 + C) det_last.
bool update_condition(double det_now, double det_last, double C);

struct WidthParams {
  double lambda = 0.1;
  double delta = 0.001;
  int d = 3;
  double rho = 1.0;
  double lambda0 = 0.1;
  std::int64_t horizon = 100000;
  double theta_norm_bound = 1.0;
  bool is_private = true;
};

/// Lower bound on lambda_min of the unregularised design matrix after t
/// stochastic contexts: lambda0 t/4 - 8 log((t+3)/(delta/d))
/// - 2 sqrt(t log((t+3)/(delta/d))). Negative for small t.
double context_design_floor(std::int64_t t, double lambda0, double delta, int d);

/// Optimistic width beta~ = beta_t + gamma_t/sqrt(t), where
/// beta_t = sqrt(2 log(1/delta) + d log(1 + t/(lambda d))) + sqrt(lambda) S and
/// the private part is sqrt( (2 ell / rho) f(d, delta/T) / max(lambda,
/// lambda + context_design_floor(t)) ). ell counts noise draws so far.
double confidence_width(std::int64_t t, int ell, const WidthParams& params);

/// Index of the maximiser of <theta, a> + width * ||a||_{V^{-1}}; ties go to
/// the first action in enumeration order.
int select_action(const std::vector<Eigen::VectorXd>& action_set,
                  const Eigen::VectorXd& theta, double width,
                  const Eigen::MatrixXd& v_inv);

/// Analytic cap on the number of estimate updates:
/// d / log(1+C) * log(1 + T/(lambda d)).
double episode_count_bound(double T, double C, double lambda, int d);

struct OfulRunLog {
  std::vector<std::int64_t> update_steps;  // t at which the estimate refreshed
  int noise_draws = 0;                     // number of Y_m sampled
  std::vector<double> det_checkpoints;     // det(V_t) at trace checkpoints
  std::vector<int> actions;                // filled only when record_actions
  bool record_actions = false;
};

/// Rarely-switching optimistic policy with cumulative Gaussian noise on the
/// running reward sum (private) or none (non-private RS-OFUL).
RegretTrace run_oful(const ContextualEnvironment& env, std::int64_t horizon,
                     const OfulConfig& config, OfulRunLog* log = nullptr);

}  // namespace zcdpb
