#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "zcdpb/env.hpp"
#include "zcdpb/regret.hpp"
#include "zcdpb/rng.hpp"

namespace zcdpb {

/// Where the privatising Gaussian noise enters the phase estimate.
/// half_power: theta_hat + V^{-1/2} N,  N ~ N(0, 2d/(rho c_ell) I)
/// sum_noise:  theta_hat + V^{-1}(sum_{a in S} a N(0, 2/rho))
/// none:       plain least squares (non-private)
enum class GopeNoiseMode { half_power, sum_noise, none };

struct GopeConfig {
  double delta = 0.001;
  double rho = 1.0;
  GopeNoiseMode mode = GopeNoiseMode::half_power;
  double design_tol = 1e-2;
  int design_max_iter = 10000;
  std::uint64_t base_seed = 1;
  std::uint64_t run = 0;
  int checkpoints = 200;
};

/// chi^2 tail bound entering the phase length: f(d, delta) = d +
/// 2 sqrt(d log(2/delta)) + 2 log(2/delta).
double gope_noise_tail(int d, double delta);

/// Phase length c_ell of the elimination schedule:
/// (8d/beta^2) log(4/delta_kl) + (2d/beta) sqrt((2/rho) f(d, delta_kl)).
/// rho = +inf drops the private term.
double episode_length(int d, double beta_ell, double delta_kl, double rho);

/// Least-squares estimate over one phase's plays, with noise per mode.
/// plays: (action, reward) pairs; V must be the Gram of those plays.
Eigen::VectorXd private_theta(const std::vector<std::pair<Eigen::VectorXd, double>>& plays,
                              const Eigen::MatrixXd& V, double rho, double c_ell,
                              GopeNoiseMode mode, RngStream& mech);

/// Arms surviving the empirical-gap test max_b <theta, b - a> <= 2 beta_ell.
/// The empirical best always survives, so the result is never empty.
std::vector<int> eliminate_arms(const std::vector<int>& active,
                                const std::vector<Eigen::VectorXd>& actions,
                                const Eigen::VectorXd& theta, double beta_ell);

struct GopePhaseLog {
  int phase = 0;
  int active_arms = 0;
  int support_size = 0;
  int effective_dim = 0;
  double c_ell = 0.0;
  std::int64_t planned_steps = 0;  // sum_a T_ell(a)
  std::int64_t played_steps = 0;   // truncated at the horizon
};

struct GopeRunLog {
  std::vector<GopePhaseLog> phases;
  std::vector<std::vector<int>> active_sets;  // surviving arm ids after each phase
};

/// Phased elimination with a G-optimal design per phase.
RegretTrace run_gope(const LinearEnvironment& env, std::int64_t horizon,
                     const GopeConfig& config, GopeRunLog* log = nullptr);

}  // namespace zcdpb
