#pragma once

#include <Eigen/Dense>
#include <vector>

#include "zcdpb/rng.hpp"

namespace zcdpb {

enum class RewardKind { bernoulli, gaussian };

/// K-armed environment with means in [0, 1]. Gaussian rewards have unit
/// variance and are clipped to [0, 1] when clipping is enabled.
struct FiniteEnvironment {
  std::vector<double> means;
  RewardKind reward_kind = RewardKind::bernoulli;
  bool clip = true;

  FiniteEnvironment(std::vector<double> arm_means,
                    RewardKind kind = RewardKind::bernoulli, bool clip_rewards = true);

  int num_arms() const { return static_cast<int>(means.size()); }
  double optimal_mean() const;
};

/// Fixed-action-set linear environment: r = <theta*, a> + noise_std * eta,
/// eta ~ N(0,1), clipped to [-1, 1] when clipping is enabled.
struct LinearEnvironment {
  Eigen::VectorXd theta_star;
  std::vector<Eigen::VectorXd> actions;
  double noise_std = 1.0;
  bool clip = true;

  LinearEnvironment(Eigen::VectorXd theta, std::vector<Eigen::VectorXd> acts,
                    double noise = 1.0, bool clip_rewards = true);

  int dim() const { return static_cast<int>(theta_star.size()); }
  int num_actions() const { return static_cast<int>(actions.size()); }
};

/// Per-round action-set generator: arms_per_round i.i.d. Gaussian vectors,
/// optionally normalised to the unit sphere.
class ContextGenerator {
 public:
  ContextGenerator(Eigen::VectorXd mean, Eigen::MatrixXd cov, int arms_per_round,
                   bool normalize = false);

  int dim() const { return static_cast<int>(mean_.size()); }
  int arms_per_round() const { return arms_per_round_; }
  bool normalized() const { return normalize_; }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& cov() const { return cov_; }

  /// Minimum eigenvalue of E[A A^T]. Analytic (cov + mean mean^T) for the raw
  /// Gaussian process; empirical plug-in estimate when normalisation is on.
  double lambda0() const;

  std::vector<Eigen::VectorXd> sample(RngStream& rng) const;

 private:
  Eigen::VectorXd mean_;
  Eigen::MatrixXd cov_;
  Eigen::MatrixXd transform_;  // cov = transform * transform^T
  int arms_per_round_;
  bool normalize_;
};

double sample_reward(const FiniteEnvironment& env, int arm, RngStream& rng);
double sample_reward(const LinearEnvironment& env, const Eigen::VectorXd& action,
                     RngStream& rng);
double sample_reward(const LinearEnvironment& env, int action_id, RngStream& rng);

/// Gap of an arm: mu* - mu_a (finite) or max_a' <a' - a, theta*> (linear).
double suboptimality_gap(const FiniteEnvironment& env, int arm);
double suboptimality_gap(const LinearEnvironment& env, int action_id);
double suboptimality_gap(const LinearEnvironment& env, const Eigen::VectorXd& action);

std::vector<Eigen::VectorXd> generate_context_set(const ContextGenerator& gen,
                                                  RngStream& rng);

/// Sampled instances used by the experiment presets: actions and theta* drawn
/// uniformly on the unit sphere from the instance stream.
Eigen::VectorXd sample_unit_sphere(int dim, RngStream& rng);

}  // namespace zcdpb
