#include "zcdpb/env.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zcdpb {

FiniteEnvironment::FiniteEnvironment(std::vector<double> arm_means, RewardKind kind,
                                     bool clip_rewards)
    : means(std::move(arm_means)), reward_kind(kind), clip(clip_rewards) {
  if (means.size() < 2) {
    throw std::invalid_argument("FiniteEnvironment: need at least 2 arms");
  }
  for (double m : means) {
    if (!(m >= 0.0 && m <= 1.0)) {
      throw std::invalid_argument("FiniteEnvironment: means must lie in [0,1]");
    }
  }
}

double FiniteEnvironment::optimal_mean() const {
  return *std::max_element(means.begin(), means.end());
}

LinearEnvironment::LinearEnvironment(Eigen::VectorXd theta,
                                     std::vector<Eigen::VectorXd> acts, double noise,
                                     bool clip_rewards)
    : theta_star(std::move(theta)), actions(std::move(acts)), noise_std(noise),
      clip(clip_rewards) {
  if (actions.empty()) {
    throw std::invalid_argument("LinearEnvironment: empty action set");
  }
  for (const auto& a : actions) {
    if (a.size() != theta_star.size()) {
      throw std::invalid_argument("LinearEnvironment: action/theta dimension mismatch");
    }
  }
  if (noise_std < 0.0) {
    throw std::invalid_argument("LinearEnvironment: negative noise scale");
  }
}

ContextGenerator::ContextGenerator(Eigen::VectorXd mean, Eigen::MatrixXd cov,
                                   int arms_per_round, bool normalize)
    : mean_(std::move(mean)), cov_(std::move(cov)), arms_per_round_(arms_per_round),
      normalize_(normalize) {
  if (mean_.size() < 1 || arms_per_round_ < 1) {
    throw std::invalid_argument("ContextGenerator: d >= 1 and k_t >= 1 required");
  }
  if (cov_.rows() != mean_.size() || cov_.cols() != mean_.size()) {
    throw std::invalid_argument("ContextGenerator: covariance shape mismatch");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov_);
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() < -1e-12) {
    throw std::invalid_argument("ContextGenerator: covariance must be PSD");
  }
  transform_ = es.eigenvectors() *
               es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();
}

double ContextGenerator::lambda0() const {
  if (!normalize_) {
    Eigen::MatrixXd second_moment = cov_ + mean_ * mean_.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(second_moment);
    return es.eigenvalues().minCoeff();
  }
  // No closed form for the normalised process; plug-in estimate from a fixed
  // auxiliary stream so the value is deterministic.
  RngStream rng = make_stream(0x10ad5eedull, 0, StreamKind::instance);
  const int samples = 20000;
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(dim(), dim());
  for (int i = 0; i < samples; ++i) {
    Eigen::VectorXd z(dim());
    for (int j = 0; j < dim(); ++j) z(j) = rng.normal();
    Eigen::VectorXd a = mean_ + transform_ * z;
    double n = a.norm();
    if (n > 0) a /= n;
    acc += a * a.transpose();
  }
  acc /= samples;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(acc);
  return es.eigenvalues().minCoeff();
}

std::vector<Eigen::VectorXd> ContextGenerator::sample(RngStream& rng) const {
  std::vector<Eigen::VectorXd> out;
  out.reserve(arms_per_round_);
  for (int k = 0; k < arms_per_round_; ++k) {
    Eigen::VectorXd z(dim());
    for (int j = 0; j < dim(); ++j) z(j) = rng.normal();
    Eigen::VectorXd a = mean_ + transform_ * z;
    if (normalize_) {
      double n = a.norm();
      if (n > 0) a /= n;
    }
    out.push_back(std::move(a));
  }
  return out;
}

double sample_reward(const FiniteEnvironment& env, int arm, RngStream& rng) {
  if (arm < 0 || arm >= env.num_arms()) {
    throw std::domain_error("sample_reward: invalid arm id");
  }
  const double mu = env.means[static_cast<std::size_t>(arm)];
  if (env.reward_kind == RewardKind::bernoulli) {
    return rng.bernoulli(mu) ? 1.0 : 0.0;
  }
  double r = mu + rng.normal();
  if (env.clip) r = std::clamp(r, 0.0, 1.0);
  return r;
}

double sample_reward(const LinearEnvironment& env, const Eigen::VectorXd& action,
                     RngStream& rng) {
  if (action.size() != env.theta_star.size()) {
    throw std::domain_error("sample_reward: action dimension mismatch");
  }
  double r = env.theta_star.dot(action) + env.noise_std * rng.normal();
  if (env.clip) r = std::clamp(r, -1.0, 1.0);
  return r;
}

double sample_reward(const LinearEnvironment& env, int action_id, RngStream& rng) {
  if (action_id < 0 || action_id >= env.num_actions()) {
    throw std::domain_error("sample_reward: invalid action id");
  }
  return sample_reward(env, env.actions[static_cast<std::size_t>(action_id)], rng);
}

double suboptimality_gap(const FiniteEnvironment& env, int arm) {
  if (arm < 0 || arm >= env.num_arms()) {
    throw std::domain_error("suboptimality_gap: invalid arm id");
  }
  return env.optimal_mean() - env.means[static_cast<std::size_t>(arm)];
}

double suboptimality_gap(const LinearEnvironment& env, const Eigen::VectorXd& action) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& b : env.actions) best = std::max(best, env.theta_star.dot(b));
  return best - env.theta_star.dot(action);
}

double suboptimality_gap(const LinearEnvironment& env, int action_id) {
  if (action_id < 0 || action_id >= env.num_actions()) {
    throw std::domain_error("suboptimality_gap: invalid action id");
  }
  return suboptimality_gap(env, env.actions[static_cast<std::size_t>(action_id)]);
}

std::vector<Eigen::VectorXd> generate_context_set(const ContextGenerator& gen,
                                                  RngStream& rng) {
  return gen.sample(rng);
}

Eigen::VectorXd sample_unit_sphere(int dim, RngStream& rng) {
  Eigen::VectorXd v(dim);
  double n = 0.0;
  do {
    for (int i = 0; i < dim; ++i) v(i) = rng.normal();
    n = v.norm();
  } while (n == 0.0);
  return v / n;
}

}  // namespace zcdpb
