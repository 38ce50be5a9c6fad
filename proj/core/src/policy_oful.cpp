#include "zcdpb/policy_oful.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zcdpb/mechanism.hpp"

namespace zcdpb {

bool update_condition(double det_now, double det_last, double C) {
  if (!(det_now > 0.0) || !(det_last > 0.0)) {
    throw std::invalid_argument("update_condition: determinants must be positive");
  }
  return det_now > (1.0 + C) * det_last;
}

double context_design_floor(std::int64_t t, double lambda0, double delta, int d) {
  const double l = std::log((static_cast<double>(t) + 3.0) / (delta / d));
  return lambda0 * static_cast<double>(t) / 4.0 - 8.0 * l -
         2.0 * std::sqrt(static_cast<double>(t) * l);
}

double confidence_width(std::int64_t t, int ell, const WidthParams& params) {
  if (t < 0 || ell < 0) throw std::invalid_argument("confidence_width: t, ell >= 0");
  const double td = static_cast<double>(t);
  const double beta_t =
      std::sqrt(2.0 * std::log(1.0 / params.delta) +
                params.d * std::log(1.0 + td / (params.lambda * params.d))) +
      std::sqrt(params.lambda) * params.theta_norm_bound;
  if (!params.is_private || std::isinf(params.rho) || ell == 0) return beta_t;

  // The paper's lambda + g(t) denominator is clamped below at lambda: g < 0
  // for small t, and loosening the width keeps it a valid upper confidence.
  const double denom = std::max(
      params.lambda,
      params.lambda + context_design_floor(t, params.lambda0, params.delta, params.d));
  const double tail =
      chi_square_norm_bound(params.d, params.delta / static_cast<double>(params.horizon));
  const double gamma_over_sqrt_t =
      std::sqrt(2.0 * ell / params.rho * tail / denom);
  return beta_t + gamma_over_sqrt_t;
}

int select_action(const std::vector<Eigen::VectorXd>& action_set,
                  const Eigen::VectorXd& theta, double width,
                  const Eigen::MatrixXd& v_inv) {
  if (action_set.empty()) throw std::invalid_argument("select_action: empty action set");
  int best = 0;
  double best_index = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < action_set.size(); ++i) {
    const auto& a = action_set[i];
    const double idx = theta.dot(a) + width * std::sqrt(a.dot(v_inv * a));
    if (idx > best_index) {
      best_index = idx;
      best = static_cast<int>(i);
    }
  }
  return best;
}

double episode_count_bound(double T, double C, double lambda, int d) {
  if (!(T > 0.0) || !(C > 0.0) || !(lambda > 0.0) || d < 1) {
    throw std::invalid_argument("episode_count_bound: positive arguments required");
  }
  return d / std::log1p(C) * std::log(1.0 + T / (lambda * d));
}

RegretTrace run_oful(const ContextualEnvironment& env, std::int64_t horizon,
                     const OfulConfig& config, OfulRunLog* log) {
  const int d = static_cast<int>(env.theta_star.size());
  if (env.generator.dim() != d) {
    throw std::invalid_argument("run_oful: generator/theta dimension mismatch");
  }
  if (!(config.lambda > 0.0)) throw std::invalid_argument("run_oful: lambda > 0 required");

  RngStream env_rng = make_stream(config.base_seed, config.run, StreamKind::env);
  RngStream mech_rng = make_stream(config.base_seed, config.run, StreamKind::mechanism);

  RegretRecorder recorder(horizon, config.checkpoints);
  const auto checkpoints = log_checkpoints(horizon, config.checkpoints);
  std::size_t next_checkpoint = 0;

  WidthParams width_params{config.lambda, config.delta, d,     config.rho,
                           config.lambda0, horizon,     config.theta_norm_bound,
                           config.is_private};

  Eigen::MatrixXd V =
      config.lambda * Eigen::MatrixXd::Identity(d, d);          // V_t
  Eigen::MatrixXd V_inv = V.inverse();                          // tracked incrementally
  double det = std::pow(config.lambda, d);                      // det(V_t)
  Eigen::MatrixXd V_tau_inv = V_inv;                            // frozen at updates
  double det_tau = det;
  Eigen::VectorXd reward_sum = Eigen::VectorXd::Zero(d);        // sum a_s r_s
  Eigen::VectorXd noise_sum = Eigen::VectorXd::Zero(d);         // sum Y_m
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(d);
  double width = confidence_width(0, 0, width_params);
  int updates = 0;

  const double noise_sigma = config.is_private && !std::isinf(config.rho)
                                 ? std::sqrt(2.0 / config.rho)
                                 : 0.0;

  for (std::int64_t t = 1; t <= horizon; ++t) {
    const auto action_set = generate_context_set(env.generator, env_rng);

    if (update_condition(det, det_tau, config.C)) {
      if (config.is_private && !std::isinf(config.rho)) {
        for (int i = 0; i < d; ++i) noise_sum(i) += noise_sigma * mech_rng.normal();
        if (log) ++log->noise_draws;
      }
      ++updates;
      theta = V_inv * (reward_sum + noise_sum);
      V_tau_inv = V_inv;
      det_tau = det;
      width = confidence_width(t - 1, updates, width_params);
      if (log) log->update_steps.push_back(t);
    }

    const int choice = select_action(action_set, theta, width, V_tau_inv);
    const auto& a = action_set[static_cast<std::size_t>(choice)];

    double best_value = -std::numeric_limits<double>::infinity();
    for (const auto& b : action_set) {
      best_value = std::max(best_value, env.theta_star.dot(b));
    }
    recorder.record(best_value - env.theta_star.dot(a));
    if (log && log->record_actions) log->actions.push_back(choice);

    double r = env.theta_star.dot(a) + env.noise_std * env_rng.normal();
    if (env.clip) r = std::clamp(r, -1.0, 1.0);
    reward_sum.noalias() += a * r;

    // Rank-one updates for V^{-1} and det; refactored periodically so
    // floating-point drift cannot accumulate over long horizons.
    const Eigen::VectorXd u = V_inv * a;
    const double quad = 1.0 + a.dot(u);
    det *= quad;
    V_inv.noalias() -= (u * u.transpose()) / quad;
    V.noalias() += a * a.transpose();
    if (t % 10000 == 0) {
      Eigen::LLT<Eigen::MatrixXd> llt(V);
      V_inv = llt.solve(Eigen::MatrixXd::Identity(d, d));
      double logdet = 0.0;
      for (int i = 0; i < d; ++i) logdet += 2.0 * std::log(llt.matrixL()(i, i));
      det = std::exp(logdet);
    }
    if (log && next_checkpoint < checkpoints.size() && checkpoints[next_checkpoint] == t) {
      log->det_checkpoints.push_back(det);
      ++next_checkpoint;
    }
  }

  const char* tag = config.is_private ? "adac-oful" : "rs-oful";
  return std::move(recorder).finish(tag, config.is_private ? config.rho : 0.0,
                                    config.base_seed);
}

}  // namespace zcdpb
