#include "zcdpb/policy_finite.hpp"

#include <cmath>
#include <stdexcept>

namespace zcdpb {

double private_index(double window_mean, long long n_pair, long long t_ell,
                     double beta, double rho, bool is_private, RngStream& mech) {
  if (n_pair < 2) throw std::logic_error("private_index: n_pair >= 2 required");
  if (t_ell < 2) throw std::logic_error("private_index: t_ell >= 2 required");
  if (!(beta > 0.0)) throw std::logic_error("private_index: beta > 0 required");
  const double half = static_cast<double>(n_pair) / 2.0;
  double inside = 1.0 / (2.0 * half);
  double noise = 0.0;
  if (is_private) {
    if (!(rho > 0.0)) throw std::logic_error("private_index: rho > 0 required");
    inside += 1.0 / (rho * half * half);
    noise = std::sqrt(1.0 / (2.0 * rho * half * half)) * mech.normal();
  }
  const double bonus = std::sqrt(inside * beta * std::log(static_cast<double>(t_ell)));
  return window_mean + noise + bonus;
}

RegretTrace run_finite(const FiniteEnvironment& env, std::int64_t horizon,
                       const FinitePolicyConfig& config, FiniteRunLog* log) {
  const int K = env.num_arms();
  if (horizon < K) throw std::invalid_argument("run_finite: horizon must be >= K");

  RngStream env_rng = make_stream(config.base_seed, config.run, StreamKind::env);
  RngStream mech_rng = make_stream(config.base_seed, config.run, StreamKind::mechanism);

  RegretRecorder recorder(horizon, config.checkpoints);

  // Per-arm forgetting state: the last completed episode's sample count and
  // mean. The initialisation pull is that arm's first episode.
  std::vector<std::int64_t> window_count(K, 0);
  std::vector<double> window_mean(K, 0.0);
  std::vector<std::int64_t> pulls(K, 0);

  auto pull = [&](int arm, double& sum) {
    const double r = sample_reward(env, arm, env_rng);
    if (r < 0.0 || r > 1.0) {
      throw std::domain_error("run_finite: reward outside [0,1]");
    }
    sum += r;
    ++pulls[arm];
    recorder.record(suboptimality_gap(env, arm));
    if (log && log->record_actions) log->actions.push_back(arm);
  };

  std::int64_t t = 0;
  for (int a = 0; a < K && t < horizon; ++a) {
    double sum = 0.0;
    pull(a, sum);
    ++t;
    window_count[a] = 1;
    window_mean[a] = sum;
    if (log) log->episodes.push_back({a, t, 1, sum});
  }

  while (t < horizon) {
    const std::int64_t t_ell = t + 1;
    int best_arm = 0;
    double best_index = -std::numeric_limits<double>::infinity();
    for (int a = 0; a < K; ++a) {
      const double idx = private_index(window_mean[a], 2 * window_count[a], t_ell,
                                       config.beta, config.rho, config.is_private,
                                       mech_rng);
      if (idx > best_index) {  // ties go to the lowest arm index
        best_index = idx;
        best_arm = a;
      }
    }

    // Play the winner until its count doubles (or the horizon truncates).
    const std::int64_t target = 2 * pulls[best_arm];
    const std::int64_t start = t + 1;
    double sum = 0.0;
    std::int64_t drawn = 0;
    while (pulls[best_arm] < target && t < horizon) {
      pull(best_arm, sum);
      ++drawn;
      ++t;
    }
    if (pulls[best_arm] == target) {  // completed episode replaces the window
      window_count[best_arm] = drawn;
      window_mean[best_arm] = sum / static_cast<double>(drawn);
    }
    if (log) {
      log->episodes.push_back(
          {best_arm, start, drawn, drawn > 0 ? sum / static_cast<double>(drawn) : 0.0});
    }
  }

  const char* tag = config.is_private ? "adac-ucb" : "ucb";
  return std::move(recorder).finish(tag, config.is_private ? config.rho : 0.0,
                                    config.base_seed);
}

}  // namespace zcdpb
