#include "zcdpb/policy_gope.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zcdpb/design.hpp"
#include "zcdpb/mechanism.hpp"

namespace zcdpb {

double gope_noise_tail(int d, double delta) {
  return chi_square_norm_bound(d, delta / 2.0);
}

double episode_length(int d, double beta_ell, double delta_kl, double rho) {
  if (d < 1 || !(beta_ell > 0.0) || !(delta_kl > 0.0 && delta_kl < 1.0)) {
    throw std::invalid_argument("episode_length: invalid arguments");
  }
  if (!(rho > 0.0)) throw std::invalid_argument("episode_length: rho must be positive");
  const double nonpriv = 8.0 * d / (beta_ell * beta_ell) * std::log(4.0 / delta_kl);
  if (std::isinf(rho)) return nonpriv;
  return nonpriv +
         2.0 * d / beta_ell * std::sqrt(2.0 / rho * gope_noise_tail(d, delta_kl));
}

Eigen::VectorXd private_theta(
    const std::vector<std::pair<Eigen::VectorXd, double>>& plays,
    const Eigen::MatrixXd& V, double rho, double c_ell, GopeNoiseMode mode,
    RngStream& mech) {
  if (plays.empty()) throw std::invalid_argument("private_theta: no plays");
  const auto d = V.rows();
  Eigen::VectorXd s = Eigen::VectorXd::Zero(d);
  for (const auto& [a, r] : plays) {
    if (r < -1.0 || r > 1.0) {
      throw std::domain_error("private_theta: reward outside [-1,1]");
    }
    s.noalias() += a * r;
  }
  Eigen::LLT<Eigen::MatrixXd> llt(V);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("private_theta: singular phase Gram matrix");
  }
  Eigen::VectorXd theta = llt.solve(s);
  if (mode == GopeNoiseMode::none || std::isinf(rho)) return theta;

  if (mode == GopeNoiseMode::half_power) {
    // V^{-1/2} N with N ~ N(0, 2d/(rho c_ell) I); V^{-1/2} taken symmetric.
    const double sigma = std::sqrt(2.0 * d / (rho * c_ell));
    Eigen::VectorXd n(d);
    for (Eigen::Index i = 0; i < d; ++i) n(i) = sigma * mech.normal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(V);
    Eigen::MatrixXd inv_sqrt = es.eigenvectors() *
                               es.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() *
                               es.eigenvectors().transpose();
    return theta + inv_sqrt * n;
  }

  // sum_noise: one N(0, 2/rho) draw per support action, in first-play order.
  std::vector<const Eigen::VectorXd*> support;
  for (const auto& [a, r] : plays) {
    bool seen = false;
    for (const auto* b : support) {
      if (*b == a) {
        seen = true;
        break;
      }
    }
    if (!seen) support.push_back(&a);
  }
  const double sigma = std::sqrt(2.0 / rho);
  Eigen::VectorXd noisy_sum = Eigen::VectorXd::Zero(d);
  for (const auto* a : support) noisy_sum.noalias() += (*a) * (sigma * mech.normal());
  return theta + llt.solve(noisy_sum);
}

std::vector<int> eliminate_arms(const std::vector<int>& active,
                                const std::vector<Eigen::VectorXd>& actions,
                                const Eigen::VectorXd& theta, double beta_ell) {
  if (active.empty()) throw std::invalid_argument("eliminate_arms: empty active set");
  double best = -std::numeric_limits<double>::infinity();
  for (int a : active) {
    best = std::max(best, theta.dot(actions[static_cast<std::size_t>(a)]));
  }
  std::vector<int> next;
  for (int a : active) {
    if (best - theta.dot(actions[static_cast<std::size_t>(a)]) <= 2.0 * beta_ell) {
      next.push_back(a);
    }
  }
  return next;
}

namespace {

// Orthonormal basis of span{actions[i] : i in active}; full identity when the
// active set still spans R^d.
Eigen::MatrixXd span_basis(const std::vector<int>& active,
                           const std::vector<Eigen::VectorXd>& actions) {
  const auto d = actions.front().size();
  Eigen::MatrixXd m(d, static_cast<Eigen::Index>(active.size()));
  for (std::size_t i = 0; i < active.size(); ++i) {
    m.col(static_cast<Eigen::Index>(i)) = actions[static_cast<std::size_t>(active[i])];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
  qr.setThreshold(1e-10);
  const auto r = qr.rank();
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(d, r);
  return q;
}

}  // namespace

RegretTrace run_gope(const LinearEnvironment& env, std::int64_t horizon,
                     const GopeConfig& config, GopeRunLog* log) {
  const int K = env.num_actions();
  const int ambient_d = env.dim();

  RngStream env_rng = make_stream(config.base_seed, config.run, StreamKind::env);
  RngStream mech_rng = make_stream(config.base_seed, config.run, StreamKind::mechanism);

  RegretRecorder recorder(horizon, config.checkpoints);

  std::vector<int> active(K);
  for (int i = 0; i < K; ++i) active[i] = i;

  int phase = 0;
  while (recorder.step() < horizon) {
    ++phase;
    const double beta_ell = std::pow(2.0, -phase);

    if (active.size() == 1) {
      // Only the winner is left; play it out.
      const double gap = suboptimality_gap(env, active.front());
      while (recorder.step() < horizon) {
        (void)sample_reward(env, active.front(), env_rng);
        recorder.record(gap);
      }
      break;
    }

    // Design and estimation happen in the span of the surviving arms.
    Eigen::MatrixXd basis = span_basis(active, env.actions);
    const int eff_d = static_cast<int>(basis.cols());
    std::vector<Eigen::VectorXd> reduced;
    reduced.reserve(active.size());
    for (int a : active) {
      reduced.push_back(basis.transpose() * env.actions[static_cast<std::size_t>(a)]);
    }

    Design design = frank_wolfe_goptimal(reduced, config.design_tol,
                                         config.design_max_iter);

    const double delta_kl =
        config.delta / (K * static_cast<double>(phase) * (phase + 1));
    const double c_ell = episode_length(ambient_d, beta_ell, delta_kl, config.rho);

    // Planned pulls per support action.
    std::vector<std::pair<int, std::int64_t>> schedule;  // (active index, count)
    std::int64_t planned = 0;
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (design.weights[i] > 0.0) {
        auto n = static_cast<std::int64_t>(std::ceil(c_ell * design.weights[i]));
        schedule.emplace_back(static_cast<int>(i), n);
        planned += n;
      }
    }

    Eigen::MatrixXd V = Eigen::MatrixXd::Zero(eff_d, eff_d);
    std::vector<std::pair<Eigen::VectorXd, double>> plays;
    plays.reserve(static_cast<std::size_t>(std::min<std::int64_t>(planned, horizon)));
    std::int64_t played = 0;
    for (const auto& [idx, count] : schedule) {
      const auto& full_action = env.actions[static_cast<std::size_t>(active[static_cast<std::size_t>(idx)])];
      const auto& red_action = reduced[static_cast<std::size_t>(idx)];
      const double gap = suboptimality_gap(env, full_action);
      for (std::int64_t i = 0; i < count && recorder.step() < horizon; ++i) {
        const double r = sample_reward(env, full_action, env_rng);
        recorder.record(gap);
        plays.emplace_back(red_action, r);
        V.noalias() += red_action * red_action.transpose();
        ++played;
      }
    }

    if (log) {
      log->phases.push_back({phase, static_cast<int>(active.size()),
                             design.support_size, eff_d, c_ell, planned, played});
    }
    if (plays.empty()) break;  // horizon hit before the phase started

    // Truncated phases still estimate from whatever was played.
    Eigen::VectorXd theta_reduced;
    try {
      theta_reduced = private_theta(plays, V, config.rho, c_ell,
                                    std::isinf(config.rho) ? GopeNoiseMode::none
                                                           : config.mode,
                                    mech_rng);
    } catch (const std::runtime_error&) {
      break;  // truncated phase left the Gram singular; keep the active set
    }
    Eigen::VectorXd theta = basis * theta_reduced;

    std::vector<int> survivors = eliminate_arms(active, env.actions, theta, beta_ell);
    active = std::move(survivors);
    if (log) log->active_sets.push_back(active);
  }

  const bool is_private = config.mode != GopeNoiseMode::none && !std::isinf(config.rho);
  const char* tag = !is_private ? "gope"
                    : (config.mode == GopeNoiseMode::half_power ? "adac-gope"
                                                                : "adac-gope-var");
  return std::move(recorder).finish(tag, is_private ? config.rho : 0.0,
                                    config.base_seed);
}

}  // namespace zcdpb
