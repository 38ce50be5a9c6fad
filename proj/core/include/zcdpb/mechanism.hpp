#pragma once

#include <Eigen/Dense>

#include "zcdpb/rng.hpp"

namespace zcdpb {

/// Budget for calibrating the Gaussian mechanism. The noise multiplier b in
/// sigma^2 = b * s^2 is 1/(2 rho) for zCDP, (2/eps^2) log(1.25/delta) for
/// (eps, delta)-DP and alpha/(2 eps) for (alpha, eps)-RDP.
struct PrivacyBudget {
  enum class Kind { zcdp, approx_dp, rdp };

  Kind kind = Kind::zcdp;
  double rho = 0.0;
  double eps = 0.0;
  double delta = 0.0;
  double alpha = 0.0;

  static PrivacyBudget zCDP(double rho);
  static PrivacyBudget ApproxDP(double eps, double delta);
  static PrivacyBudget RDP(double alpha, double eps);
};

/// Gaussian-mechanism variance for a statistic with L2 sensitivity s.
double gaussian_sigma_sq(double sensitivity, const PrivacyBudget& budget);

/// v + z with z ~ N(0, sigma_sq I). sigma_sq = 0 returns v unchanged.
Eigen::VectorXd add_gaussian_noise(const Eigen::VectorXd& v, double sigma_sq,
                                   RngStream& rng);

/// Renyi divergence of order alpha between N(mu1, sigma^2) and N(mu2, sigma^2):
/// alpha (mu1 - mu2)^2 / (2 sigma^2). With sigma^2 = s^2/(2 rho) this equals
/// rho * alpha, i.e. the zCDP constraint holds with equality.
double gaussian_renyi(double mu1, double mu2, double sigma_sq, double alpha);

/// High-probability bound on ||N(0, I_d)||^2: d + 2 sqrt(d log(1/delta)) +
/// 2 log(1/delta), exceeded with probability at most delta.
double chi_square_norm_bound(int d, double delta);

}  // namespace zcdpb
