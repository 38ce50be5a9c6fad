#include "zcdpb/mechanism.hpp"

#include <cmath>
#include <stdexcept>

namespace zcdpb {

PrivacyBudget PrivacyBudget::zCDP(double rho) {
  if (!(rho > 0.0)) throw std::domain_error("PrivacyBudget: rho must be positive");
  PrivacyBudget b;
  b.kind = Kind::zcdp;
  b.rho = rho;
  return b;
}

PrivacyBudget PrivacyBudget::ApproxDP(double eps, double delta) {
  if (!(eps > 0.0)) throw std::domain_error("PrivacyBudget: eps must be positive");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::domain_error("PrivacyBudget: delta must lie in (0,1)");
  }
  PrivacyBudget b;
  b.kind = Kind::approx_dp;
  b.eps = eps;
  b.delta = delta;
  return b;
}

PrivacyBudget PrivacyBudget::RDP(double alpha, double eps) {
  if (!(alpha > 1.0)) throw std::domain_error("PrivacyBudget: alpha must exceed 1");
  if (!(eps > 0.0)) throw std::domain_error("PrivacyBudget: eps must be positive");
  PrivacyBudget b;
  b.kind = Kind::rdp;
  b.alpha = alpha;
  b.eps = eps;
  return b;
}

double gaussian_sigma_sq(double sensitivity, const PrivacyBudget& budget) {
  if (!(sensitivity > 0.0)) {
    throw std::domain_error("gaussian_sigma_sq: sensitivity must be positive");
  }
  double b = 0.0;
  switch (budget.kind) {
    case PrivacyBudget::Kind::zcdp:
      b = 1.0 / (2.0 * budget.rho);
      break;
    case PrivacyBudget::Kind::approx_dp:
      b = (2.0 / (budget.eps * budget.eps)) * std::log(1.25 / budget.delta);
      break;
    case PrivacyBudget::Kind::rdp:
      b = budget.alpha / (2.0 * budget.eps);
      break;
  }
  return b * sensitivity * sensitivity;
}

Eigen::VectorXd add_gaussian_noise(const Eigen::VectorXd& v, double sigma_sq,
                                   RngStream& rng) {
  if (sigma_sq < 0.0) {
    throw std::domain_error("add_gaussian_noise: negative variance");
  }
  if (sigma_sq == 0.0) return v;
  const double sigma = std::sqrt(sigma_sq);
  Eigen::VectorXd out = v;
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) += sigma * rng.normal();
  return out;
}

double gaussian_renyi(double mu1, double mu2, double sigma_sq, double alpha) {
  if (!(sigma_sq > 0.0)) throw std::domain_error("gaussian_renyi: sigma^2 > 0 required");
  const double diff = mu1 - mu2;
  return alpha * diff * diff / (2.0 * sigma_sq);
}

double chi_square_norm_bound(int d, double delta) {
  if (d < 1 || !(delta > 0.0 && delta < 1.0)) {
    throw std::domain_error("chi_square_norm_bound: d >= 1 and delta in (0,1)");
  }
  const double l = std::log(1.0 / delta);
  return d + 2.0 * std::sqrt(d * l) + 2.0 * l;
}

}  // namespace zcdpb
