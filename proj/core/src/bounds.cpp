#include "zcdpb/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace zcdpb {

double coupling_hamming_moment(const std::vector<double>& tv_profile) {
  double sum = 0.0, weighted = 0.0;
  for (double t : tv_profile) {
    if (!(t >= 0.0 && t <= 1.0)) {
      throw std::domain_error("coupling_hamming_moment: TV values must lie in [0,1]");
    }
    sum += t;
    weighted += t * (1.0 - t);
  }
  return sum * sum + weighted;
}

double kl_product_bound(const std::vector<double>& tv_profile, double rho) {
  if (rho < 0.0) throw std::domain_error("kl_product_bound: rho must be >= 0");
  return rho * coupling_hamming_moment(tv_profile);
}

double kl_interactive_bound(double mean_sum, double mean_weighted, double variance,
                            double rho) {
  if (mean_sum < 0.0 || mean_weighted < 0.0 || variance < 0.0 || rho < 0.0) {
    throw std::domain_error("kl_interactive_bound: nonnegative inputs required");
  }
  return rho * (mean_sum * mean_sum + mean_weighted + variance);
}

double minimax_lower_bound_finite(int K, double T, double rho) {
  if (K <= 1) throw std::domain_error("minimax_lower_bound_finite: K > 1 required");
  if (T < K - 1) throw std::domain_error("minimax_lower_bound_finite: T >= K-1 required");
  if (!(rho > 0.0 && rho <= 1.0)) {
    throw std::domain_error("minimax_lower_bound_finite: 0 < rho <= 1 required");
  }
  const double nonpriv = std::sqrt(T * (K - 1)) / 27.0;
  const double priv = std::sqrt((K - 1) / rho) / 124.0;
  return std::max(nonpriv, priv);
}

double minimax_lower_bound_linear(int d, double T, double rho) {
  if (d < 1) throw std::domain_error("minimax_lower_bound_linear: d >= 1 required");
  if (!(T > 0.0) || !(rho > 0.0)) {
    throw std::domain_error("minimax_lower_bound_linear: positive T and rho required");
  }
  const double nonpriv = std::exp(-2.0) * d * std::sqrt(T) / 8.0;
  const double priv = std::exp(-2.25) * d / (4.0 * std::sqrt(rho));
  return std::max(nonpriv, priv);
}

double privacy_regime_threshold(double T) {
  if (!(T >= 1.0)) throw std::domain_error("privacy_regime_threshold: T >= 1 required");
  return 4.0 * std::exp(-0.5) / T;
}

double theoretical_ub_adacucb(const std::vector<double>& gaps, double T, double beta,
                              double rho, UcbBoundVariant variant, int K) {
  if (!(beta > 3.0)) throw std::domain_error("theoretical_ub_adacucb: beta > 3 required");
  if (!(T > 1.0) || !(rho > 0.0)) {
    throw std::domain_error("theoretical_ub_adacucb: positive T and rho required");
  }
  const double logT = std::log(T);
  if (variant == UcbBoundVariant::dependent) {
    double total = 0.0;
    for (double gap : gaps) {
      if (!(gap > 0.0)) {
        throw std::domain_error("theoretical_ub_adacucb: gaps must be positive");
      }
      total += 8.0 * beta / gap * logT + 8.0 * std::sqrt(beta / rho) * std::sqrt(logT) +
               2.0 * beta / (beta - 3.0);
    }
    return total;
  }
  const int arms = (K > 0) ? K : static_cast<int>(gaps.size()) + 1;
  double gap_sum = 0.0;
  for (double gap : gaps) gap_sum += gap;
  return 4.0 * std::sqrt(2.0 * beta * arms * T * logT) +
         8.0 * arms * std::sqrt(beta * logT / rho) +
         3.0 * beta / (beta - 3.0) * gap_sum;
}

double gope_upper_bound_order(int d, int K, double T, double delta, double rho,
                              double A, double B) {
  if (d < 1 || K < 1 || !(T > 1.0) || !(delta > 0.0 && delta < 1.0) || !(rho > 0.0)) {
    throw std::domain_error("gope_upper_bound_order: invalid arguments");
  }
  const double l = std::log(K * std::log(T) / delta);
  return A * std::sqrt(d * T * l) + B * d / std::sqrt(rho) * std::sqrt(l) * std::log(T);
}

double oful_upper_bound_order(int d, double T, double rho, double A, double B) {
  if (d < 1 || !(T > 1.0) || !(rho > 0.0)) {
    throw std::domain_error("oful_upper_bound_order: invalid arguments");
  }
  const double logT = std::log(T);
  return A * d * logT * std::sqrt(T) + B * d * d / std::sqrt(rho) * logT * logT;
}

}  // namespace zcdpb
