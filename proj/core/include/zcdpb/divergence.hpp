#pragma once

#include <limits>
#include <vector>

namespace zcdpb {

/// Probability distribution over a finite outcome set {0, ..., n-1}.
class DiscreteDist {
 public:
  explicit DiscreteDist(std::vector<double> weights);

  std::size_t size() const { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }
  const std::vector<double>& weights() const { return w_; }

 private:
  std::vector<double> w_;
};

/// KL(P || Q) with the conventions 0 log(0/q) = 0 and p log(p/0) = +inf.
double kl_divergence(const DiscreteDist& p, const DiscreteDist& q);

/// Renyi divergence D_alpha(P || Q) for alpha > 0; alpha = 1 returns the KL.
/// Accumulated in log space so large alpha does not overflow. +inf when P is
/// not absolutely continuous w.r.t. Q (alpha >= 1).
double renyi_divergence(const DiscreteDist& p, const DiscreteDist& q, double alpha);

/// Max divergence D_inf = max_x log(p/q) over the support of P.
double max_divergence(const DiscreteDist& p, const DiscreteDist& q);

double total_variation(const DiscreteDist& p, const DiscreteDist& q);

/// Optimal delta for the (eps, delta)-DP inequality between P and Q:
/// delta* = sum_x max(P(x) - e^eps Q(x), 0). Equals the supremum over all
/// events; eps = 0 gives the total variation distance.
double approx_dp_delta(const DiscreteDist& p, const DiscreteDist& q, double eps);

}  // namespace zcdpb
