#pragma once

#include <vector>

namespace zcdpb {

/// E[d_Ham^2] of the maximal coupling of two product distributions whose
/// per-index total variations are t_i: (sum t_i)^2 + sum t_i (1 - t_i).
double coupling_hamming_moment(const std::vector<double>& tv_profile);

/// KL(M1 || M2) <= rho * E[d_Ham^2] for a rho-zCDP mechanism on product data.
double kl_product_bound(const std::vector<double>& tv_profile, double rho);

/// Interactive variant: rho * (mean_sum^2 + mean_weighted + variance), where
/// mean_sum = E[sum_t t_{a_t}], mean_weighted = E[sum_t t_{a_t}(1 - t_{a_t})]
/// and variance = Var(sum_t t_{a_t}).
double kl_interactive_bound(double mean_sum, double mean_weighted, double variance,
                            double rho);

/// Minimax regret lower bound for K-armed bandits under rho-zCDP:
/// max( sqrt(T(K-1))/27, sqrt((K-1)/rho)/124 ). Requires K > 1, T >= K-1 and
/// 0 < rho <= 1 as in the theorem.
double minimax_lower_bound_finite(int K, double T, double rho);

/// Minimax regret lower bound for linear bandits on [-1,1]^d:
/// max( e^{-2} d sqrt(T) / 8, e^{-2.25} d / (4 sqrt(rho)) ).
double minimax_lower_bound_linear(int d, double T, double rho);

/// Budget below which the private branch of the linear lower bound dominates:
/// 4 e^{-0.5} / T.
double privacy_regime_threshold(double T);

enum class UcbBoundVariant { dependent, minimax };

/// Explicit-constant regret upper bounds for the private episodic UCB:
/// dependent: sum_a (8 beta/Delta_a log T + 8 sqrt(beta/rho) sqrt(log T)
///                   + 2 beta/(beta-3));
/// minimax:   4 sqrt(2 beta K T log T) + 8 K sqrt(beta log T / rho)
///                   + 3 beta/(beta-3) sum_a Delta_a.
/// gaps: positive suboptimality gaps (one per suboptimal arm). K counts all
/// arms, i.e. gaps.size() + 1 optimal arms are allowed to be collapsed into K.
double theoretical_ub_adacucb(const std::vector<double>& gaps, double T, double beta,
                              double rho, UcbBoundVariant variant, int K = 0);

/// Order-form upper bounds with caller-supplied universal constants
/// (default 1); the theorems leave those constants unspecified.
double gope_upper_bound_order(int d, int K, double T, double delta, double rho,
                              double A = 1.0, double B = 1.0);
double oful_upper_bound_order(int d, double T, double rho, double A = 1.0,
                              double B = 1.0);

}  // namespace zcdpb
