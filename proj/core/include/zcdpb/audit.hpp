#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "zcdpb/divergence.hpp"

namespace zcdpb {

/// Explicit decision tables for a finite-horizon policy over binary rewards.
/// tables[t] has (2K)^t rows of K probabilities: the history
/// (a_1, r_1, ..., a_t, r_t) is read as a base-2K string with per-step digit
/// a*2 + r, most significant digit first, and converted to the row index.
class FinitePolicy {
 public:
  FinitePolicy(int horizon, int num_arms,
               std::vector<std::vector<std::vector<double>>> tables);

  int horizon() const { return horizon_; }
  int num_arms() const { return num_arms_; }
  const std::vector<double>& row(int step, std::int64_t history_index) const;
  const std::vector<std::vector<std::vector<double>>>& tables() const {
    return tables_;
  }

  /// The three-step two-armed policy that separates View DP from Table DP.
  static FinitePolicy appendix_counterexample();

  /// Uniform-random rows (strictly positive), for property tests.
  static FinitePolicy random(int horizon, int num_arms, std::uint64_t seed);

 private:
  int horizon_;
  int num_arms_;
  std::vector<std::vector<std::vector<double>>> tables_;
};

using RewardList = std::vector<int>;                // {0,1}^T
using RewardTable = std::vector<std::vector<int>>;  // T rows, K binary entries
/// Deterministic adversary: maps the recommendations (o_1..o_t) to the query
/// action q_t.
using Adversary = std::function<int(const std::vector<int>&)>;

/// Exact action-sequence distribution (over K^T outcomes, lexicographic with
/// a_1 most significant) induced by the policy on a fixed reward list.
DiscreteDist policy_output_dist(const FinitePolicy& policy, const RewardList& rewards);

/// Same with rewards read along the trajectory of a potential-reward table.
DiscreteDist policy_output_dist(const FinitePolicy& policy, const RewardTable& table);

/// Distribution of the adversary's view (o_1, ..., o_T) under the query
/// protocol: rewards observed at the adversary's query actions.
DiscreteDist policy_output_dist(const FinitePolicy& policy, const RewardTable& table,
                                const Adversary& adversary);

enum class AuditMode { view, table, interactive };

struct AuditReport {
  std::string mode;
  std::string criterion;  // "approx_dp" or "zcdp"
  bool pass = false;
  double eps = 0.0;
  double delta = 0.0;
  double rho = 0.0;
  double worst = 0.0;        // worst delta* (approx_dp) or worst D_alpha - rho alpha
  double worst_alpha = 0.0;  // zcdp only
  std::vector<int> worst_first;   // flattened worst neighbour pair
  std::vector<int> worst_second;
  int adversaries_checked = 0;  // interactive mode scope
  std::string to_json() const;
};

/// Exhaustive (eps, delta) audit over all neighbouring reward lists (view),
/// tables (table), or tables x adversary library (interactive), both
/// directions of each pair.
AuditReport audit_approx_dp(const FinitePolicy& policy, double eps, double delta,
                            AuditMode mode);

/// zCDP audit on a finite alpha grid plus the max-divergence / alpha_max
/// proxy; sound but approximate for the all-alpha condition.
AuditReport audit_zcdp(const FinitePolicy& policy, double rho,
                       const std::vector<double>& alpha_grid, AuditMode mode);

/// Default audit grid: {1 + 2^-k, k = 0..10} plus {2, 4, 8, 16, 64}.
std::vector<double> default_alpha_grid();

/// Smallest eps for which the policy passes (eps, delta) in the given mode,
/// by bisection.
double min_epsilon(const FinitePolicy& policy, double delta, AuditMode mode,
                   double hi = 8.0, double tol = 1e-6);

/// Group-privacy decomposition: (lhs, rhs) with
/// lhs = sum_t KL(pi_t(.|H_{t-1}) || pi_t(.|H'_{t-1})) along a fixed action
/// sequence, rhs = rho * d_Ham(r, r')^2.
std::pair<double, double> group_privacy_check(const FinitePolicy& policy,
                                              const std::vector<int>& actions,
                                              const RewardList& r,
                                              const RewardList& r_prime, double rho);

/// Base mechanism taking a block of binary inputs to a distribution over a
/// fixed finite output alphabet.
struct FiniteMechanism {
  int output_size = 0;
  std::function<DiscreteDist(const std::vector<int>&)> apply;
};

/// Product mechanism obtained by applying the base mechanism to consecutive
/// blocks of the input. block_ends are strictly increasing and end at
/// input.size(); the output alphabet is output_size^blocks, last block least
/// significant.
DiscreteDist parallel_compose(const FiniteMechanism& mechanism,
                              const std::vector<int>& block_ends,
                              const std::vector<int>& input);

/// The deterministic adversaries the interactive mode quantifies over:
/// identity plus every constant action sequence; all deterministic
/// adversaries when their count fits the cap.
std::vector<Adversary> interactive_adversary_library(int horizon, int num_arms,
                                                     int max_enumerated = 20000);

}  // namespace zcdpb
