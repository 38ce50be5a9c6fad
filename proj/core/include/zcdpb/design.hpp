#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

namespace zcdpb {

/// Design weights over an indexed action list. g is the squared criterion
/// max_a ||a||^2_{V(pi)^{-1}}; at a G-optimal design g = d (Kiefer-Wolfowitz,
/// stated there for the norm, hence squared here). f = log det V(pi).
struct Design {
  std::vector<double> weights;
  double g = 0.0;
  double f = 0.0;
  int support_size = 0;
  int iterations = 0;
};

struct DesignMetrics {
  double g = 0.0;
  double f = 0.0;
  int support_size = 0;
};

class DesignError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when max_iter is exhausted before g <= d (1 + tol); carries the
/// best iterate found.
class DesignConvergenceError : public DesignError {
 public:
  DesignConvergenceError(const std::string& what, Design best_iterate)
      : DesignError(what), best(std::move(best_iterate)) {}
  Design best;
};

/// Frank-Wolfe solver for the G-optimal design problem. Each step moves
/// toward the vertex maximising ||a||^2_{V^{-1}} with the exact D-optimal
/// line-search step gamma = (g/d - 1)/(g - 1). Actions must span R^d.
Design frank_wolfe_goptimal(const std::vector<Eigen::VectorXd>& actions,
                            double tol = 1e-2, int max_iter = 10000);

/// Exact criteria of a given design. A singular Gram matrix reports
/// g = +inf and f = -inf instead of throwing.
DesignMetrics design_metrics(const std::vector<double>& weights,
                             const std::vector<Eigen::VectorXd>& actions);

}  // namespace zcdpb
