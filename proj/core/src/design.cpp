#include "zcdpb/design.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace zcdpb {

namespace {

constexpr double kRidge = 1e-10;       // stabiliser inside the inverse only
constexpr double kTruncate = 1e-6;     // weight-truncation threshold

Eigen::MatrixXd gram(const std::vector<double>& w,
                     const std::vector<Eigen::VectorXd>& actions) {
  const auto d = actions.front().size();
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (w[i] > 0.0) v.noalias() += w[i] * actions[i] * actions[i].transpose();
  }
  return v;
}

// Squared V^{-1}-norms of all actions; g = max. Ridge keeps early singular
// iterates invertible.
double criterion(const Eigen::MatrixXd& v, const std::vector<Eigen::VectorXd>& actions,
                 std::vector<double>& norms) {
  const auto d = v.rows();
  Eigen::LLT<Eigen::MatrixXd> llt(v + kRidge * Eigen::MatrixXd::Identity(d, d));
  double g = 0.0;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    norms[i] = actions[i].dot(llt.solve(actions[i]));
    g = std::max(g, norms[i]);
  }
  return g;
}

int rank_of(const std::vector<Eigen::VectorXd>& actions) {
  const auto d = actions.front().size();
  Eigen::MatrixXd m(d, static_cast<Eigen::Index>(actions.size()));
  for (std::size_t i = 0; i < actions.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = actions[i];
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
  qr.setThreshold(1e-10);
  return static_cast<int>(qr.rank());
}

}  // namespace

Design frank_wolfe_goptimal(const std::vector<Eigen::VectorXd>& actions, double tol,
                            int max_iter) {
  if (actions.empty()) throw DesignError("frank_wolfe_goptimal: empty action set");
  if (!(tol > 0.0)) throw DesignError("frank_wolfe_goptimal: tol must be positive");
  const auto d = actions.front().size();
  for (const auto& a : actions) {
    if (a.size() != d) throw DesignError("frank_wolfe_goptimal: mixed dimensions");
  }

  const int dd = static_cast<int>(d);
  if (rank_of(actions) < dd) {
    throw DesignError("frank_wolfe_goptimal: actions do not span R^d");
  }

  // Initialise uniformly over a rank-completing subset (column pivots).
  std::vector<double> w(actions.size(), 0.0);
  {
    Eigen::MatrixXd m(d, static_cast<Eigen::Index>(actions.size()));
    for (std::size_t i = 0; i < actions.size(); ++i) {
      m.col(static_cast<Eigen::Index>(i)) = actions[i];
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
    for (int j = 0; j < dd; ++j) {
      w[static_cast<std::size_t>(qr.colsPermutation().indices()(j))] = 1.0 / dd;
    }
  }

  Eigen::MatrixXd v = gram(w, actions);
  std::vector<double> norms(actions.size(), 0.0);
  const double target = dd * (1.0 + tol);

  double g = criterion(v, actions, norms);
  int iter = 0;
  while (g > target && iter < max_iter) {
    const auto best =
        std::distance(norms.begin(), std::max_element(norms.begin(), norms.end()));
    // Exact line search for the D-optimal objective.
    const double gamma = (g / dd - 1.0) / (g - 1.0);
    for (auto& wi : w) wi *= (1.0 - gamma);
    w[static_cast<std::size_t>(best)] += gamma;
    v = (1.0 - gamma) * v;
    v.noalias() += gamma * actions[static_cast<std::size_t>(best)] *
                   actions[static_cast<std::size_t>(best)].transpose();
    g = criterion(v, actions, norms);
    ++iter;
  }

  auto pack = [&](const std::vector<double>& weights, double gval, int iters) {
    Design out;
    out.weights = weights;
    DesignMetrics m = design_metrics(weights, actions);
    out.g = gval;
    out.f = m.f;
    out.support_size = m.support_size;
    out.iterations = iters;
    return out;
  };

  if (g > target) {
    throw DesignConvergenceError("frank_wolfe_goptimal: max_iter exceeded",
                                 pack(w, g, iter));
  }

  // Drop negligible weights; keep the truncated design only if it still
  // certifies the tolerance.
  std::vector<double> trunc = w;
  double total = 0.0;
  for (auto& wi : trunc) {
    if (wi < kTruncate) wi = 0.0;
    total += wi;
  }
  if (total > 0.0) {
    for (auto& wi : trunc) wi /= total;
    Eigen::MatrixXd vt = gram(trunc, actions);
    std::vector<double> tnorms(actions.size(), 0.0);
    double gt = criterion(vt, actions, tnorms);
    if (gt <= target) return pack(trunc, gt, iter);
  }
  return pack(w, g, iter);
}

DesignMetrics design_metrics(const std::vector<double>& weights,
                             const std::vector<Eigen::VectorXd>& actions) {
  if (weights.size() != actions.size() || actions.empty()) {
    throw DesignError("design_metrics: weights/actions mismatch");
  }
  double sum = 0.0;
  for (double wi : weights) {
    if (wi < 0.0) throw DesignError("design_metrics: negative weight");
    sum += wi;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw DesignError("design_metrics: weights must sum to 1");

  DesignMetrics out;
  for (double wi : weights) out.support_size += (wi > 0.0) ? 1 : 0;

  Eigen::MatrixXd v = gram(weights, actions);
  Eigen::LLT<Eigen::MatrixXd> llt(v);
  if (llt.info() != Eigen::Success) {
    out.g = std::numeric_limits<double>::infinity();
    out.f = -std::numeric_limits<double>::infinity();
    return out;
  }
  double logdet = 0.0;
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    logdet += 2.0 * std::log(llt.matrixL()(i, i));
  }
  out.f = logdet;
  double g = 0.0;
  for (const auto& a : actions) g = std::max(g, a.dot(llt.solve(a)));
  out.g = g;
  return out;
}

}  // namespace zcdpb
