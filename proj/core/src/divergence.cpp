#include "zcdpb/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zcdpb {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double log_sum_exp(const std::vector<double>& terms) {
  if (terms.empty()) return -kInf;
  double m = *std::max_element(terms.begin(), terms.end());
  if (m == -kInf) return -kInf;
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - m);
  return m + std::log(acc);
}
}  // namespace

DiscreteDist::DiscreteDist(std::vector<double> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw std::invalid_argument("DiscreteDist: empty support");
  double sum = 0.0;
  for (double w : w_) {
    if (!(w >= 0.0)) throw std::invalid_argument("DiscreteDist: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("DiscreteDist: weights must sum to 1");
  }
}

double kl_divergence(const DiscreteDist& p, const DiscreteDist& q) {
  if (p.size() != q.size()) throw std::invalid_argument("kl: size mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return kInf;
    acc += p[i] * std::log(p[i] / q[i]);
  }
  return std::max(acc, 0.0);
}

double renyi_divergence(const DiscreteDist& p, const DiscreteDist& q, double alpha) {
  if (p.size() != q.size()) throw std::invalid_argument("renyi: size mismatch");
  if (!(alpha > 0.0)) throw std::invalid_argument("renyi: alpha must be positive");
  if (alpha == 1.0) return kl_divergence(p, q);
  std::vector<double> terms;
  terms.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;  // p^alpha = 0 for alpha > 0
    if (q[i] == 0.0) {
      if (alpha > 1.0) return kInf;
      continue;  // alpha < 1: q^{1-alpha} = 0
    }
    terms.push_back(alpha * std::log(p[i]) + (1.0 - alpha) * std::log(q[i]));
  }
  double val = log_sum_exp(terms) / (alpha - 1.0);
  return std::max(val, 0.0);
}

double max_divergence(const DiscreteDist& p, const DiscreteDist& q) {
  if (p.size() != q.size()) throw std::invalid_argument("max_divergence: size mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return kInf;
    worst = std::max(worst, std::log(p[i] / q[i]));
  }
  return worst;
}

double total_variation(const DiscreteDist& p, const DiscreteDist& q) {
  return approx_dp_delta(p, q, 0.0);
}

double approx_dp_delta(const DiscreteDist& p, const DiscreteDist& q, double eps) {
  if (p.size() != q.size()) throw std::invalid_argument("approx_dp_delta: size mismatch");
  if (eps < 0.0) throw std::invalid_argument("approx_dp_delta: eps must be >= 0");
  const double e = std::exp(eps);
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += std::max(p[i] - e * q[i], 0.0);
  }
  return acc;
}

}  // namespace zcdpb
