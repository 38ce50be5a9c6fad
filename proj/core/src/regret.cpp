#include "zcdpb/regret.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zcdpb {

double RegretTrace::regret_at(std::int64_t t) const {
  auto it = std::upper_bound(steps.begin(), steps.end(), t);
  if (it == steps.begin()) return 0.0;
  return regret[static_cast<std::size_t>(std::distance(steps.begin(), it)) - 1];
}

std::vector<std::int64_t> log_checkpoints(std::int64_t horizon, int count) {
  if (horizon < 1) throw std::invalid_argument("log_checkpoints: horizon >= 1");
  if (count < 1) throw std::invalid_argument("log_checkpoints: count >= 1");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(count));
  const double lo = 0.0, hi = std::log(static_cast<double>(horizon));
  for (int i = 0; i < count; ++i) {
    double x = (count == 1) ? hi : lo + (hi - lo) * i / (count - 1);
    auto t = static_cast<std::int64_t>(std::llround(std::exp(x)));
    t = std::clamp<std::int64_t>(t, 1, horizon);
    if (out.empty() || t > out.back()) out.push_back(t);
  }
  if (out.back() != horizon) out.push_back(horizon);
  return out;
}

RegretRecorder::RegretRecorder(std::int64_t horizon, int checkpoint_count)
    : checkpoints_(log_checkpoints(horizon, checkpoint_count)) {
  values_.reserve(checkpoints_.size());
}

void RegretRecorder::record(double gap) {
  ++step_;
  cumulative_ += gap;
  while (next_ < checkpoints_.size() && checkpoints_[next_] == step_) {
    values_.push_back(cumulative_);
    ++next_;
  }
}

RegretTrace RegretRecorder::finish(std::string algo, double rho,
                                   std::uint64_t run_seed) && {
  RegretTrace trace;
  trace.steps.assign(checkpoints_.begin(),
                     checkpoints_.begin() + static_cast<std::ptrdiff_t>(values_.size()));
  trace.regret = std::move(values_);
  trace.algo = std::move(algo);
  trace.rho = rho;
  trace.run_seed = run_seed;
  return trace;
}

}  // namespace zcdpb
