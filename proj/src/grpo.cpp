#include "prmkit/grpo.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "prmkit/error.hpp"

namespace prmkit::grpo {

namespace {

double mean_of(std::span<const double> values) {
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

}  // namespace

std::vector<double> group_advantages(const RolloutGroup& group,
                                     double epsilon) {
  if (group.rewards.empty()) {
    raise(Errc::EmptyGroup, "group_advantages: empty rollout group");
  }
  const std::size_t n = group.rewards.size();
  const double mean = mean_of(group.rewards);
  double sq_sum = 0.0;
  for (const double r : group.rewards) {
    const double d = r - mean;
    sq_sum += d * d;
  }
  const double std_pop = std::sqrt(sq_sum / static_cast<double>(n));
  if (std_pop < epsilon) {
    return std::vector<double>(n, 0.0);
  }
  std::vector<double> advantages;
  advantages.reserve(n);
  for (const double r : group.rewards) {
    advantages.push_back((r - mean) / (std_pop + epsilon));
  }
  return advantages;
}

double kl_value(std::span<const double> logp_policy,
                std::span<const double> logp_reference) {
  if (logp_policy.size() != logp_reference.size() || logp_policy.empty()) {
    raise(Errc::LengthMismatch,
          "kl_value: log-prob vectors must be non-empty and equal length (" +
              std::to_string(logp_policy.size()) + " vs " +
              std::to_string(logp_reference.size()) + ")");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < logp_policy.size(); ++i) {
    const double delta = logp_reference[i] - logp_policy[i];
    sum += std::expm1(delta) - delta;
  }
  return sum / static_cast<double>(logp_policy.size());
}

ObjectiveSummary penalized_objective(const RolloutGroup& group,
                                     std::span<const double> kl_per_rollout,
                                     const KlConfig& config) {
  if (group.rewards.empty()) {
    raise(Errc::EmptyGroup, "penalized_objective: empty rollout group");
  }
  if (kl_per_rollout.size() != group.group_size()) {
    raise(Errc::LengthMismatch,
          "penalized_objective: kl vector length " +
              std::to_string(kl_per_rollout.size()) + " != group size " +
              std::to_string(group.group_size()));
  }
  ObjectiveSummary summary;
  summary.mean_reward = mean_of(group.rewards);
  summary.mean_kl = mean_of(kl_per_rollout);
  summary.objective_value = summary.mean_reward - config.beta * summary.mean_kl;
  return summary;
}

}  // namespace prmkit::grpo
