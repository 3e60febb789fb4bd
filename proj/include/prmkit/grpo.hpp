#pragma once

#include <span>
#include <vector>

namespace prmkit::grpo {

/// Rewards of one group of sampled rollouts for the same prompt.
struct RolloutGroup {
  std::vector<double> rewards;

  std::size_t group_size() const noexcept { return rewards.size(); }
};

struct KlConfig {
  double beta = 1e-6;
};

struct ObjectiveSummary {
  double mean_reward = 0.0;
  double mean_kl = 0.0;
  double objective_value = 0.0;
};

/// Group-relative advantages: (r_i - mean) / (population std + epsilon).
/// Degenerate groups (population std below epsilon) map to all zeros.
std::vector<double> group_advantages(const RolloutGroup& group,
                                     double epsilon = 1e-8);

/// Mean over positions of exp(d) - d - 1 with d = reference - policy.
/// Non-negative for any inputs, zero iff the vectors agree.
double kl_value(std::span<const double> logp_policy,
                std::span<const double> logp_reference);

/// mean(rewards) - beta * mean(kl). Diagnostic value only.
ObjectiveSummary penalized_objective(const RolloutGroup& group,
                                     std::span<const double> kl_per_rollout,
                                     const KlConfig& config);

}  // namespace prmkit::grpo
