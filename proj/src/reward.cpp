#include "prmkit/reward.hpp"

#include <algorithm>

#include "prmkit/error.hpp"

namespace prmkit::reward {

int overall_label(std::span<const int> labels) {
  if (labels.empty()) {
    raise(Errc::EmptyAnnotation, "overall_label: empty label vector");
  }
  return std::all_of(labels.begin(), labels.end(), [](int v) { return v != 0; })
             ? 1
             : 0;
}

int format_reward(const parse::FormatCheck& check) {
  return (check.has_think && check.has_step_judge && check.has_final_judge) ? 1
                                                                            : 0;
}

double process_reward(const ProcessAnnotation& gold,
                      std::span<const int> predicted) {
  if (predicted.empty()) {
    raise(Errc::EmptyPrediction, "process_reward: empty prediction vector");
  }
  const int gold_overall = overall_label(gold.labels);
  const int pred_overall = overall_label(predicted);
  if (gold_overall != pred_overall) return 0.0;
  const std::size_t n = gold.labels.size();
  std::size_t matches = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < predicted.size() && predicted[i] == gold.labels[i]) ++matches;
  }
  return static_cast<double>(matches) / static_cast<double>(n);
}

double total_reward(int format, double process, const RewardConfig& config) {
  return config.w_format * format + config.w_process * process;
}

RewardBreakdown reward_rollout(const Solution& solution,
                               const ProcessAnnotation& gold,
                               const parse::RawOutput& raw,
                               const RewardConfig& config) {
  if (gold.labels.size() != solution.steps.size()) {
    raise(Errc::AnnotationMismatch,
          "reward_rollout: annotation length " +
              std::to_string(gold.labels.size()) + " != step count " +
              std::to_string(solution.steps.size()));
  }
  const parse::ParsedEvaluation parsed = parse::parse_evaluation(raw);
  const parse::FormatCheck check =
      parse::check_format(parsed, gold.labels.size());

  RewardBreakdown breakdown;
  breakdown.format_reward = format_reward(check);
  breakdown.overall_gold = overall_label(gold.labels);
  if (parsed.score_vector && !parsed.score_vector->empty()) {
    breakdown.overall_pred = overall_label(*parsed.score_vector);
    breakdown.process_reward = process_reward(gold, *parsed.score_vector);
  }
  breakdown.total =
      total_reward(breakdown.format_reward, breakdown.process_reward, config);
  return breakdown;
}

}  // namespace prmkit::reward
