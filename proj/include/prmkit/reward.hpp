#pragma once

#include <optional>
#include <span>
#include <vector>

#include "prmkit/parse.hpp"
#include "prmkit/types.hpp"

namespace prmkit::reward {

struct RewardConfig {
  double w_format = 0.1;
  double w_process = 0.9;
};

struct RewardBreakdown {
  int format_reward = 0;        // 0 or 1
  double process_reward = 0.0;  // in [0,1]
  double total = 0.0;
  int overall_gold = 0;
  std::optional<int> overall_pred;
};

/// 0 if any step label is 0, else 1.
int overall_label(std::span<const int> labels);

/// 1 iff the think block, the boxed step judgments, and the final JSON score
/// vector are all present. Length and boxed/JSON agreement do not matter here.
int format_reward(const parse::FormatCheck& check);

/// Per-step prediction accuracy, gated to zero whenever the overall verdicts
/// disagree. Positions past the end of a short prediction count as
/// mismatches; the denominator is always the gold length.
double process_reward(const ProcessAnnotation& gold,
                      std::span<const int> predicted);

double total_reward(int format, double process, const RewardConfig& config);

/// Full rollout reward: parse the generated text, score format compliance and
/// process accuracy against the gold annotation, combine with the configured
/// weights. The JSON score vector is the canonical prediction; when it is
/// absent (or empty) the process reward is zero and no overall prediction is
/// reported.
RewardBreakdown reward_rollout(const Solution& solution,
                               const ProcessAnnotation& gold,
                               const parse::RawOutput& raw,
                               const RewardConfig& config);

}  // namespace prmkit::reward
