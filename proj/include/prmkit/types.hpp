#pragma once

#include <optional>
#include <string>
#include <vector>

namespace prmkit {

/// A candidate solution: problem statement plus its ordered reasoning steps.
/// The image reference is an opaque path/URI passed through untouched.
struct Solution {
  std::string id;
  std::optional<std::string> image_ref;
  std::string problem;
  std::vector<std::string> steps;

  std::size_t step_count() const noexcept { return steps.size(); }
};

/// Gold per-step binary labels, 1 = step correct, 0 = step incorrect.
struct ProcessAnnotation {
  std::vector<int> labels;

  std::size_t size() const noexcept { return labels.size(); }
};

/// Per-step scores in [0,1], one entry per solution step.
struct StepScores {
  std::vector<double> scores;
};

struct ChatMessage {
  std::string role;
  std::string content;
};

}  // namespace prmkit
