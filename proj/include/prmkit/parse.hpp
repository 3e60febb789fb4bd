#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace prmkit::parse {

/// Raw generated evaluation text. May be arbitrary bytes; every extractor
/// below is total on it.
struct RawOutput {
  std::string text;
};

/// One `\boxed{0|1}` marker found outside the think block. `position` is the
/// byte offset of the backslash in the original text.
struct BoxedJudgment {
  std::size_t position = 0;
  int value = 0;
};

struct ParsedEvaluation {
  std::optional<std::string> think;
  std::vector<BoxedJudgment> step_judgments;
  std::optional<std::vector<int>> score_vector;
};

struct FormatCheck {
  bool has_think = false;
  bool has_step_judge = false;
  bool has_final_judge = false;
  bool length_ok = false;
  bool consistent = false;
};

/// Content strictly between the first `<think>` and the next `</think>`,
/// whitespace preserved. Absent when either tag is missing or the close tag
/// precedes the open tag. Tags are matched as exact ASCII, case-sensitive.
std::optional<std::string> extract_think(const RawOutput& raw);

/// Every `\boxed{0}` / `\boxed{1}` marker in document order. Markers whose
/// braced content is anything else are skipped, and markers inside the think
/// block are deliberation rather than judgments, so they are excluded.
std::vector<BoxedJudgment> extract_step_judgments(const RawOutput& raw);

/// The last syntactically valid JSON object in the text whose "Score" key
/// holds an integer array. Returns the array only if every element is 0 or 1.
std::optional<std::vector<int>> extract_score_json(const RawOutput& raw);

/// Runs all three extractors. Pure and deterministic; never fails.
ParsedEvaluation parse_evaluation(const RawOutput& raw);

/// Structural presence report against an expected step count of n_steps.
/// `consistent` compares the boxed sequence against the score vector only
/// when both channels are populated and the boxed count equals n_steps;
/// it is vacuously true otherwise.
FormatCheck check_format(const ParsedEvaluation& parsed, std::size_t n_steps);

}  // namespace prmkit::parse
