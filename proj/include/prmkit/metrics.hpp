#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prmkit/types.hpp"

namespace prmkit::metrics {

struct BenchSample {
  std::string id;
  ProcessAnnotation gold;
  std::vector<int> predicted;  // same length as gold
};

struct BenchCounts {
  std::size_t error_samples = 0;    // samples whose gold contains a 0
  std::size_t correct_samples = 0;  // samples whose gold is all 1s
  std::size_t step_tp = 0;          // gold 0, predicted 0
  std::size_t step_fp = 0;          // gold 1, predicted 0
  std::size_t step_fn = 0;          // gold 0, predicted 1
};

struct BenchReport {
  double fei_f1 = 0.0;
  double aei_f1 = 0.0;
  BenchCounts counts;
};

/// 1-based index of the first incorrect step; absent when every step is
/// correct.
std::optional<std::size_t> first_error_index(std::span<const int> labels);

/// First-error identification score: harmonic mean of the hit rate on
/// erroneous samples (predicted first error at the gold position) and the
/// clean rate on fully-correct samples (no predicted error). Zero when either
/// rate is zero; when one partition is empty the other rate is returned.
double fei_score(const std::vector<BenchSample>& samples);

/// All-error identification score: micro-averaged step-level F1 over the
/// pooled steps, with label 0 (error) as the positive class. 1.0 when there
/// are no gold positives and no predicted positives.
double aei_score(const std::vector<BenchSample>& samples);

BenchReport bench_run(const std::vector<BenchSample>& samples);

}  // namespace prmkit::metrics
