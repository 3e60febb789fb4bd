#include "prmkit/metrics.hpp"

#include <algorithm>

#include "prmkit/error.hpp"

namespace prmkit::metrics {

namespace {

void require_non_empty(const std::vector<BenchSample>& samples,
                       const char* who) {
  if (samples.empty()) {
    raise(Errc::EmptyBench, std::string(who) + ": no samples");
  }
}

void require_aligned(const std::vector<BenchSample>& samples) {
  std::string offenders;
  for (const auto& s : samples) {
    if (s.predicted.size() != s.gold.labels.size()) {
      if (!offenders.empty()) offenders += ", ";
      offenders += s.id;
    }
  }
  if (!offenders.empty()) {
    raise(Errc::AnnotationMismatch,
          "bench: predicted/gold length mismatch for samples: " + offenders);
  }
}

}  // namespace

std::optional<std::size_t> first_error_index(std::span<const int> labels) {
  if (labels.empty()) {
    raise(Errc::EmptyAnnotation, "first_error_index: empty label vector");
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == 0) return i + 1;
  }
  return std::nullopt;
}

double fei_score(const std::vector<BenchSample>& samples) {
  require_non_empty(samples, "fei_score");
  std::size_t erroneous = 0, erroneous_hit = 0;
  std::size_t correct = 0, correct_hit = 0;
  for (const auto& s : samples) {
    const auto gold_first = first_error_index(s.gold.labels);
    std::optional<std::size_t> pred_first;
    if (!s.predicted.empty()) pred_first = first_error_index(s.predicted);
    if (gold_first) {
      ++erroneous;
      if (pred_first && *pred_first == *gold_first) ++erroneous_hit;
    } else {
      ++correct;
      if (!pred_first && !s.predicted.empty()) ++correct_hit;
    }
  }
  if (erroneous == 0 && correct == 0) return 0.0;  // unreachable: non-empty
  if (erroneous == 0) {
    return static_cast<double>(correct_hit) / static_cast<double>(correct);
  }
  if (correct == 0) {
    return static_cast<double>(erroneous_hit) / static_cast<double>(erroneous);
  }
  const double acc_err =
      static_cast<double>(erroneous_hit) / static_cast<double>(erroneous);
  const double acc_corr =
      static_cast<double>(correct_hit) / static_cast<double>(correct);
  if (acc_err == 0.0 || acc_corr == 0.0) return 0.0;
  return 2.0 * acc_err * acc_corr / (acc_err + acc_corr);
}

double aei_score(const std::vector<BenchSample>& samples) {
  require_non_empty(samples, "aei_score");
  std::size_t tp = 0, fp = 0, fn = 0;
  for (const auto& s : samples) {
    const std::size_t n = std::min(s.gold.labels.size(), s.predicted.size());
    for (std::size_t i = 0; i < n; ++i) {
      const bool gold_err = s.gold.labels[i] == 0;
      const bool pred_err = s.predicted[i] == 0;
      if (gold_err && pred_err) ++tp;
      if (!gold_err && pred_err) ++fp;
      if (gold_err && !pred_err) ++fn;
    }
  }
  if (tp == 0 && fp == 0 && fn == 0) return 1.0;
  return 2.0 * static_cast<double>(tp) /
         (2.0 * static_cast<double>(tp) + static_cast<double>(fp) +
          static_cast<double>(fn));
}

BenchReport bench_run(const std::vector<BenchSample>& samples) {
  require_non_empty(samples, "bench_run");
  require_aligned(samples);
  BenchReport report;
  for (const auto& s : samples) {
    if (first_error_index(s.gold.labels)) {
      ++report.counts.error_samples;
    } else {
      ++report.counts.correct_samples;
    }
    for (std::size_t i = 0; i < s.gold.labels.size(); ++i) {
      const bool gold_err = s.gold.labels[i] == 0;
      const bool pred_err = s.predicted[i] == 0;
      if (gold_err && pred_err) ++report.counts.step_tp;
      if (!gold_err && pred_err) ++report.counts.step_fp;
      if (gold_err && !pred_err) ++report.counts.step_fn;
    }
  }
  report.fei_f1 = fei_score(samples);
  report.aei_f1 = aei_score(samples);
  return report;
}

}  // namespace prmkit::metrics
