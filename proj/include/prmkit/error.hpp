#pragma once

#include <stdexcept>
#include <string>

namespace prmkit {

enum class Errc {
  InvalidStepCount,
  EmptyAnnotation,
  EmptyPrediction,
  AnnotationMismatch,
  EmptyGroup,
  LengthMismatch,
  EmptyScores,
  ArityMismatch,
  AllCandidatesFailed,
  CacheMiss,
  CacheCorrupt,
  UnusableEvaluation,
  RemoteUnavailable,
  RemoteTimeout,
  EmptyBench,
  ClassMissing,
  NotValidated,
};

const char* errc_name(Errc code) noexcept;

/// Typed error carrying a stable code; `name()` is the code's wire name.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* name() const noexcept { return errc_name(code_); }

private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace prmkit
