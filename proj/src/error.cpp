#include "prmkit/error.hpp"

namespace prmkit {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidStepCount: return "InvalidStepCount";
    case Errc::EmptyAnnotation: return "EmptyAnnotation";
    case Errc::EmptyPrediction: return "EmptyPrediction";
    case Errc::AnnotationMismatch: return "AnnotationMismatch";
    case Errc::EmptyGroup: return "EmptyGroup";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::EmptyScores: return "EmptyScores";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::AllCandidatesFailed: return "AllCandidatesFailed";
    case Errc::CacheMiss: return "CacheMiss";
    case Errc::CacheCorrupt: return "CacheCorrupt";
    case Errc::UnusableEvaluation: return "UnusableEvaluation";
    case Errc::RemoteUnavailable: return "RemoteUnavailable";
    case Errc::RemoteTimeout: return "RemoteTimeout";
    case Errc::EmptyBench: return "EmptyBench";
    case Errc::ClassMissing: return "ClassMissing";
    case Errc::NotValidated: return "NotValidated";
  }
  return "UnknownError";
}

}  // namespace prmkit
