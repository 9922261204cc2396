#pragma once

#include <stdexcept>
#include <string>

namespace plic {

enum class Errc {
  IdenticalElements,
  DegenerateFrame,
  UnknownId,
  UnmappedId,
  KindMismatch,
  CoordinateMismatch,
  GirthViolation,
  NotAPartition,
  NoCompatibleOrdering,
  NoValidMatching,
  NotCollinear,
  ExhaustedCandidates,
  SearchExhausted,
  InconsistentSignature,
  ParseError,
  ValidationError,
  ChartDegenerate,
  PreconditionViolated,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::IdenticalElements: return "IdenticalElements";
    case Errc::DegenerateFrame: return "DegenerateFrame";
    case Errc::UnknownId: return "UnknownId";
    case Errc::UnmappedId: return "UnmappedId";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::CoordinateMismatch: return "CoordinateMismatch";
    case Errc::GirthViolation: return "GirthViolation";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::NoCompatibleOrdering: return "NoCompatibleOrdering";
    case Errc::NoValidMatching: return "NoValidMatching";
    case Errc::NotCollinear: return "NotCollinear";
    case Errc::ExhaustedCandidates: return "ExhaustedCandidates";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::InconsistentSignature: return "InconsistentSignature";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::ChartDegenerate: return "ChartDegenerate";
    case Errc::PreconditionViolated: return "PreconditionViolated";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace plic
