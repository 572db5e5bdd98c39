#pragma once

#include <stdexcept>
#include <string>

namespace elastica {

/// Failure classes raised by the library. Split into two groups for the CLI:
/// parameter/usage errors (rejected before any numerics run) and numerical
/// failures (guards tripped, iterations diverged, data out of contract).
enum class Errc {
  // parameter / usage
  InvalidArgument,
  ParamsExcluded,
  MExcluded,
  AlphaExcluded,
  ExponentDegenerate,
  ExpRequiresNonzeroVarpi,
  StepTooLarge,
  IoError,
  // numerical / data
  NonMonotonicArcLength,
  TangentInconsistent,
  CurvatureInconsistent,
  DomainViolation,
  HeightVanished,
  HeightNonpositive,
  StepFailure,
  ShootingDiverged,
  DegenerateFit,
  RequiresClosed,
  DivergentVolume,
  NonZeroBoundary,
  GridTooCoarse,
  BoundaryMismatch,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParamsExcluded: return "ParamsExcluded";
    case Errc::MExcluded: return "MExcluded";
    case Errc::AlphaExcluded: return "AlphaExcluded";
    case Errc::ExponentDegenerate: return "ExponentDegenerate";
    case Errc::ExpRequiresNonzeroVarpi: return "ExpRequiresNonzeroVarpi";
    case Errc::StepTooLarge: return "StepTooLarge";
    case Errc::IoError: return "IoError";
    case Errc::NonMonotonicArcLength: return "NonMonotonicArcLength";
    case Errc::TangentInconsistent: return "TangentInconsistent";
    case Errc::CurvatureInconsistent: return "CurvatureInconsistent";
    case Errc::DomainViolation: return "DomainViolation";
    case Errc::HeightVanished: return "HeightVanished";
    case Errc::HeightNonpositive: return "HeightNonpositive";
    case Errc::StepFailure: return "StepFailure";
    case Errc::ShootingDiverged: return "ShootingDiverged";
    case Errc::DegenerateFit: return "DegenerateFit";
    case Errc::RequiresClosed: return "RequiresClosed";
    case Errc::DivergentVolume: return "DivergentVolume";
    case Errc::NonZeroBoundary: return "NonZeroBoundary";
    case Errc::GridTooCoarse: return "GridTooCoarse";
    case Errc::BoundaryMismatch: return "BoundaryMismatch";
  }
  return "Unknown";
}

/// True for errors the CLI maps to exit code 2 (usage) rather than 1.
inline bool errc_is_usage(Errc c) {
  switch (c) {
    case Errc::InvalidArgument:
    case Errc::ParamsExcluded:
    case Errc::MExcluded:
    case Errc::AlphaExcluded:
    case Errc::ExponentDegenerate:
    case Errc::ExpRequiresNonzeroVarpi:
    case Errc::StepTooLarge:
    case Errc::IoError:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace elastica
