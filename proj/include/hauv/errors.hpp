#pragma once

#include <stdexcept>
#include <string>

namespace hauv {

// Every failure mode the library reports. CLI maps these to exit codes.
enum class ErrorCode {
  PitchSingularity,
  MissingCoefficient,
  UnknownCoefficient,
  SingularInertia,
  InvalidGeometry,
  IntegrationTooCoarse,
  ReynoldsOutOfRange,
  OverSpeed,
  WrongKind,
  DimensionMismatch,
  NumericalBlowup,
  MalformedLog,
  NoOverlap,
  RegionTooSmall,
  ConfigError,
  Timeout,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::PitchSingularity: return "PitchSingularity";
    case ErrorCode::MissingCoefficient: return "MissingCoefficient";
    case ErrorCode::UnknownCoefficient: return "UnknownCoefficient";
    case ErrorCode::SingularInertia: return "SingularInertia";
    case ErrorCode::InvalidGeometry: return "InvalidGeometry";
    case ErrorCode::IntegrationTooCoarse: return "IntegrationTooCoarse";
    case ErrorCode::ReynoldsOutOfRange: return "ReynoldsOutOfRange";
    case ErrorCode::OverSpeed: return "OverSpeed";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NumericalBlowup: return "NumericalBlowup";
    case ErrorCode::MalformedLog: return "MalformedLog";
    case ErrorCode::NoOverlap: return "NoOverlap";
    case ErrorCode::RegionTooSmall: return "RegionTooSmall";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::Timeout: return "Timeout";
  }
  return "UnknownError";
}

}  // namespace hauv
