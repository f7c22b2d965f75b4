#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace woct {

enum class ErrorKind {
  DegenerateParams,
  NotUnimodular,
  GridIncompatible,
  MuOffGrid,
  ZeroWindow,
  AsymmetricGrid,
  OffGridShift,
  GridMismatch,
  NonRealInput,
  OutOfRange,
  DomainError,
  K0Mismatch,
  ZeroSignal,
  DegenerateConcentration,
  BadSpec,
  MalformedHeader,
  TruncatedPayload,
  VersionMismatch,
  Io,
};

// Stable kebab-case names, used in CLI diagnostics and reports.
std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace woct
