#pragma once

#include <stdexcept>
#include <string>

namespace lrdens {

enum class ErrorKind {
  EmptyInput,
  ZeroLeadingCoefficient,
  IdenticallyZero,
  BadModulus,
  StateSpaceCapExceeded,
  SingularSystem,
  NotFiniteCase,
  NotSimpleRoots,
  BadPrime,
  ModulusCapExceeded,
  NotApplicable,
  DegenerateW,
  Degenerate,
  Inconsistency,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorKind::IdenticallyZero: return "IdenticallyZero";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::StateSpaceCapExceeded: return "StateSpaceCapExceeded";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::NotFiniteCase: return "NotFiniteCase";
    case ErrorKind::NotSimpleRoots: return "NotSimpleRoots";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::ModulusCapExceeded: return "ModulusCapExceeded";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::DegenerateW: return "DegenerateW";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::Inconsistency: return "Inconsistency";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace lrdens
