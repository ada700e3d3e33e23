#ifndef GQE_ERROR_HPP
#define GQE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gqe {

enum class ErrorKind {
  ZeroPolynomial,
  NotDivisible,
  ConeViolation,
  EmptyExtendedIndex,
  InvalidDimension,
  DegenerateProfile,
  NoRootInWindow,
  UnresolvedSign,
  EndpointSingularity,
  InvalidInput,
};

inline const char *to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
  case ErrorKind::NotDivisible: return "NotDivisible";
  case ErrorKind::ConeViolation: return "ConeViolation";
  case ErrorKind::EmptyExtendedIndex: return "EmptyExtendedIndex";
  case ErrorKind::InvalidDimension: return "InvalidDimension";
  case ErrorKind::DegenerateProfile: return "DegenerateProfile";
  case ErrorKind::NoRootInWindow: return "NoRootInWindow";
  case ErrorKind::UnresolvedSign: return "UnresolvedSign";
  case ErrorKind::EndpointSingularity: return "EndpointSingularity";
  case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace gqe

#endif
