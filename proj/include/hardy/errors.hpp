#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument or malformed input: the caller asked for something outside
// an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The adaptive certifier could not shrink its interval to the requested
// tolerance within its segment budget.
class CertificationError : public Error {
 public:
  using Error::Error;
};

// A verified inequality or identity failed beyond its tolerance.
class ClaimViolation : public Error {
 public:
  using Error::Error;
};

// A Pick problem was asked to solve at a norm bound it cannot meet.
class InfeasibleError : public ClaimViolation {
 public:
  InfeasibleError(const std::string& what, double min_eigenvalue)
      : ClaimViolation(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

}  // namespace hardy
