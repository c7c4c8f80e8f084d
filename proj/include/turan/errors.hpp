#pragma once

#include <stdexcept>
#include <string>

namespace turan {

/// Raised when a requested enumeration would exceed its configured size cap.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a formula is evaluated outside the range where it is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace turan
