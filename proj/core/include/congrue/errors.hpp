#ifndef CONGRUE_ERRORS_HPP
#define CONGRUE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace congrue {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A rational polynomial does not map the integers into the integers.
struct NotIntegerValued : Error {
  using Error::Error;
};

// A partial map violates the pairwise divisibility (x-y) | f(x)-f(y).
struct NotPreserving : Error {
  using Error::Error;
};

struct DomainExceedsTower : Error {
  using Error::Error;
};

struct CarrierTooLarge : Error {
  using Error::Error;
};

struct OutOfRange : Error {
  using Error::Error;
};

struct NotResiduated : Error {
  using Error::Error;
};

struct NotDistributive : Error {
  using Error::Error;
};

struct IndexTooLarge : Error {
  using Error::Error;
};

// Tripwires: conditions the theory says are unreachable. Surfaced, never
// swallowed.
struct InternalUnsolvable : Error {
  using Error::Error;
};

struct CertificateViolation : Error {
  using Error::Error;
};

struct NotIsometric : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace congrue

#endif
