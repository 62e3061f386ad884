#ifndef TRACKZERO_ERROR_HPP
#define TRACKZERO_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tz {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed expression text. position is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Operands live on incompatible domains, or a generator is used outside its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An interval certificate could not be produced within the configured depth.
class CertificationError : public Error {
 public:
  using Error::Error;
};

// A precondition of a harness or algorithm does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace tz

#endif
