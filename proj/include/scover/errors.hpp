#ifndef SCOVER_ERRORS_HPP_
#define SCOVER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace scover {

// Malformed or out-of-range user input (empty words, bad tokens, k too big).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A search exceeded its configured budget before reaching a verdict.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// The request is well formed but needs a value we do not know, e.g. gamma(k)
// for k > 4.
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what)
      : std::runtime_error(what) {}
};

// A documented precondition of an operation was not met by the caller.
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace scover

#endif  // SCOVER_ERRORS_HPP_
