#pragma once

#include <stdexcept>
#include <string>

namespace h8ext {

enum class ErrorKind {
  InvalidInput,     // malformed or out-of-domain argument
  Nonexistent,      // the requested object does not exist (e.g. no factorization)
  Undefined,        // a symbol is undefined for the given arguments
  LocallyUnsolvable,
  SearchExhausted,  // a configured search bound ran out
  NonNormal,        // a Kummer generator fails the normality test
  BaseMismatch,     // field elements over different bases were combined
  DivisionByZero,
  Internal,         // an invariant that should hold by construction failed
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace h8ext
