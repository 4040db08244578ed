#ifndef HTG_ERROR_HPP
#define HTG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace htg {

enum class ErrorKind {
  BadParity,
  BadN,
  OutOfRange,
  Multigraph,
  BadEll,
  BadGcd,
  SameVertex,
  MismatchedFactor,
  NotSpanning,
  NoDecomposition,
  NoFlatEdges,
  Unsupported,
  TooLarge,
  SchemaError,
  VerificationFailed,
  InternalVerificationFailed,
};

const char* to_string(ErrorKind kind);

/// All library failures surface as Error; kind() tells callers (and the CLI
/// exit-code mapping) which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace htg

#endif
