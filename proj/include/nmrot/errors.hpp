#pragma once

#include <stdexcept>
#include <string>

namespace nmrot {

enum class ErrorKind {
  CyclicCovers,
  NoBounds,
  NotALattice,
  UnknownElement,
  NoResiduum,
  MissingFixpointConstant,
  UnclassifiedAlgebra,
  NotGodel,
  NotNM,
  NotDirectlyIndecomposable,
  ModeMismatch,
  PreconditionViolated,
  ClosureFailure,
  SignatureMismatch,
  ConstraintInapplicable,
  InconsistentDerivation,
  ParseError,
  SchemaError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

// Internal consistency guard: violations indicate a bug, not bad input.
inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw Error(ErrorKind::InconsistentDerivation, msg);
}

}  // namespace nmrot
