#pragma once

#include <stdexcept>
#include <string>

namespace circ3 {

// Bad user input: malformed files, invalid parameters, size guards.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called on an argument outside its documented domain.
// `witness` carries a human-readable certificate of the violation.
class PreconditionError : public InputError {
 public:
  PreconditionError(const std::string& what, std::string witness = {})
      : InputError(what), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

// A guarantee that must hold by construction failed. Seeing one of these
// means the implementation is wrong.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace circ3
