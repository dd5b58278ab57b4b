#pragma once

#include <stdexcept>
#include <string>

namespace bbgroup {

enum class ErrorKind {
  BackendMismatch,   // elements from two different oracles were combined
  InvalidSpec,       // malformed backend / field / element description
  CapExceeded,       // enumeration or order search exceeded its cap
  Precondition,      // an algorithm was handed input outside its domain
  ExponentContract,  // x^E != 1 observed, the supplied E is wrong
  Verification,      // a post-condition check failed (indicates a bug)
  Numerical,         // singular, non-SPD or non-convergent real input
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bbgroup
