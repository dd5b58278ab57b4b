#include "bbgroup/error.hpp"

namespace bbgroup {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::BackendMismatch: return "backend_mismatch";
    case ErrorKind::InvalidSpec: return "invalid_spec";
    case ErrorKind::CapExceeded: return "cap_exceeded";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::ExponentContract: return "exponent_contract";
    case ErrorKind::Verification: return "verification";
    case ErrorKind::Numerical: return "numerical";
  }
  return "unknown";
}

}  // namespace bbgroup
