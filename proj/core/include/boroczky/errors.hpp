#pragma once

#include <stdexcept>
#include <string>

namespace boroczky {

/// Bad arguments or violated preconditions. The CLI maps these to exit code 2.
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A computation that could not be carried out (incomplete generator data,
/// unsupported field, ...). CLI exit code 3.
struct ComputationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A cross-check that must hold by construction failed. CLI exit code 4.
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace boroczky
