#pragma once

#include <stdexcept>

namespace ongate {

// Numerical-guard failure: a grid or cutoff too small for the requested
// state, a vanishing norm, or a singular parameter. The CLI maps these to
// exit code 3.
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ongate
