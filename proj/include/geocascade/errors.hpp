#pragma once

#include <stdexcept>

namespace geocascade {

// Invalid configuration or malformed input file. The CLI maps this to exit
// code 2; messages name the offending field or input row.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A numerical routine could not meet its error target (quadrature refinement
// exhausted, series truncation impossible). Never downgraded to a silent
// approximate answer; the CLI maps this to exit code 3.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace geocascade
