#pragma once

#include <stdexcept>
#include <string>

namespace hodisp {

// Bad arguments or malformed model data.
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The two-particle system has no stable normal-mode spectrum
// (alpha1(0)*alpha2(0) >= 1, log argument non-positive).
struct Instability : std::domain_error {
  using std::domain_error::domain_error;
};

// Quadrature or another numerical scheme failed to converge.
struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hodisp
