#pragma once

#include <stdexcept>
#include <string>

namespace dspmem {

/// Configuration or precondition violation. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integration failure (non-finite values, step-size collapse). Exit code 2.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double tau, double dt)
      : std::runtime_error(what), tau(tau), dt(dt) {}
  double tau;
  double dt;
};

}  // namespace dspmem
