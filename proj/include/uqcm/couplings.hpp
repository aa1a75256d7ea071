#pragma once

#include <cmath>
#include <string>

#include "uqcm/errors.hpp"

namespace uqcm {

/// Rates in simulation units (rad / time). Only products like lambda * t enter
/// the closed-form maps; omega_gi >> lambda_prime mimics the physical ordering.
template <typename Real = double>
struct CouplingConfig {
  Real lambda = 1;        // SQUID-cavity coupling on g<->e
  Real omega_ge = 1;      // resonant drive Rabi rate on g<->e
  Real omega_ie = 1;      // resonant drive Rabi rate on i<->e
  Real lambda_prime = 1;  // effective two-photon Raman coupling g<->i
  Real omega_gi = 20;     // g-i level splitting
  Real delta = 50;        // common Raman detuning; metadata only

  void validate() const {
    auto positive = [](Real v, const char* name) {
      if (!(v > Real(0)) || !std::isfinite(static_cast<double>(v)))
        throw DomainError(std::string("CouplingConfig: ") + name + " must be a positive finite number");
    };
    positive(lambda, "lambda");
    positive(omega_ge, "omega_ge");
    positive(omega_ie, "omega_ie");
    positive(lambda_prime, "lambda_prime");
    positive(omega_gi, "omega_gi");
    if (!std::isfinite(static_cast<double>(delta))) throw DomainError("CouplingConfig: delta must be finite");
  }
};

using Couplings = CouplingConfig<double>;

}  // namespace uqcm
