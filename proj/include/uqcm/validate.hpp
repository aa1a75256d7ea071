#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uqcm/couplings.hpp"
#include "uqcm/rng.hpp"
#include "uqcm/state.hpp"

namespace uqcm {

/// Haar-distributed state from Box-Muller Gaussians drawn off `rng`.
State random_state(const BasisSpec& spec, UniformStream& rng);

struct CheckResult {
  std::string module;
  std::string op;
  double deviation = 0;
  double tolerance = 0;

  bool passed() const { return deviation <= tolerance; }
};

/// Closed forms against exact exponentials, unitarity, the CNOT and process
/// tables, step conformance and clone fidelity.
std::vector<CheckResult> run_validation(const Couplings& cfg, int fock_cutoff = 2, std::uint64_t seed = 2024,
                                        int random_states = 100);

}  // namespace uqcm
