#pragma once

// Machine-readable output. All numbers carry 12 significant digits.

#include <string>

#include <json.hpp>

#include "uqcm/protocol.hpp"
#include "uqcm/schedule.hpp"
#include "uqcm/verify.hpp"

namespace uqcm {

using Json = nlohmann::json;

/// Nearest double to the 12-significant-digit decimal form of v; -0 maps to 0.
double round_sig12(double v);
std::string format_sig12(double v);

/// {"basis": {"num_squids": N, "fock_cutoff": K}, "amplitudes": [[re, im], ...]}
Json state_to_json(const State& state);
/// Inverse of state_to_json. Amplitudes are renormalized after parsing; a
/// norm further than 1e-9 from one is rejected.
State state_from_json(const Json& j);

/// [{"label", "t_elapsed", "state"}, ...]
Json trace_to_json(const StepTrace& trace);

/// [{"step", "label", "duration", "ops": [{"kind", "target", "duration", "phi1", "phi2"}]}]
/// Targets are 1-based SQUID numbers.
Json schedule_to_json(const Schedule& schedule);

Json matrix_to_json(const ComplexMatrix<double>& m);

Json input_to_json(const InputQubit& q);
Json report_to_json(const CloneReport& report);

/// Header sample,theta,phi,f2,f3,target_overlap,leakage then one row per sample.
std::string sweep_csv(const SweepReport& report);
/// {"n", "seed", "min", "max", "mean", "variance"} over F2, plus "f3" and
/// "target_overlap" blocks with the same statistics.
Json sweep_summary_json(const SweepReport& report);

}  // namespace uqcm
