#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "uqcm/couplings.hpp"
#include "uqcm/primitives.hpp"
#include "uqcm/schedule.hpp"
#include "uqcm/state.hpp"

namespace uqcm {

/// alpha |+> + beta |->, with |+-> = (|i> +- |g>)/sqrt(2).
struct InputQubit {
  std::complex<double> alpha{1.0, 0.0};
  std::complex<double> beta{0.0, 0.0};

  static InputQubit from_bloch(double theta, double phi);

  void validate() const;

  /// Amplitudes over (g, i).
  QubitKet<double> ket() const;
  LevelKet<double> level_ket() const { return kets::embed<double>(ket()); }
};

enum class Preparation { Ideal, PulseSynthesis };

/// Puts `squid` (currently |g>) into the input qubit state. PulseSynthesis
/// uses a Raman pulse plus free evolution and matches up to a global phase.
State prepare_input(const State& state, int squid, const InputQubit& q, const Couplings& cfg,
                    Preparation mode = Preparation::Ideal);

/// Pulses for Raman(t) + free evolution that take |g> to q up to global phase.
std::vector<Pulse> input_synthesis_pulses(int squid, const InputQubit& q, const Couplings& cfg);

/// Cavity-controlled NOT in the |+->  basis: a Jc pulse of area lambda t = pi.
State cnot_cavity_control(const State& state, int squid, const Couplings& cfg, Checks checks = Checks::Strict);

struct TimedState {
  State state;
  double elapsed;
};

/// Raman pulse of area 3 pi / 4 followed by the idle time that closes
/// omega_gi * (t1 + t2) on the smallest multiple of 2 pi.
double raman_pulse_time(const Couplings& cfg);
double process_idle_time(const Couplings& cfg);

/// |+> -> -|i>, |-> -> |g>
std::vector<Pulse> process_one_pulses(int squid, const Couplings& cfg);
/// |g> -> |->, |i> -> -|+>
std::vector<Pulse> process_two_pulses(int squid, const Couplings& cfg);

TimedState process_one(const State& state, int squid, const Couplings& cfg, Checks checks = Checks::Strict);
TimedState process_two(const State& state, int squid, const Couplings& cfg, Checks checks = Checks::Strict);

/// Drive-pulse time taking |g> to sqrt(2/3)|g> + i sqrt(1/3)|e>.
double step1_drive_time(const Couplings& cfg);
State step1_prepare_squid2(const State& state, const Couplings& cfg);

/// The ten-step cloning sequence on SQUIDs 1..3 (indices 0..2). Step 10 is
/// split into two CNOT slots because both need the single cavity.
Schedule build_uqcm_schedule(const Couplings& cfg);

struct TraceEntry {
  std::string label;
  double elapsed = 0;
  State state;
};

struct StepTrace {
  std::vector<TraceEntry> entries;

  const TraceEntry* find(const std::string& label) const;
};

struct RunOptions {
  int fock_cutoff = 2;
  Preparation preparation = Preparation::Ideal;
  /// Each slot duration is scaled by 1 + jitter * u, u uniform in [-1, 1).
  /// Nonzero jitter switches preconditions to Checks::Relaxed.
  double timing_jitter = 0;
  std::uint64_t jitter_seed = 0;
  /// Called after every pulse with the slot, the pulse as applied, and the state.
  std::function<void(const Slot&, const Pulse&, const State&)> observer;
};

struct RunResult {
  State final_state;
  StepTrace trace;
  Schedule schedule;  // as executed, after jitter
};

/// Executes slots in order. Snapshots are taken after the last slot of each
/// step and labeled "step<N>". Errors are rethrown with the slot label prefixed.
RunResult run_schedule(const State& initial, const Schedule& schedule, const Couplings& cfg,
                       const RunOptions& options = {});

RunResult run_uqcm(const InputQubit& q, const Couplings& cfg, const RunOptions& options = {});

}  // namespace uqcm
