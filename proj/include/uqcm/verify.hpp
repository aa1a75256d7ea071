#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "uqcm/couplings.hpp"
#include "uqcm/protocol.hpp"
#include "uqcm/state.hpp"

namespace uqcm {

/// Ideal cloner output on SQUID1 (x) SQUID2 (x) SQUID3 (x) cavity:
///   alpha (sqrt(2/3)|++>|A_perp> + sqrt(1/3)|Phi>|A>)
/// + beta  (sqrt(2/3)|-->|A>      + sqrt(1/3)|Phi>|A_perp>)
/// with |A> = |g>_1|0>, |A_perp> = |g>_1|1>, |Phi> = (|+-> + |-+>)/sqrt(2).
State target_state(const InputQubit& q, const BasisSpec& spec = BasisSpec{});

/// Expected state after each step ("input", "step1" ... "step10"), written
/// out term by term from the hand-derived sequence.
std::map<std::string, State> reference_states(const InputQubit& q, const BasisSpec& spec = BasisSpec{});

struct CloneReport {
  double fidelity_squid2 = 0;
  double fidelity_squid3 = 0;
  /// |<target|final>|
  double target_overlap = 0;
  /// |<a_{++}|a_{--}>|, where a_c is the (unnormalized) SQUID1+cavity state
  /// paired with clone pair c. Zero for the ideal cloner.
  double ancilla_orthogonality = 0;
  /// Population outside {g,i}^3 (x) {|0>,|1>}.
  double leakage = 0;
  bool leakage_flagged = false;
};

CloneReport clone_fidelities(const State& final_state, const InputQubit& q);

struct StepOverlap {
  std::string label;
  double overlap = 0;   // |<snapshot|reference>|
  double distance = 0;  // min over global phase of |snapshot - e^{i theta} reference|
};

/// One entry per reference label, in step order. Throws DomainError when the
/// trace lacks a label.
std::vector<StepOverlap> step_conformance(const StepTrace& trace, const InputQubit& q);

struct BlochPoint {
  double theta = 0;
  double phi = 0;
};

/// theta = acos(1 - 2u), phi = 2 pi v with (u, v) from UniformStream(seed).
std::vector<BlochPoint> bloch_samples(int n, std::uint64_t seed);

struct SummaryStats {
  double min = 0, max = 0, mean = 0, variance = 0;
};

SummaryStats summarize(const std::vector<double>& values);

struct SweepSample {
  int index = 0;
  BlochPoint point;
  CloneReport report;
};

struct SweepOptions {
  int jobs = 1;
  int fock_cutoff = 2;
  double timing_jitter = 0;
};

struct SweepReport {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<SweepSample> samples;  // sorted by index
  SummaryStats f2, f3, target_overlap;
};

SweepReport universality_sweep(int n, std::uint64_t seed, const Couplings& cfg, const SweepOptions& options = {});

/// One cloning run at a Bloch point; shared by the sweep and the CLI.
CloneReport clone_once(const InputQubit& q, const Couplings& cfg, int fock_cutoff, double timing_jitter,
                       std::uint64_t jitter_seed);

}  // namespace uqcm
