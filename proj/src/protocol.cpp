#include "uqcm/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "uqcm/rng.hpp"

namespace uqcm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPrepTolerance = 1e-10;

/// Smallest t2 >= 0 with omega * (t1 + t2) a multiple of 2 pi.
double closing_idle_time(double t1, double omega) {
  const double m = std::ceil(omega * t1 / (2 * kPi));
  return std::max(0.0, 2 * kPi * m / omega - t1);
}

Lane single(PulseKind kind, int squid, double duration) { return Lane{squid, {Pulse{kind, squid, duration, 0, 0}}}; }

template <typename Error>
[[noreturn]] void rethrow_labeled(const std::string& label, const Error& err) {
  throw Error(label + ": " + err.what());
}

}  // namespace

InputQubit InputQubit::from_bloch(double theta, double phi) {
  return InputQubit{{std::cos(theta / 2), 0.0}, std::polar(std::sin(theta / 2), phi)};
}

void InputQubit::validate() const {
  const double n = std::norm(alpha) + std::norm(beta);
  if (!(std::abs(n - 1) < kNormTolerance))
    throw DomainError("InputQubit: |alpha|^2 + |beta|^2 = " + std::to_string(n) + ", expected 1");
}

QubitKet<double> InputQubit::ket() const {
  const double r = 1 / std::numbers::sqrt2;
  return QubitKet<double>((alpha - beta) * r, (alpha + beta) * r);
}

std::vector<Pulse> input_synthesis_pulses(int squid, const InputQubit& q, const Couplings& cfg) {
  q.validate();
  cfg.validate();
  const QubitKet<double> c = q.ket();
  const double gamma = std::abs(c(0)) > 0 ? std::arg(c(0)) : 0.0;
  const double area = std::acos(std::clamp(std::abs(c(0)), 0.0, 1.0));
  const double dphi = std::abs(c(1)) > 0 ? kPi / 2 - std::arg(c(1)) + gamma : 0.0;
  const double t1 = area / cfg.lambda_prime;
  return {Pulse{PulseKind::Raman, squid, t1, dphi, 0.0},
          Pulse{PulseKind::FreeEvolve, squid, closing_idle_time(t1, cfg.omega_gi), 0, 0}};
}

State prepare_input(const State& state, int squid, const InputQubit& q, const Couplings& cfg, Preparation mode) {
  q.validate();
  const double g_pop = state.level_population(squid, Level::g);
  if (!(g_pop > 1 - kPrepTolerance))
    throw PreconditionError("prepare_input: SQUID " + std::to_string(squid + 1) + " is not in |g> (population " +
                            std::to_string(g_pop) + ")");
  if (mode == Preparation::PulseSynthesis) {
    State out = state;
    for (const Pulse& op : input_synthesis_pulses(squid, q, cfg)) out = apply_pulse(out, op, cfg);
    return out;
  }
  const BasisSpec& spec = state.spec();
  const auto stride = static_cast<Eigen::Index>(spec.squid_stride(squid));
  const LevelKet<double> target = q.level_ket();
  ComplexVector<double> out = ComplexVector<double>::Zero(state.dimension());
  for (std::size_t idx = 0; idx < spec.dimension(); ++idx) {
    if (spec.level_of(idx, squid) != Level::g) continue;
    const auto i0 = static_cast<Eigen::Index>(idx);
    for (int l = 0; l < kLevels; ++l) out(i0 + l * stride) = target(l) * state.amplitudes()(i0);
  }
  return State::renormalized(spec, std::move(out));
}

State cnot_cavity_control(const State& state, int squid, const Couplings& cfg, Checks checks) {
  if (checks == Checks::Strict) {
    const double photons = state.photon_population_at_least(2);
    if (photons > kLeakageTolerance)
      throw LeakageError("cnot_cavity_control: population with >= 2 photons is " + std::to_string(photons));
    const double e_pop = state.level_population(squid, Level::e);
    if (e_pop > kLeakageTolerance)
      throw LeakageError("cnot_cavity_control: target SQUID has |e> population " + std::to_string(e_pop));
  }
  return apply_jc(state, squid, kPi / cfg.lambda, cfg);
}

double raman_pulse_time(const Couplings& cfg) { return 3 * kPi / (4 * cfg.lambda_prime); }

double process_idle_time(const Couplings& cfg) { return closing_idle_time(raman_pulse_time(cfg), cfg.omega_gi); }

std::vector<Pulse> process_one_pulses(int squid, const Couplings& cfg) {
  return {Pulse{PulseKind::Raman, squid, raman_pulse_time(cfg), 3 * kPi / 2, 0.0},
          Pulse{PulseKind::FreeEvolve, squid, process_idle_time(cfg), 0, 0}};
}

std::vector<Pulse> process_two_pulses(int squid, const Couplings& cfg) {
  return {Pulse{PulseKind::Raman, squid, raman_pulse_time(cfg), kPi / 2, 0.0},
          Pulse{PulseKind::FreeEvolve, squid, process_idle_time(cfg), 0, 0}};
}

namespace {
TimedState run_pulses(const State& state, const std::vector<Pulse>& ops, const Couplings& cfg, Checks checks) {
  TimedState out{state, 0.0};
  for (const Pulse& op : ops) {
    out.state = apply_pulse(out.state, op, cfg, checks);
    out.elapsed += op.duration;
  }
  return out;
}
}  // namespace

TimedState process_one(const State& state, int squid, const Couplings& cfg, Checks checks) {
  return run_pulses(state, process_one_pulses(squid, cfg), cfg, checks);
}

TimedState process_two(const State& state, int squid, const Couplings& cfg, Checks checks) {
  return run_pulses(state, process_two_pulses(squid, cfg), cfg, checks);
}

// cos(w t) = sqrt(2/3) and -sin(w t) = sqrt(1/3) put the |e> amplitude at
// +i sqrt(1/3).
double step1_drive_time(const Couplings& cfg) { return (2 * kPi - std::asin(std::sqrt(1.0 / 3.0))) / cfg.omega_ge; }

State step1_prepare_squid2(const State& state, const Couplings& cfg) {
  const double g_pop = state.level_population(1, Level::g);
  if (!(g_pop > 1 - kPrepTolerance))
    throw PreconditionError("step1_prepare_squid2: SQUID 2 is not in |g> (population " + std::to_string(g_pop) + ")");
  return apply_drive_ge(state, 1, step1_drive_time(cfg), cfg);
}

Schedule build_uqcm_schedule(const Couplings& cfg) {
  cfg.validate();
  const double half = kPi / (2 * cfg.lambda);
  const double cnot = kPi / cfg.lambda;
  const double ie_flip = kPi / (2 * cfg.omega_ie);
  Schedule s;
  s.slots.push_back({1, "step1: drive SQUID2 g<->e", {single(PulseKind::DriveGe, 1, step1_drive_time(cfg))}});
  s.slots.push_back({2, "step2: SQUID2 swaps |e> into the cavity", {single(PulseKind::Jc, 1, half)}});
  s.slots.push_back({3, "step3: CNOT, cavity controls SQUID1", {single(PulseKind::Jc, 0, cnot)}});
  s.slots.push_back({4, "step4: SQUID2 quarter exchange with cavity",
                     {single(PulseKind::Jc, 1, kPi / (4 * cfg.lambda))}});
  s.slots.push_back({5, "step5: SQUID3 absorbs the cavity photon", {single(PulseKind::Jc, 2, half)}});
  s.slots.push_back({6, "step6: drive SQUID2 and SQUID3 i<->e",
                     {single(PulseKind::DriveIe, 1, ie_flip), single(PulseKind::DriveIe, 2, ie_flip)}});
  s.slots.push_back({7, "step7: Process 1 on SQUID1, Process 2 on SQUID2 and SQUID3",
                     {Lane{0, process_one_pulses(0, cfg)}, Lane{1, process_two_pulses(1, cfg)},
                      Lane{2, process_two_pulses(2, cfg)}}});
  s.slots.push_back({8, "step8: drive SQUID1 i<->e", {single(PulseKind::DriveIe, 0, ie_flip)}});
  s.slots.push_back({9, "step9: SQUID1 emits into the cavity", {single(PulseKind::Jc, 0, half)}});
  s.slots.push_back({10, "step10a: CNOT, cavity controls SQUID2", {single(PulseKind::Jc, 1, cnot)}});
  s.slots.push_back({10, "step10b: CNOT, cavity controls SQUID3", {single(PulseKind::Jc, 2, cnot)}});
  return s;
}

const TraceEntry* StepTrace::find(const std::string& label) const {
  for (const TraceEntry& e : entries)
    if (e.label == label) return &e;
  return nullptr;
}

RunResult run_schedule(const State& initial, const Schedule& schedule, const Couplings& cfg, const RunOptions& options) {
  cfg.validate();
  schedule.validate(initial.spec());
  if (!(options.timing_jitter >= 0) || !std::isfinite(options.timing_jitter))
    throw DomainError("run_schedule: timing jitter must be finite and >= 0");
  const Checks checks = options.timing_jitter > 0 ? Checks::Relaxed : Checks::Strict;
  UniformStream jitter(options.jitter_seed);

  RunResult result{initial, {}, {}};
  double elapsed = 0;
  for (std::size_t k = 0; k < schedule.slots.size(); ++k) {
    Slot slot = schedule.slots[k];
    if (options.timing_jitter > 0) {
      const double scale = 1 + options.timing_jitter * (2 * jitter.next() - 1);
      for (Lane& lane : slot.lanes)
        for (Pulse& op : lane.ops) op.duration *= scale;
    }
    try {
      for (const Lane& lane : slot.lanes)
        for (const Pulse& op : lane.ops) {
          result.final_state = apply_pulse(result.final_state, op, cfg, checks);
          if (checks == Checks::Strict) {
            const double high = result.final_state.photon_population_at_least(2);
            if (high > kLeakageTolerance)
              throw LeakageError("population with >= 2 photons reached " + std::to_string(high));
          }
          if (options.observer) options.observer(slot, op, result.final_state);
        }
    } catch (const LeakageError& err) {
      rethrow_labeled(slot.label, err);
    } catch (const PreconditionError& err) {
      rethrow_labeled(slot.label, err);
    } catch (const DomainError& err) {
      rethrow_labeled(slot.label, err);
    }
    elapsed += slot.duration();
    const bool last_of_step = k + 1 == schedule.slots.size() || schedule.slots[k + 1].step != slot.step;
    if (last_of_step)
      result.trace.entries.push_back({"step" + std::to_string(slot.step), elapsed, result.final_state});
    result.schedule.slots.push_back(std::move(slot));
  }
  return result;
}

RunResult run_uqcm(const InputQubit& q, const Couplings& cfg, const RunOptions& options) {
  cfg.validate();
  q.validate();
  const BasisSpec spec(3, options.fock_cutoff);
  State initial = prepare_input(State::ground(spec), 0, q, cfg, options.preparation);
  RunResult result = run_schedule(initial, build_uqcm_schedule(cfg), cfg, options);
  result.trace.entries.insert(result.trace.entries.begin(), TraceEntry{"input", 0.0, initial});
  return result;
}

}  // namespace uqcm
