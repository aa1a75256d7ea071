#include "uqcm/validate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "uqcm/generator.hpp"
#include "uqcm/primitives.hpp"
#include "uqcm/protocol.hpp"
#include "uqcm/verify.hpp"

namespace uqcm {

State random_state(const BasisSpec& spec, UniformStream& rng) {
  ComplexVector<double> v(static_cast<Eigen::Index>(spec.dimension()));
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double u1 = 1 - rng.next();  // (0, 1]
    const double u2 = rng.next();
    const double r = std::sqrt(-2 * std::log(u1));
    v(k) = std::polar(r, 2 * std::numbers::pi * u2);
  }
  return State::renormalized(spec, std::move(v));
}

namespace {

constexpr PulseKind kAllKinds[] = {PulseKind::Jc, PulseKind::DriveGe, PulseKind::DriveIe, PulseKind::Raman,
                                   PulseKind::FreeEvolve};

double max_diff(const State& a, const State& b) { return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff(); }

State on_squid1(const BasisSpec& spec, const LevelKet<double>& k, int photons) {
  return State::product(spec, {k, kets::g(), kets::g()}, kets::fock<double>(photons, spec));
}

}  // namespace

std::vector<CheckResult> run_validation(const Couplings& cfg, int fock_cutoff, std::uint64_t seed, int random_states) {
  cfg.validate();
  const BasisSpec spec(3, fock_cutoff);
  UniformStream rng(seed);
  std::vector<CheckResult> out;

  for (PulseKind kind : kAllKinds) {
    double oracle = 0, unitarity = 0;
    for (int n = 0; n < random_states; ++n) {
      const Pulse op{kind, static_cast<int>(rng.next() * 3), 2 * rng.next(), 2 * std::numbers::pi * rng.next(),
                     2 * std::numbers::pi * rng.next()};
      const State a = random_state(spec, rng);
      const State b = random_state(spec, rng);
      const State ua = apply_pulse(a, op, cfg, Checks::Relaxed);
      const State ub = apply_pulse(b, op, cfg, Checks::Relaxed);
      oracle = std::max(oracle, max_diff(ua, evolve_pulse_exact(a, op, cfg)));
      unitarity = std::max(unitarity, std::abs(inner_product(ua, ub) - inner_product(a, b)));
    }
    const std::string name(pulse_kind_name(kind));
    out.push_back({"dynamics", name + " vs exact exponential", oracle, 1e-9});
    out.push_back({"dynamics", name + " unitarity", unitarity, 1e-12});
  }

  {
    const LevelKet<double> p = kets::plus(), m = kets::minus();
    double dev = 0;
    dev = std::max(dev, max_diff(cnot_cavity_control(on_squid1(spec, p, 0), 0, cfg), on_squid1(spec, p, 0)));
    dev = std::max(dev, max_diff(cnot_cavity_control(on_squid1(spec, m, 0), 0, cfg), on_squid1(spec, m, 0)));
    dev = std::max(dev, max_diff(cnot_cavity_control(on_squid1(spec, p, 1), 0, cfg), on_squid1(spec, m, 1)));
    dev = std::max(dev, max_diff(cnot_cavity_control(on_squid1(spec, m, 1), 0, cfg), on_squid1(spec, p, 1)));
    out.push_back({"protocol", "cnot_cavity_control truth table", dev, 1e-12});

    double twice = 0;
    for (const auto& k : {kets::g(), kets::i(), p, m})
      for (int n : {0, 1}) {
        const State s = on_squid1(spec, k, n);
        twice = std::max(twice, max_diff(cnot_cavity_control(cnot_cavity_control(s, 0, cfg), 0, cfg), s));
      }
    out.push_back({"protocol", "cnot_cavity_control involution", twice, 1e-12});

    double p1 = 0, p2 = 0;
    p1 = std::max(p1, max_diff(process_one(on_squid1(spec, p, 0), 0, cfg).state, on_squid1(spec, -kets::i(), 0)));
    p1 = std::max(p1, max_diff(process_one(on_squid1(spec, m, 0), 0, cfg).state, on_squid1(spec, kets::g(), 0)));
    p2 = std::max(p2, max_diff(process_two(on_squid1(spec, kets::g(), 0), 0, cfg).state, on_squid1(spec, m, 0)));
    p2 = std::max(p2, max_diff(process_two(on_squid1(spec, kets::i(), 0), 0, cfg).state, on_squid1(spec, -p, 0)));
    out.push_back({"protocol", "process_one table", p1, 1e-10});
    out.push_back({"protocol", "process_two table", p2, 1e-10});
    const double dt = std::abs(process_one(on_squid1(spec, p, 0), 0, cfg).elapsed -
                               process_two(on_squid1(spec, p, 0), 0, cfg).elapsed);
    out.push_back({"protocol", "process elapsed times equal", dt, 1e-12});
  }

  for (const InputQubit& q : {InputQubit{{1, 0}, {0, 0}}, InputQubit{{0, 0}, {1, 0}}}) {
    RunOptions opts;
    opts.fock_cutoff = fock_cutoff;
    const RunResult run = run_uqcm(q, cfg, opts);
    double worst = 0;
    for (const StepOverlap& s : step_conformance(run.trace, q)) worst = std::max(worst, s.distance);
    out.push_back({"verify", std::string("step_conformance ") + (q.beta == 0.0 ? "(1,0)" : "(0,1)"), worst, 1e-10});
  }

  {
    double worst = 0;
    for (const BlochPoint& pt : bloch_samples(10, seed)) {
      const InputQubit q = InputQubit::from_bloch(pt.theta, pt.phi);
      const CloneReport r = clone_once(q, cfg, fock_cutoff, 0, 0);
      worst = std::max({worst, std::abs(r.fidelity_squid2 - 5.0 / 6.0), std::abs(r.fidelity_squid3 - 5.0 / 6.0),
                        1 - r.target_overlap});
    }
    out.push_back({"verify", "clone_fidelities = 5/6", worst, 1e-9});
  }
  return out;
}

}  // namespace uqcm
