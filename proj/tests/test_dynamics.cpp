#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "uqcm/generator.hpp"
#include "uqcm/primitives.hpp"
#include "uqcm/validate.hpp"

using namespace uqcm;
using L = Level;

namespace {

constexpr double kPi = std::numbers::pi;
const std::complex<double> I(0, 1);

// Deliberately non-unit rates so that lambda, omega_ge, ... are not interchangeable.
Couplings odd_couplings() {
  Couplings c;
  c.lambda = 0.7;
  c.omega_ge = 1.3;
  c.omega_ie = 0.45;
  c.lambda_prime = 1.9;
  c.omega_gi = 17.0;
  return c;
}

State single(const BasisSpec& spec, const LevelKet<double>& k, int photons = 0) {
  std::vector<LevelKet<double>> f(static_cast<std::size_t>(spec.num_squids), kets::g());
  f[0] = k;
  return State::product(spec, f, kets::fock<double>(photons, spec));
}

double max_diff(const State& a, const State& b) { return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff(); }

const PulseKind kKinds[] = {PulseKind::Jc, PulseKind::DriveGe, PulseKind::DriveIe, PulseKind::Raman,
                            PulseKind::FreeEvolve};

Pulse random_pulse(PulseKind kind, UniformStream& rng, int squids = 3) {
  return Pulse{kind, static_cast<int>(rng.next() * squids), 3 * rng.next(), 2 * kPi * rng.next(),
               2 * kPi * rng.next()};
}

}  // namespace

TEST_SUITE("apply_jc") {
  TEST_CASE("one-photon exchange at lambda t = pi/2") {
    const Couplings cfg;
    const BasisSpec spec;
    const State out = apply_jc(State::basis_state(spec, {L::g, L::g, L::g}, 1), 0, kPi / 2, cfg);
    CHECK(std::abs(out.amplitude({L::e, L::g, L::g}, 0) - (-I)) < 1e-15);
    CHECK(std::abs(out.amplitude({L::g, L::g, L::g}, 1)) < 1e-15);
  }

  TEST_CASE("|g,0> and |i,n> are dark") {
    const Couplings cfg = odd_couplings();
    const BasisSpec spec;
    for (double t : {0.3, 1.7, 9.0}) {
      const State g0 = State::basis_state(spec, {L::g, L::i, L::g}, 0);
      CHECK(max_diff(apply_jc(g0, 0, t, cfg), g0) == 0.0);
      const State i1 = State::basis_state(spec, {L::i, L::g, L::g}, 1);
      CHECK(max_diff(apply_jc(i1, 0, t, cfg), i1) == 0.0);
    }
  }

  TEST_CASE("two-excitation block rotates at sqrt(2) lambda") {
    const Couplings cfg;
    const BasisSpec spec;
    const State out = apply_jc(State::basis_state(spec, {L::g, L::e, L::g}, 1), 1, kPi / 4, cfg);
    // exp(-i H pi/4) on the {|g,2>, |e,1>} block with H = [[0, sqrt2], [sqrt2, 0]],
    // evaluated with mpmath.
    const double c = 0.444015840326213233171328694466;
    const double s = 0.896018935926806579452055743894;
    CHECK(std::abs(out.amplitude({L::g, L::e, L::g}, 1) - c) < 1e-15);
    CHECK(std::abs(out.amplitude({L::g, L::g, L::g}, 2) - (-I * s)) < 1e-15);

    oracle::Mat block(2, 2);
    block << 0, std::sqrt(2.0), std::sqrt(2.0), 0;
    const oracle::Mat u = oracle::expm_taylor(block, kPi / 4);
    CHECK(std::abs(u(1, 1) - c) < 1e-14);
    CHECK(std::abs(u(0, 1) - (-I * s)) < 1e-14);
  }

  TEST_CASE("excitation number sectors keep their population") {
    const Couplings cfg = odd_couplings();
    const BasisSpec spec;
    UniformStream rng(21);
    auto sector = [](const State& s, int squid, int n) {
      return s.population([&](const BasisSpec& b, std::size_t idx) {
        return b.photons_of(idx) + (b.level_of(idx, squid) == L::e ? 1 : 0) == n;
      });
    };
    for (int k = 0; k < 20; ++k) {
      const State psi = random_state(spec, rng);
      const int squid = k % 3;
      const State out = apply_jc(psi, squid, 5 * rng.next(), cfg);
      for (int n = 0; n <= 3; ++n) CHECK(std::abs(sector(out, squid, n) - sector(psi, squid, n)) < 1e-12);
    }
  }
}

TEST_SUITE("drives and free evolution") {
  TEST_CASE("drive g<->e") {
    const Couplings cfg = odd_couplings();
    const BasisSpec spec;
    const State g = single(spec, kets::g());
    CHECK(max_diff(apply_drive_ge(g, 0, kPi / (2 * cfg.omega_ge), cfg), single(spec, -I * kets::e())) < 1e-15);
    UniformStream rng(3);
    const State psi = random_state(spec, rng);
    CHECK(max_diff(apply_drive_ge(psi, 2, 0.0, cfg), psi) == 0.0);
    const State i = single(spec, kets::i(), 1);
    CHECK(max_diff(apply_drive_ge(i, 0, 0.77, cfg), i) == 0.0);
  }

  TEST_CASE("drive i<->e") {
    const Couplings cfg = odd_couplings();
    const BasisSpec spec;
    const double t = kPi / (2 * cfg.omega_ie);
    CHECK(max_diff(apply_drive_ie(single(spec, kets::i()), 0, t, cfg), single(spec, -I * kets::e())) < 1e-15);
    CHECK(max_diff(apply_drive_ie(single(spec, kets::e()), 0, t, cfg), single(spec, -I * kets::i())) < 1e-15);
    const State g = single(spec, kets::g());
    CHECK(max_diff(apply_drive_ie(g, 0, 1.234, cfg), g) == 0.0);
  }

  TEST_CASE("free evolution phases |i> only") {
    const Couplings cfg = odd_couplings();
    const BasisSpec spec;
    const State g = single(spec, kets::g());
    CHECK(max_diff(apply_free_evolution(g, 0, 0.9, cfg), g) == 0.0);
    const State i = single(spec, kets::i());
    CHECK(max_diff(apply_free_evolution(i, 0, 2 * kPi / cfg.omega_gi, cfg), i) < 1e-14);
    CHECK(max_diff(apply_free_evolution(i, 0, kPi / cfg.omega_gi, cfg), single(spec, -kets::i())) < 1e-14);
  }

  TEST_CASE("negative or non-finite durations are rejected") {
    const Couplings cfg;
    const State s = State::ground(BasisSpec{});
    CHECK_THROWS_AS(apply_jc(s, 0, -1.0, cfg), DomainError);
    CHECK_THROWS_AS(apply_drive_ge(s, 0, std::nan(""), cfg), DomainError);
    CHECK_THROWS_AS(apply_free_evolution(s, 0, -0.1, cfg), DomainError);
    CHECK_THROWS_AS(apply_drive_ie(s, 3, 0.1, cfg), DomainError);
  }
}

TEST_SUITE("apply_raman") {
  TEST_CASE("quarter-period pulse then closing free evolution") {
    Couplings cfg;  // omega_gi = 20: t1 + t2 = 16 pi / 20
    const BasisSpec spec;
    const double t1 = 3 * kPi / (4 * cfg.lambda_prime);
    const double t2 = 16 * kPi / 20 - t1;
    REQUIRE(t2 > 0);

    State g = apply_raman(single(spec, kets::g()), 0, t1, 3 * kPi / 2, 0.0, cfg);
    // intermediate: -1/sqrt2 |g> - e^{-i w t1}/sqrt2 |i>
    CHECK(std::abs(g.amplitude({L::g, L::g, L::g}, 0) + 1 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(g.amplitude({L::i, L::g, L::g}, 0) + std::polar(1.0, -cfg.omega_gi * t1) / std::sqrt(2.0)) <
          1e-14);
    g = apply_free_evolution(g, 0, t2, cfg);
    CHECK(max_diff(g, single(spec, -(kets::i() + kets::g()) / std::sqrt(2.0))) < 1e-14);

    State i = apply_raman(single(spec, kets::i()), 0, t1, kPi / 2, 0.0, cfg);
    i = apply_free_evolution(i, 0, t2, cfg);
    CHECK(max_diff(i, single(spec, -kets::plus())) < 1e-14);
  }

  TEST_CASE("zero duration is the identity") {
    const Couplings cfg = odd_couplings();
    UniformStream rng(8);
    const State psi = random_state(BasisSpec(3, 1), rng);
    CHECK(max_diff(apply_raman(psi, 1, 0.0, 0.4, 1.1, cfg, Checks::Relaxed), psi) == 0.0);
  }

  TEST_CASE("only the phase difference matters") {
    const Couplings cfg = odd_couplings();
    UniformStream rng(12);
    State psi = random_state(BasisSpec{}, rng);
    psi = State::renormalized(psi.spec(), psi.amplitudes());
    const State a = apply_raman(psi, 2, 0.8, 2.0, 0.5, cfg, Checks::Relaxed);
    const State b = apply_raman(psi, 2, 0.8, 1.5, 0.0, cfg, Checks::Relaxed);
    CHECK(max_diff(a, b) < 1e-14);
  }

  TEST_CASE("|e> population on the target is a leakage error in strict mode") {
    const Couplings cfg;
    const BasisSpec spec;
    const State leaky = single(spec, (kets::g() + 1e-3 * kets::e()).normalized());
    CHECK_THROWS_AS(apply_raman(leaky, 0, 0.5, 0.0, 0.0, cfg), LeakageError);
    CHECK_NOTHROW(apply_raman(leaky, 0, 0.5, 0.0, 0.0, cfg, Checks::Relaxed));
    CHECK_NOTHROW(apply_raman(leaky, 1, 0.5, 0.0, 0.0, cfg));
  }

  TEST_CASE("consecutive pulses compose when the drive phase advances with the g-i splitting") {
    // The map is written in the frame of the bare drives, so a second pulse
    // starting at t1 sees its phase difference shifted by omega_gi * t1.
    const Couplings cfg = odd_couplings();
    UniformStream rng(14);
    for (int n = 0; n < 20; ++n) {
      const State psi = random_state(BasisSpec(3, 1), rng);
      const double t1 = 2 * rng.next(), t2 = 2 * rng.next(), dphi = 2 * kPi * rng.next();
      const State split = apply_raman(apply_raman(psi, 0, t1, dphi, 0.0, cfg, Checks::Relaxed), 0, t2,
                                       dphi + cfg.omega_gi * t1, 0.0, cfg, Checks::Relaxed);
      const State joint = apply_raman(psi, 0, t1 + t2, dphi, 0.0, cfg, Checks::Relaxed);
      CHECK(max_diff(split, joint) < 1e-12);
    }
  }
}

TEST_SUITE("generators") {
  TEST_CASE("drive generator on a single SQUID") {
    const Couplings cfg = odd_couplings();
    const BasisSpec spec(1, 1);
    const auto h = build_generator(Pulse{PulseKind::DriveGe, 0, 1.0, 0, 0}, spec, cfg);
    const auto g = [&](L l, int n) { return static_cast<Eigen::Index>(spec.index({l}, n)); };
    for (int n = 0; n <= 1; ++n) {
      CHECK(h(g(L::g, n), g(L::e, n)) == std::complex<double>(cfg.omega_ge));
      CHECK(h(g(L::e, n), g(L::g, n)) == std::complex<double>(cfg.omega_ge));
    }
    CHECK(h.cwiseAbs().sum() == doctest::Approx(4 * cfg.omega_ge));
  }

  TEST_CASE("free generator is diagonal with omega_gi on |i> rows") {
    const Couplings cfg = odd_couplings();
    const BasisSpec spec;
    const auto h = build_generator(Pulse{PulseKind::FreeEvolve, 1, 1.0, 0, 0}, spec, cfg);
    CHECK((h - ComplexMatrix<double>(h.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0);
    for (std::size_t idx = 0; idx < spec.dimension(); ++idx)
      CHECK(h(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(idx)).real() ==
            (spec.level_of(idx, 1) == L::i ? cfg.omega_gi : 0.0));
  }

  TEST_CASE("cavity generator element <g,1|H|e,0> = lambda") {
    const Couplings cfg = odd_couplings();
    const BasisSpec spec;
    const auto h = build_generator(Pulse{PulseKind::Jc, 2, 1.0, 0, 0}, spec, cfg);
    const auto a = static_cast<Eigen::Index>(spec.index({L::i, L::g, L::g}, 1));
    const auto b = static_cast<Eigen::Index>(spec.index({L::i, L::g, L::e}, 0));
    CHECK(h(a, b) == std::complex<double>(cfg.lambda));
    const auto c = static_cast<Eigen::Index>(spec.index({L::i, L::g, L::g}, 2));
    const auto d = static_cast<Eigen::Index>(spec.index({L::i, L::g, L::e}, 1));
    CHECK(std::abs(h(c, d) - cfg.lambda * std::sqrt(2.0)) < 1e-15);
  }

  TEST_CASE("every generator is Hermitian") {
    const Couplings cfg = odd_couplings();
    UniformStream rng(31);
    for (PulseKind kind : kKinds) {
      const auto h = build_generator(random_pulse(kind, rng), BasisSpec{}, cfg);
      CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_SUITE("evolve_exact") {
  TEST_CASE("zero generator is the identity") {
    UniformStream rng(1);
    const State psi = random_state(BasisSpec{}, rng);
    CHECK(max_diff(evolve_exact(psi, ComplexMatrix<double>(ComplexMatrix<double>::Zero(81, 81)), 3.7), psi) < 1e-15);
  }

  TEST_CASE("cavity generator over lambda t = pi flips the sign of |g,1>") {
    const Couplings cfg;
    const BasisSpec spec;
    const State g1 = State::basis_state(spec, {L::g, L::g, L::g}, 1);
    const State out = evolve_exact(g1, build_generator(Pulse{PulseKind::Jc, 0, kPi, 0, 0}, spec, cfg), kPi);
    CHECK(max_diff(out, State(spec, -g1.amplitudes())) < 1e-14);
  }

  TEST_CASE("non-Hermitian input is rejected") {
    const State psi = State::ground(BasisSpec{});
    ComplexMatrix<double> h = ComplexMatrix<double>::Zero(81, 81);
    h(0, 1) = 1.0;
    CHECK_THROWS_AS(evolve_exact(psi, h, 1.0), DomainError);
    CHECK_THROWS_AS(evolve_exact(psi, ComplexMatrix<double>(ComplexMatrix<double>::Zero(27, 27)), 1.0), DomainError);
  }

  TEST_CASE("agrees with a Taylor-series exponential") {
    const Couplings cfg = odd_couplings();
    UniformStream rng(44);
    for (PulseKind kind : kKinds) {
      const Pulse op = random_pulse(kind, rng);
      const BasisSpec spec(3, 1);
      const auto h = build_generator(op, spec, cfg);
      const State psi = random_state(spec, rng);
      const oracle::Vec expected = oracle::expm_taylor(h, op.duration) * psi.amplitudes();
      CHECK((evolve_exact(psi, h, op.duration).amplitudes() - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  TEST_CASE("closed forms match exact exponentials on 100 random states per kind") {
    for (const Couplings& cfg : {Couplings{}, odd_couplings()}) {
      UniformStream rng(2718);
      for (PulseKind kind : kKinds) {
        double worst = 0;
        for (int n = 0; n < 100; ++n) {
          const Pulse op = random_pulse(kind, rng);
          const State psi = random_state(BasisSpec{}, rng);
          worst = std::max(worst, max_diff(apply_pulse(psi, op, cfg, Checks::Relaxed), evolve_pulse_exact(psi, op, cfg)));
        }
        INFO(pulse_kind_name(kind));
        CHECK(worst < 1e-9);
      }
    }
  }
}

TEST_SUITE("primitive invariants") {
  TEST_CASE("unitarity: inner products are preserved") {
    const Couplings cfg = odd_couplings();
    UniformStream rng(55);
    for (PulseKind kind : kKinds)
      for (int n = 0; n < 25; ++n) {
        const Pulse op = random_pulse(kind, rng);
        const State a = random_state(BasisSpec{}, rng), b = random_state(BasisSpec{}, rng);
        const State ua = apply_pulse(a, op, cfg, Checks::Relaxed), ub = apply_pulse(b, op, cfg, Checks::Relaxed);
        CHECK(std::abs(inner_product(ua, ub) - inner_product(a, b)) < 1e-12);
        CHECK(std::abs(ua.amplitudes().norm() - 1) < 1e-12);
      }
  }

  TEST_CASE("composition: t1 then t2 equals t1 + t2 for time-independent kinds") {
    const Couplings cfg = odd_couplings();
    UniformStream rng(66);
    for (PulseKind kind : {PulseKind::Jc, PulseKind::DriveGe, PulseKind::DriveIe, PulseKind::FreeEvolve})
      for (int n = 0; n < 10; ++n) {
        const State psi = random_state(BasisSpec{}, rng);
        const int target = n % 3;
        const double t1 = 2 * rng.next(), t2 = 2 * rng.next();
        const State split =
            apply_pulse(apply_pulse(psi, Pulse{kind, target, t1, 0, 0}, cfg), Pulse{kind, target, t2, 0, 0}, cfg);
        CHECK(max_diff(split, apply_pulse(psi, Pulse{kind, target, t1 + t2, 0, 0}, cfg)) < 1e-12);
      }
  }

  TEST_CASE("locality: spectator SQUIDs keep their reduced state") {
    const Couplings cfg = odd_couplings();
    UniformStream rng(77);
    for (PulseKind kind : kKinds)
      for (int target = 0; target < 3; ++target) {
        const State psi = random_state(BasisSpec{}, rng);
        const State out = apply_pulse(psi, Pulse{kind, target, 1.3, 0.2, 0.9}, cfg, Checks::Relaxed);
        for (int spectator = 0; spectator < 3; ++spectator) {
          if (spectator == target) continue;
          const auto before = partial_trace(psi, {Subsystem::squid(spectator)});
          const auto after = partial_trace(out, {Subsystem::squid(spectator)});
          CHECK((before.entries - after.entries).cwiseAbs().maxCoeff() < 1e-12);
        }
        if (kind != PulseKind::Jc) {
          const auto before = partial_trace(psi, {Subsystem::cavity()});
          const auto after = partial_trace(out, {Subsystem::cavity()});
          CHECK((before.entries - after.entries).cwiseAbs().maxCoeff() < 1e-12);
        }
      }
  }

  TEST_CASE("long double instantiation agrees with double") {
    using LD = long double;
    CouplingConfig<LD> cfg_ld;
    const Couplings cfg;
    const BasisSpec spec(3, 2);
    UniformStream rng(88);
    const State psi = random_state(spec, rng);
    const PureState<LD> psi_ld(spec, psi.amplitudes().cast<std::complex<LD>>());
    const PureState<LD> out_ld = apply_jc(apply_raman(psi_ld, 0, 0.9L, 0.3L, 0.0L, cfg_ld, Checks::Relaxed), 0, 1.1L, cfg_ld);
    const State out = apply_jc(apply_raman(psi, 0, 0.9, 0.3, 0.0, cfg, Checks::Relaxed), 0, 1.1, cfg);
    CHECK((out_ld.amplitudes().cast<std::complex<double>>() - out.amplitudes()).cwiseAbs().maxCoeff() < 1e-14);
  }
}
