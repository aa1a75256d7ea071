#pragma once

// Closed-form propagators of the four resonant/effective interactions plus
// free evolution. Each acts on one SQUID (and, for Jc, the cavity mode) and
// leaves every other factor untouched.

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "uqcm/couplings.hpp"
#include "uqcm/pulse.hpp"
#include "uqcm/state.hpp"

namespace uqcm {

/// Strict runs enforce the effective-model preconditions (no |e> population
/// before a Raman pulse). Relaxed runs apply the maps regardless, for
/// perturbed schedules where leakage is measured instead of forbidden.
enum class Checks { Strict, Relaxed };

inline constexpr double kLeakageTolerance = 1e-10;

template <typename Real>
using LevelOperator = Eigen::Matrix<std::complex<Real>, 3, 3>;

namespace detail {

template <typename Real>
void check_duration(Real t, const char* op) {
  if (!(t >= Real(0)) || !std::isfinite(static_cast<double>(t)))
    throw DomainError(std::string(op) + ": duration must be finite and >= 0");
}

/// Apply a 3x3 operator to the level factor of one SQUID.
template <typename Real>
PureState<Real> apply_local(const PureState<Real>& state, int squid, const LevelOperator<Real>& u) {
  const BasisSpec& spec = state.spec();
  const std::size_t stride = spec.squid_stride(squid);
  ComplexVector<Real> out = state.amplitudes();
  for (std::size_t idx = 0; idx < spec.dimension(); ++idx) {
    if (spec.level_of(idx, squid) != Level::g) continue;
    const auto i0 = static_cast<Eigen::Index>(idx);
    const auto s = static_cast<Eigen::Index>(stride);
    const LevelKet<Real> in(out(i0), out(i0 + s), out(i0 + 2 * s));
    const LevelKet<Real> res = u * in;
    out(i0) = res(0);
    out(i0 + s) = res(1);
    out(i0 + 2 * s) = res(2);
  }
  return PureState<Real>(spec, std::move(out));
}

template <typename Real>
LevelOperator<Real> two_level_rotation(int a, int b, Real angle) {
  using C = std::complex<Real>;
  LevelOperator<Real> u = LevelOperator<Real>::Identity();
  const Real c = std::cos(angle), s = std::sin(angle);
  u(a, a) = c;
  u(b, b) = c;
  u(a, b) = C(0, -s);
  u(b, a) = C(0, -s);
  return u;
}

}  // namespace detail

/// Cavity exchange on the g<->e transition of `squid`:
///   |g,n+1> -> cos(th)|g,n+1> - i sin(th)|e,n>,  |e,n> -> cos(th)|e,n> - i sin(th)|g,n+1>
/// with th = lambda * sqrt(n+1) * t. |i,n> and |g,0> are dark.
template <typename Real>
PureState<Real> apply_jc(const PureState<Real>& state, int squid, Real duration,
                         const CouplingConfig<Real>& cfg) {
  detail::check_duration(duration, "apply_jc");
  const BasisSpec& spec = state.spec();
  const auto stride = static_cast<Eigen::Index>(spec.squid_stride(squid));
  ComplexVector<Real> out = state.amplitudes();
  for (std::size_t idx = 0; idx < spec.dimension(); ++idx) {
    if (spec.level_of(idx, squid) != Level::e) continue;
    const int n = spec.photons_of(idx);
    if (n + 1 > spec.fock_cutoff) continue;  // partner |g,n+1> truncated
    const auto ie = static_cast<Eigen::Index>(idx);
    const Eigen::Index ig = ie - 2 * stride + 1;
    const Real th = cfg.lambda * std::sqrt(static_cast<Real>(n + 1)) * duration;
    const Real c = std::cos(th), s = std::sin(th);
    const std::complex<Real> ag = out(ig), ae = out(ie);
    out(ig) = c * ag + std::complex<Real>(0, -s) * ae;
    out(ie) = std::complex<Real>(0, -s) * ag + c * ae;
  }
  return PureState<Real>(spec, std::move(out));
}

/// Resonant classical drive on g<->e: |g> -> cos|g> - i sin|e>.
template <typename Real>
PureState<Real> apply_drive_ge(const PureState<Real>& state, int squid, Real duration,
                               const CouplingConfig<Real>& cfg) {
  detail::check_duration(duration, "apply_drive_ge");
  return detail::apply_local(state, squid, detail::two_level_rotation<Real>(0, 2, cfg.omega_ge * duration));
}

/// Resonant classical drive on i<->e: |i> -> cos|i> - i sin|e>.
template <typename Real>
PureState<Real> apply_drive_ie(const PureState<Real>& state, int squid, Real duration,
                               const CouplingConfig<Real>& cfg) {
  detail::check_duration(duration, "apply_drive_ie");
  return detail::apply_local(state, squid, detail::two_level_rotation<Real>(1, 2, cfg.omega_ie * duration));
}

/// Idle period: |i> -> exp(-i omega_gi t)|i>; |g>, |e> fixed.
template <typename Real>
PureState<Real> apply_free_evolution(const PureState<Real>& state, int squid, Real duration,
                                     const CouplingConfig<Real>& cfg) {
  detail::check_duration(duration, "apply_free_evolution");
  LevelOperator<Real> u = LevelOperator<Real>::Identity();
  u(1, 1) = std::polar(Real(1), -cfg.omega_gi * duration);
  return detail::apply_local(state, squid, u);
}

/// Single-SQUID matrix of the adiabatically eliminated two-photon Raman map
/// on {g, i}; |e> is a spectator.
///   |g> -> cos(l't)|g> + e^{-i w t} e^{-i(dphi - pi/2)} sin(l't)|i>
///   |i> -> e^{i(dphi + pi/2)} sin(l't)|g> + e^{-i w t} cos(l't)|i>
template <typename Real>
LevelOperator<Real> raman_matrix(Real duration, Real phi1, Real phi2, const CouplingConfig<Real>& cfg) {
  const Real half_pi = std::numbers::pi_v<Real> / 2;
  const Real dphi = phi1 - phi2;
  const Real c = std::cos(cfg.lambda_prime * duration);
  const Real s = std::sin(cfg.lambda_prime * duration);
  const std::complex<Real> free = std::polar(Real(1), -cfg.omega_gi * duration);
  LevelOperator<Real> u = LevelOperator<Real>::Identity();
  u(0, 0) = c;
  u(1, 0) = free * s * std::polar(Real(1), -(dphi - half_pi));
  u(0, 1) = s * std::polar(Real(1), dphi + half_pi);
  u(1, 1) = free * c;
  return u;
}

template <typename Real>
PureState<Real> apply_raman(const PureState<Real>& state, int squid, Real duration, Real phi1, Real phi2,
                            const CouplingConfig<Real>& cfg, Checks checks = Checks::Strict) {
  detail::check_duration(duration, "apply_raman");
  if (checks == Checks::Strict) {
    const Real e_pop = state.level_population(squid, Level::e);
    if (e_pop > Real(kLeakageTolerance))
      throw LeakageError("apply_raman: SQUID " + std::to_string(squid + 1) + " has |e> population " +
                         std::to_string(static_cast<double>(e_pop)));
  }
  return detail::apply_local(state, squid, raman_matrix(duration, phi1, phi2, cfg));
}

template <typename Real>
PureState<Real> apply_pulse(const PureState<Real>& state, const PulseOp<Real>& op,
                            const CouplingConfig<Real>& cfg, Checks checks = Checks::Strict) {
  switch (op.kind) {
    case PulseKind::Jc: return apply_jc(state, op.target, op.duration, cfg);
    case PulseKind::DriveGe: return apply_drive_ge(state, op.target, op.duration, cfg);
    case PulseKind::DriveIe: return apply_drive_ie(state, op.target, op.duration, cfg);
    case PulseKind::Raman: return apply_raman(state, op.target, op.duration, op.phi1, op.phi2, cfg, checks);
    case PulseKind::FreeEvolve: return apply_free_evolution(state, op.target, op.duration, cfg);
  }
  throw DomainError("apply_pulse: unknown pulse kind");
}

}  // namespace uqcm
