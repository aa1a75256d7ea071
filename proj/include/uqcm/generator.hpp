#pragma once

// Hermitian generators for every pulse kind, and propagation by exact
// diagonalization. Serves as the independent reference for the closed forms
// in primitives.hpp.

#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Eigenvalues>

#include "uqcm/couplings.hpp"
#include "uqcm/pulse.hpp"
#include "uqcm/state.hpp"

namespace uqcm {

inline constexpr double kHermiticityTolerance = 1e-12;

namespace detail {

/// Embed a 3x3 single-SQUID operator into the full space.
template <typename Real>
ComplexMatrix<Real> embed_local(const BasisSpec& spec, int squid, const Eigen::Matrix<std::complex<Real>, 3, 3>& op) {
  const auto dim = static_cast<Eigen::Index>(spec.dimension());
  const std::size_t stride = spec.squid_stride(squid);
  ComplexMatrix<Real> h = ComplexMatrix<Real>::Zero(dim, dim);
  for (std::size_t idx = 0; idx < spec.dimension(); ++idx) {
    if (spec.level_of(idx, squid) != Level::g) continue;
    for (int r = 0; r < kLevels; ++r)
      for (int c = 0; c < kLevels; ++c)
        h(static_cast<Eigen::Index>(idx + static_cast<std::size_t>(r) * stride),
          static_cast<Eigen::Index>(idx + static_cast<std::size_t>(c) * stride)) = op(r, c);
  }
  return h;
}

}  // namespace detail

/// H such that exp(-i H t) is the propagator of `op`.
///
/// Jc:          lambda (a^dag |g><e| + a |e><g|) on the target SQUID
/// DriveGe/Ie:  omega (|x><e| + |e><x|)
/// FreeEvolve:  omega_gi |i><i|
/// Raman:       -lambda' (e^{i dphi} |g><i| + e^{-i dphi} |i><g|), the coupling
///              part only. The Raman closed form is this propagator followed
///              by FreeEvolve for the same duration (see evolve_pulse_exact).
template <typename Real>
ComplexMatrix<Real> build_generator(const PulseOp<Real>& op, const BasisSpec& spec, const CouplingConfig<Real>& cfg) {
  using C = std::complex<Real>;
  using Local = Eigen::Matrix<C, 3, 3>;
  spec.check_squid(op.target);
  Local local = Local::Zero();
  switch (op.kind) {
    case PulseKind::Jc: {
      const auto dim = static_cast<Eigen::Index>(spec.dimension());
      ComplexMatrix<Real> h = ComplexMatrix<Real>::Zero(dim, dim);
      const auto stride = static_cast<Eigen::Index>(spec.squid_stride(op.target));
      for (std::size_t idx = 0; idx < spec.dimension(); ++idx) {
        if (spec.level_of(idx, op.target) != Level::e) continue;
        const int n = spec.photons_of(idx);
        if (n + 1 > spec.fock_cutoff) continue;
        const auto ie = static_cast<Eigen::Index>(idx);
        const Eigen::Index ig = ie - 2 * stride + 1;
        const Real amp = cfg.lambda * std::sqrt(static_cast<Real>(n + 1));
        h(ig, ie) = amp;  // a^dag |g><e|
        h(ie, ig) = amp;  // a |e><g|
      }
      return h;
    }
    case PulseKind::DriveGe:
      local(0, 2) = local(2, 0) = cfg.omega_ge;
      break;
    case PulseKind::DriveIe:
      local(1, 2) = local(2, 1) = cfg.omega_ie;
      break;
    case PulseKind::FreeEvolve:
      local(1, 1) = cfg.omega_gi;
      break;
    case PulseKind::Raman: {
      const Real dphi = op.phi1 - op.phi2;
      local(0, 1) = -cfg.lambda_prime * std::polar(Real(1), dphi);
      local(1, 0) = -cfg.lambda_prime * std::polar(Real(1), -dphi);
      break;
    }
  }
  return detail::embed_local<Real>(spec, op.target, local);
}

/// exp(-i H t) |psi> via Hermitian eigendecomposition.
template <typename Real>
PureState<Real> evolve_exact(const PureState<Real>& state, const ComplexMatrix<Real>& generator, Real duration) {
  if (generator.rows() != state.dimension() || generator.cols() != state.dimension())
    throw DomainError("evolve_exact: generator dimension does not match the state");
  const Real herm = generator.size() == 0 ? Real(0) : (generator - generator.adjoint()).cwiseAbs().maxCoeff();
  if (!(herm <= Real(kHermiticityTolerance)))
    throw DomainError("evolve_exact: generator is not Hermitian (max |H - H^dag| = " +
                      std::to_string(static_cast<double>(herm)) + ")");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Real>> es(generator);
  if (es.info() != Eigen::Success) throw DomainError("evolve_exact: eigendecomposition failed");
  const auto& v = es.eigenvectors();
  ComplexVector<Real> phases(v.cols());
  for (Eigen::Index k = 0; k < v.cols(); ++k) phases(k) = std::polar(Real(1), -es.eigenvalues()(k) * duration);
  ComplexVector<Real> out = v * phases.asDiagonal() * (v.adjoint() * state.amplitudes());
  return PureState<Real>(state.spec(), std::move(out));
}

/// Full propagator of `op` built only from generators and exact exponentials.
template <typename Real>
PureState<Real> evolve_pulse_exact(const PureState<Real>& state, const PulseOp<Real>& op,
                                   const CouplingConfig<Real>& cfg) {
  PureState<Real> out = evolve_exact(state, build_generator(op, state.spec(), cfg), op.duration);
  if (op.kind == PulseKind::Raman) {
    PulseOp<Real> idle{PulseKind::FreeEvolve, op.target, op.duration, 0, 0};
    out = evolve_exact(out, build_generator(idle, state.spec(), cfg), op.duration);
  }
  return out;
}

}  // namespace uqcm
