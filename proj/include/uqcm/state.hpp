#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "uqcm/basis.hpp"
#include "uqcm/errors.hpp"

namespace uqcm {

template <typename Real>
using ComplexVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using ComplexMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

/// Single-SQUID ket over (g, i, e).
template <typename Real>
using LevelKet = Eigen::Matrix<std::complex<Real>, 3, 1>;

/// Qubit ket over the (g, i) computational levels.
template <typename Real>
using QubitKet = Eigen::Matrix<std::complex<Real>, 2, 1>;

inline constexpr double kNormTolerance = 1e-12;

namespace kets {

template <typename Real = double>
LevelKet<Real> level(Level l) {
  LevelKet<Real> k = LevelKet<Real>::Zero();
  k(static_cast<int>(l)) = Real(1);
  return k;
}

template <typename Real = double> LevelKet<Real> g() { return level<Real>(Level::g); }
template <typename Real = double> LevelKet<Real> i() { return level<Real>(Level::i); }
template <typename Real = double> LevelKet<Real> e() { return level<Real>(Level::e); }

/// |+> = (|i> + |g>)/sqrt(2)
template <typename Real = double>
LevelKet<Real> plus() {
  return (i<Real>() + g<Real>()) / std::sqrt(Real(2));
}

/// |-> = (|i> - |g>)/sqrt(2)
template <typename Real = double>
LevelKet<Real> minus() {
  return (i<Real>() - g<Real>()) / std::sqrt(Real(2));
}

template <typename Real = double>
ComplexVector<Real> fock(int n, const BasisSpec& spec) {
  if (n < 0 || n > spec.fock_cutoff)
    throw DomainError("fock: photon number " + std::to_string(n) + " outside cutoff");
  ComplexVector<Real> v = ComplexVector<Real>::Zero(spec.photon_dim());
  v(n) = Real(1);
  return v;
}

/// Embed a (g, i) qubit ket into the three-level space.
template <typename Real>
LevelKet<Real> embed(const QubitKet<Real>& q) {
  LevelKet<Real> k = LevelKet<Real>::Zero();
  k.template head<2>() = q;
  return k;
}

}  // namespace kets

/// Kronecker product of per-SQUID kets and a cavity ket in canonical order.
/// The result is a raw amplitude vector; normalization is the caller's concern.
template <typename Real>
ComplexVector<Real> product_amplitudes(const BasisSpec& spec,
                                       const std::vector<LevelKet<Real>>& squids,
                                       const ComplexVector<Real>& cavity) {
  if (static_cast<int>(squids.size()) != spec.num_squids)
    throw DomainError("product_amplitudes: wrong number of SQUID factors");
  if (cavity.size() != spec.photon_dim())
    throw DomainError("product_amplitudes: cavity ket has wrong dimension");
  ComplexVector<Real> out = cavity;
  for (auto it = squids.rbegin(); it != squids.rend(); ++it) {
    ComplexVector<Real> next(out.size() * kLevels);
    for (int l = 0; l < kLevels; ++l) next.segment(l * out.size(), out.size()) = (*it)(l) * out;
    out = std::move(next);
  }
  return out;
}

/// Normalized state vector over a BasisSpec. Every constructor checks the
/// norm; drift is repaired only through renormalized().
template <typename Real = double>
class PureState {
 public:
  using Scalar = std::complex<Real>;
  using Vector = ComplexVector<Real>;

  PureState(BasisSpec spec, Vector amplitudes) : spec_(spec), amps_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amps_.size()) != spec_.dimension())
      throw DomainError("PureState: amplitude vector has length " + std::to_string(amps_.size()) +
                        ", basis dimension is " + std::to_string(spec_.dimension()));
    const Real drift = std::abs(amps_.norm() - Real(1));
    if (!(drift < Real(kNormTolerance)))
      throw DomainError("PureState: amplitudes not normalized (| |psi| - 1 | = " +
                        std::to_string(static_cast<double>(drift)) + ")");
  }

  static PureState renormalized(BasisSpec spec, Vector amplitudes) {
    const Real n = amplitudes.norm();
    if (!(n > Real(0)) || !std::isfinite(static_cast<double>(n)))
      throw DomainError("PureState: cannot normalize a zero or non-finite vector");
    return PureState(spec, amplitudes / n);
  }

  static PureState basis_state(BasisSpec spec, std::span<const Level> levels, int photons) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(spec.dimension()));
    v(static_cast<Eigen::Index>(spec.index(levels, photons))) = Real(1);
    return PureState(spec, std::move(v));
  }

  static PureState basis_state(BasisSpec spec, std::initializer_list<Level> levels, int photons) {
    return basis_state(spec, std::span<const Level>(levels.begin(), levels.size()), photons);
  }

  static PureState product(BasisSpec spec, const std::vector<LevelKet<Real>>& squids,
                           const Vector& cavity) {
    return PureState(spec, product_amplitudes<Real>(spec, squids, cavity));
  }

  /// |g...g>|0>
  static PureState ground(BasisSpec spec) {
    std::vector<Level> levels(static_cast<std::size_t>(spec.num_squids), Level::g);
    return basis_state(spec, std::span<const Level>(levels), 0);
  }

  const BasisSpec& spec() const { return spec_; }
  const Vector& amplitudes() const { return amps_; }
  Eigen::Index dimension() const { return amps_.size(); }
  Scalar operator[](std::size_t idx) const { return amps_(static_cast<Eigen::Index>(idx)); }

  Scalar amplitude(std::initializer_list<Level> levels, int photons) const {
    return amps_(static_cast<Eigen::Index>(spec_.index(levels, photons)));
  }

  /// Sum of |amplitude|^2 over basis states selected by the predicate.
  Real population(const std::function<bool(const BasisSpec&, std::size_t)>& pred) const {
    Real p = 0;
    for (std::size_t idx = 0; idx < spec_.dimension(); ++idx)
      if (pred(spec_, idx)) p += std::norm(amps_(static_cast<Eigen::Index>(idx)));
    return p;
  }

  Real level_population(int squid, Level l) const {
    spec_.check_squid(squid);
    return population([&](const BasisSpec& s, std::size_t idx) { return s.level_of(idx, squid) == l; });
  }

  Real photon_population_at_least(int n) const {
    return population([&](const BasisSpec& s, std::size_t idx) { return s.photons_of(idx) >= n; });
  }

  /// Population outside {g, i}^N (x) {|0>, |1>}.
  Real leakage() const {
    return population([](const BasisSpec& s, std::size_t idx) {
      if (s.photons_of(idx) > 1) return true;
      for (int k = 0; k < s.num_squids; ++k)
        if (s.level_of(idx, k) == Level::e) return true;
      return false;
    });
  }

 private:
  BasisSpec spec_;
  Vector amps_;
};

using State = PureState<double>;

namespace detail {
template <typename Real>
void require_same_spec(const PureState<Real>& a, const PureState<Real>& b, const char* what) {
  if (!(a.spec() == b.spec())) throw DomainError(std::string(what) + ": basis specs differ");
}
}  // namespace detail

/// <a|b>, conjugate-linear in a.
template <typename Real>
std::complex<Real> inner_product(const PureState<Real>& a, const PureState<Real>& b) {
  detail::require_same_spec(a, b, "inner_product");
  return a.amplitudes().dot(b.amplitudes());
}

/// |<a|b>|^2
template <typename Real>
Real fidelity_pure(const PureState<Real>& a, const PureState<Real>& b) {
  return std::clamp(std::norm(inner_product(a, b)), Real(0), Real(1));
}

/// min over theta of || a - e^{i theta} b ||.
template <typename Real>
Real phase_aligned_distance(const PureState<Real>& a, const PureState<Real>& b) {
  const std::complex<Real> ov = inner_product(b, a);
  const std::complex<Real> phase = std::abs(ov) > Real(0) ? ov / std::abs(ov) : std::complex<Real>(1);
  return (a.amplitudes() - phase * b.amplitudes()).norm();
}

template <typename Real>
bool equal_up_to_global_phase(const PureState<Real>& a, const PureState<Real>& b, Real tol) {
  if (!(tol > Real(0))) throw DomainError("equal_up_to_global_phase: tol must be positive");
  return phase_aligned_distance(a, b) < tol;
}

/// Reduced state of a set of kept tensor factors, in canonical factor order
/// (SQUIDs ascending, cavity last).
template <typename Real = double>
struct DensityMatrix {
  ComplexMatrix<Real> entries;
  std::vector<Subsystem> kept;
  std::vector<int> dims;

  Eigen::Index dimension() const { return entries.rows(); }

  std::complex<Real> trace() const { return entries.trace(); }

  Real hermiticity_error() const { return (entries - entries.adjoint()).cwiseAbs().maxCoeff(); }

  Real min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix<Real>> es(entries, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
  }

  Real purity() const { return (entries * entries).trace().real(); }
};

/// Trace out every factor not listed in `keep`.
template <typename Real>
DensityMatrix<Real> partial_trace(const PureState<Real>& state, std::vector<Subsystem> keep) {
  const BasisSpec& spec = state.spec();
  if (keep.empty()) throw DomainError("partial_trace: empty subsystem selection");
  const int factors = spec.num_squids + 1;
  auto position = [&](Subsystem s) {
    if (s.is_cavity()) return spec.num_squids;
    spec.check_squid(s.squid_index());
    return s.squid_index();
  };
  std::vector<bool> selected(static_cast<std::size_t>(factors), false);
  for (Subsystem s : keep) {
    const int p = position(s);
    if (selected[static_cast<std::size_t>(p)])
      throw DomainError("partial_trace: subsystem listed twice");
    selected[static_cast<std::size_t>(p)] = true;
  }

  DensityMatrix<Real> out;
  std::vector<int> factor_dim(static_cast<std::size_t>(factors), kLevels);
  factor_dim.back() = spec.photon_dim();
  Eigen::Index kept_dim = 1, traced_dim = 1;
  for (int p = 0; p < factors; ++p) {
    if (selected[static_cast<std::size_t>(p)]) {
      out.kept.push_back(p == spec.num_squids ? Subsystem::cavity() : Subsystem::squid(p));
      out.dims.push_back(factor_dim[static_cast<std::size_t>(p)]);
      kept_dim *= factor_dim[static_cast<std::size_t>(p)];
    } else {
      traced_dim *= factor_dim[static_cast<std::size_t>(p)];
    }
  }

  // Amplitudes reshaped as (kept index) x (traced index); rho = M M^dagger.
  ComplexMatrix<Real> m = ComplexMatrix<Real>::Zero(kept_dim, traced_dim);
  std::vector<int> digits(static_cast<std::size_t>(factors));
  for (std::size_t idx = 0; idx < spec.dimension(); ++idx) {
    std::size_t rest = idx;
    for (int p = factors - 1; p >= 0; --p) {
      digits[static_cast<std::size_t>(p)] = static_cast<int>(rest % static_cast<std::size_t>(factor_dim[static_cast<std::size_t>(p)]));
      rest /= static_cast<std::size_t>(factor_dim[static_cast<std::size_t>(p)]);
    }
    Eigen::Index row = 0, col = 0;
    for (int p = 0; p < factors; ++p) {
      const auto up = static_cast<std::size_t>(p);
      if (selected[up])
        row = row * factor_dim[up] + digits[up];
      else
        col = col * factor_dim[up] + digits[up];
    }
    m(row, col) = state.amplitudes()(static_cast<Eigen::Index>(idx));
  }
  out.entries = m * m.adjoint();
  return out;
}

/// <psi|rho|psi> for a single-SQUID reduced state and a (g, i) qubit ket.
/// Throws LeakageError when rho has |e> population above 1e-10.
template <typename Real>
Real fidelity_against_dm(const QubitKet<Real>& psi, const DensityMatrix<Real>& rho) {
  if (rho.kept.size() != 1 || rho.kept.front().is_cavity() || rho.dimension() != kLevels)
    throw DomainError("fidelity_against_dm: rho must be a single-SQUID reduced state");
  const Real e_pop = rho.entries(2, 2).real();
  if (e_pop > Real(1e-10))
    throw LeakageError("fidelity_against_dm: |e> population " + std::to_string(static_cast<double>(e_pop)) +
                       " exceeds 1e-10");
  const std::complex<Real> f = psi.dot(rho.entries.template topLeftCorner<2, 2>() * psi);
  return std::clamp(f.real(), Real(0), Real(1));
}

}  // namespace uqcm
