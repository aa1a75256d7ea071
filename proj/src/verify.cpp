#include "uqcm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace uqcm {

namespace {

using C = std::complex<double>;
using Vec = ComplexVector<double>;
using Ket = LevelKet<double>;

struct KetBuilder {
  BasisSpec spec;
  Vec sum;

  explicit KetBuilder(const BasisSpec& s) : spec(s), sum(Vec::Zero(static_cast<Eigen::Index>(s.dimension()))) {}

  void add(C coef, const Ket& s1, const Ket& s2, const Ket& s3, int photons) {
    sum += coef * product_amplitudes<double>(spec, {s1, s2, s3}, kets::fock<double>(photons, spec));
  }

  /// coef * s1 (x) |Phi>_23 (x) |n>
  void add_phi(C coef, const Ket& s1, int photons) {
    const double r = 1 / std::sqrt(2.0);
    add(coef * r, s1, kets::plus(), kets::minus(), photons);
    add(coef * r, s1, kets::minus(), kets::plus(), photons);
  }

  State build() const { return State(spec, sum); }
};

void require_three_squids(const BasisSpec& spec) {
  if (spec.num_squids != 3) throw DomainError("cloner states are defined on exactly three SQUIDs");
}

}  // namespace

State target_state(const InputQubit& q, const BasisSpec& spec) {
  q.validate();
  require_three_squids(spec);
  const double s23 = std::sqrt(2.0 / 3.0), s13 = std::sqrt(1.0 / 3.0);
  const Ket g = kets::g();
  KetBuilder b(spec);
  b.add(q.alpha * s23, g, kets::plus(), kets::plus(), 1);
  b.add_phi(q.alpha * s13, g, 0);
  b.add(q.beta * s23, g, kets::minus(), kets::minus(), 0);
  b.add_phi(q.beta * s13, g, 1);
  return b.build();
}

std::map<std::string, State> reference_states(const InputQubit& q, const BasisSpec& spec) {
  q.validate();
  require_three_squids(spec);
  const double s23 = std::sqrt(2.0 / 3.0), s13 = std::sqrt(1.0 / 3.0), s16 = std::sqrt(1.0 / 6.0);
  const C I(0, 1);
  const Ket g = kets::g(), i = kets::i(), e = kets::e(), p = kets::plus(), m = kets::minus();
  const Ket psi = q.alpha * p + q.beta * m;      // input on SQUID1
  const Ket flipped = q.alpha * m + q.beta * p;  // input after a cavity-controlled flip

  std::map<std::string, State> refs;
  auto put = [&](const std::string& label, const KetBuilder& b) { refs.emplace(label, b.build()); };

  KetBuilder in(spec);
  in.add(1, psi, g, g, 0);
  put("input", in);

  KetBuilder s1(spec);
  s1.add(1, psi, s23 * g + I * s13 * e, g, 0);
  put("step1", s1);

  KetBuilder s2(spec);
  s2.add(s23, psi, g, g, 0);
  s2.add(s13, psi, g, g, 1);
  put("step2", s2);

  KetBuilder s3(spec);
  s3.add(s23, psi, g, g, 0);
  s3.add(s13, flipped, g, g, 1);
  put("step3", s3);

  KetBuilder s4(spec);
  s4.add(s23, psi, g, g, 0);
  s4.add(s16, flipped, g, g, 1);
  s4.add(-I * s16, flipped, e, g, 0);
  put("step4", s4);

  KetBuilder s5(spec);
  s5.add(s23, psi, g, g, 0);
  s5.add(-I * s16, flipped, g, e, 0);
  s5.add(-I * s16, flipped, e, g, 0);
  put("step5", s5);

  KetBuilder s6(spec);
  s6.add(s23, psi, g, g, 0);
  s6.add(-s16, flipped, g, i, 0);
  s6.add(-s16, flipped, i, g, 0);
  put("step6", s6);

  KetBuilder s7(spec);
  s7.add(s23, -q.alpha * i + q.beta * g, m, m, 0);
  s7.add_phi(s13, q.alpha * g - q.beta * i, 0);
  put("step7", s7);

  KetBuilder s8(spec);
  s8.add(s23, I * q.alpha * e + q.beta * g, m, m, 0);
  s8.add_phi(s13, q.alpha * g + I * q.beta * e, 0);
  put("step8", s8);

  KetBuilder s9(spec);
  s9.add(s23 * q.alpha, g, m, m, 1);
  s9.add(s23 * q.beta, g, m, m, 0);
  s9.add_phi(s13 * q.alpha, g, 0);
  s9.add_phi(s13 * q.beta, g, 1);
  put("step9", s9);

  refs.emplace("step10", target_state(q, spec));
  return refs;
}

CloneReport clone_fidelities(const State& final_state, const InputQubit& q) {
  q.validate();
  const BasisSpec& spec = final_state.spec();
  require_three_squids(spec);
  const QubitKet<double> psi = q.ket();

  auto fidelity = [&](int squid) {
    const DensityMatrix<double> rho = partial_trace(final_state, {Subsystem::squid(squid)});
    const C f = psi.dot(rho.entries.topLeftCorner<2, 2>() * psi);
    return std::clamp(f.real(), 0.0, 1.0);
  };

  CloneReport r;
  r.fidelity_squid2 = fidelity(1);
  r.fidelity_squid3 = fidelity(2);
  r.target_overlap = std::clamp(std::abs(inner_product(target_state(q, spec), final_state)), 0.0, 1.0);
  r.leakage = std::clamp(final_state.leakage(), 0.0, 1.0);
  r.leakage_flagged = r.leakage > kLeakageTolerance;

  // Ancilla states conditioned on the clone pairs |++> and |-->.
  const int p_dim = spec.photon_dim();
  Vec a_pp = Vec::Zero(kLevels * p_dim), a_mm = Vec::Zero(kLevels * p_dim);
  const Ket plus = kets::plus(), minus = kets::minus();
  for (std::size_t idx = 0; idx < spec.dimension(); ++idx) {
    const int l1 = static_cast<int>(spec.level_of(idx, 0));
    const int l2 = static_cast<int>(spec.level_of(idx, 1));
    const int l3 = static_cast<int>(spec.level_of(idx, 2));
    const Eigen::Index row = l1 * p_dim + spec.photons_of(idx);
    const C amp = final_state[idx];
    a_pp(row) += std::conj(plus(l2) * plus(l3)) * amp;
    a_mm(row) += std::conj(minus(l2) * minus(l3)) * amp;
  }
  r.ancilla_orthogonality = std::clamp(std::abs(a_pp.dot(a_mm)), 0.0, 1.0);
  return r;
}

std::vector<StepOverlap> step_conformance(const StepTrace& trace, const InputQubit& q) {
  if (trace.entries.empty()) throw DomainError("step_conformance: empty trace");
  const auto refs = reference_states(q, trace.entries.front().state.spec());
  std::vector<StepOverlap> out;
  auto check = [&](const std::string& label) {
    const TraceEntry* entry = trace.find(label);
    if (!entry) throw DomainError("step_conformance: trace has no entry labeled '" + label + "'");
    const State& ref = refs.at(label);
    out.push_back({label, std::abs(inner_product(ref, entry->state)), phase_aligned_distance(entry->state, ref)});
  };
  check("input");
  for (int step = 1; step <= 10; ++step) check("step" + std::to_string(step));
  return out;
}

}  // namespace uqcm
