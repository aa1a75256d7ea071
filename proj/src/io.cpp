#include "uqcm/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace uqcm {

double round_sig12(double v) {
  if (v == 0 || !std::isfinite(v)) return v == 0 ? 0.0 : v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string format_sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0 ? 0.0 : v);
  return buf;
}

namespace {
Json complex_pair(std::complex<double> c) { return Json::array({round_sig12(c.real()), round_sig12(c.imag())}); }

Json stats_json(const SummaryStats& s) {
  return Json{{"min", round_sig12(s.min)},
              {"max", round_sig12(s.max)},
              {"mean", round_sig12(s.mean)},
              {"variance", round_sig12(s.variance)}};
}
}  // namespace

Json state_to_json(const State& state) {
  Json amps = Json::array();
  for (Eigen::Index k = 0; k < state.dimension(); ++k) amps.push_back(complex_pair(state.amplitudes()(k)));
  return Json{{"basis", {{"num_squids", state.spec().num_squids}, {"fock_cutoff", state.spec().fock_cutoff}}},
              {"amplitudes", std::move(amps)}};
}

State state_from_json(const Json& j) {
  try {
    const BasisSpec spec(j.at("basis").at("num_squids").get<int>(), j.at("basis").at("fock_cutoff").get<int>());
    const Json& amps = j.at("amplitudes");
    if (amps.size() != spec.dimension())
      throw DomainError("state JSON: expected " + std::to_string(spec.dimension()) + " amplitudes, got " +
                        std::to_string(amps.size()));
    ComplexVector<double> v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t k = 0; k < amps.size(); ++k) {
      const Json& a = amps[k];
      if (!a.is_array() || a.size() != 2) throw DomainError("state JSON: amplitude entries must be [re, im]");
      v(static_cast<Eigen::Index>(k)) = {a[0].get<double>(), a[1].get<double>()};
    }
    if (!(std::abs(v.norm() - 1) < 1e-9)) throw DomainError("state JSON: amplitudes are not normalized");
    return State::renormalized(spec, std::move(v));
  } catch (const Json::exception& err) {
    throw DomainError(std::string("state JSON: ") + err.what());
  }
}

Json trace_to_json(const StepTrace& trace) {
  Json out = Json::array();
  for (const TraceEntry& e : trace.entries)
    out.push_back({{"label", e.label}, {"t_elapsed", round_sig12(e.elapsed)}, {"state", state_to_json(e.state)}});
  return out;
}

Json schedule_to_json(const Schedule& schedule) {
  Json out = Json::array();
  for (const Slot& slot : schedule.slots) {
    Json ops = Json::array();
    for (const Lane& lane : slot.lanes)
      for (const Pulse& op : lane.ops)
        ops.push_back({{"kind", std::string(pulse_kind_name(op.kind))},
                       {"target", op.target + 1},
                       {"duration", round_sig12(op.duration)},
                       {"phi1", round_sig12(op.phi1)},
                       {"phi2", round_sig12(op.phi2)}});
    out.push_back({{"step", slot.step},
                   {"label", slot.label},
                   {"duration", round_sig12(slot.duration())},
                   {"ops", std::move(ops)}});
  }
  return out;
}

Json matrix_to_json(const ComplexMatrix<double>& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_pair(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json input_to_json(const InputQubit& q) { return Json{{"alpha", complex_pair(q.alpha)}, {"beta", complex_pair(q.beta)}}; }

Json report_to_json(const CloneReport& r) {
  return Json{{"fidelity_squid2", round_sig12(r.fidelity_squid2)},
              {"fidelity_squid3", round_sig12(r.fidelity_squid3)},
              {"target_overlap", round_sig12(r.target_overlap)},
              {"ancilla_orthogonality", round_sig12(r.ancilla_orthogonality)},
              {"leakage", round_sig12(r.leakage)},
              {"leakage_flagged", r.leakage_flagged}};
}

std::string sweep_csv(const SweepReport& report) {
  std::ostringstream os;
  os << "sample,theta,phi,f2,f3,target_overlap,leakage\n";
  for (const SweepSample& s : report.samples)
    os << s.index << ',' << format_sig12(s.point.theta) << ',' << format_sig12(s.point.phi) << ','
       << format_sig12(s.report.fidelity_squid2) << ',' << format_sig12(s.report.fidelity_squid3) << ','
       << format_sig12(s.report.target_overlap) << ',' << format_sig12(s.report.leakage) << '\n';
  return os.str();
}

Json sweep_summary_json(const SweepReport& report) {
  Json j = stats_json(report.f2);
  j["n"] = report.n;
  j["seed"] = report.seed;
  j["f3"] = stats_json(report.f3);
  j["target_overlap"] = stats_json(report.target_overlap);
  return j;
}

}  // namespace uqcm
