#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "uqcm/errors.hpp"

namespace uqcm {

enum class PulseKind { Jc, DriveGe, DriveIe, Raman, FreeEvolve };

inline std::string_view pulse_kind_name(PulseKind k) {
  switch (k) {
    case PulseKind::Jc: return "jc";
    case PulseKind::DriveGe: return "drive_ge";
    case PulseKind::DriveIe: return "drive_ie";
    case PulseKind::Raman: return "raman";
    case PulseKind::FreeEvolve: return "free_evolve";
  }
  return "unknown";
}

inline std::optional<PulseKind> parse_pulse_kind(std::string_view s) {
  for (PulseKind k : {PulseKind::Jc, PulseKind::DriveGe, PulseKind::DriveIe, PulseKind::Raman,
                      PulseKind::FreeEvolve})
    if (pulse_kind_name(k) == s) return k;
  return std::nullopt;
}

/// One square pulse (or idle period) on a single SQUID. phi1/phi2 are the
/// Raman drive phases and are ignored by the other kinds.
template <typename Real = double>
struct PulseOp {
  PulseKind kind = PulseKind::FreeEvolve;
  int target = 0;
  Real duration = 0;
  Real phi1 = 0;
  Real phi2 = 0;

  bool uses_cavity() const { return kind == PulseKind::Jc; }

  void validate() const {
    if (!(duration >= Real(0)) || !std::isfinite(static_cast<double>(duration)))
      throw DomainError("PulseOp: duration must be finite and >= 0");
  }
};

using Pulse = PulseOp<double>;

}  // namespace uqcm
