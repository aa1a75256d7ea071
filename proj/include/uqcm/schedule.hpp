#pragma once

#include <string>
#include <vector>

#include "uqcm/basis.hpp"
#include "uqcm/pulse.hpp"

namespace uqcm {

/// Pulses applied back to back on one SQUID.
struct Lane {
  int squid = 0;
  std::vector<Pulse> ops;

  double duration() const;
  bool uses_cavity() const;
};

/// Lanes running simultaneously on disjoint SQUIDs. Only one lane may hold
/// the cavity.
struct Slot {
  int step = 0;
  std::string label;
  std::vector<Lane> lanes;

  double duration() const;
};

struct Schedule {
  std::vector<Slot> slots;

  /// Throws DomainError on overlapping lanes, a second cavity user, a pulse
  /// whose target differs from its lane, or an out-of-range SQUID.
  void validate(const BasisSpec& spec) const;

  int step_count() const;
};

double total_duration(const Schedule& schedule);

}  // namespace uqcm
