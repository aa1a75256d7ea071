#include "uqcm/schedule.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "uqcm/errors.hpp"

namespace uqcm {

double Lane::duration() const {
  double t = 0;
  for (const Pulse& op : ops) t += op.duration;
  return t;
}

bool Lane::uses_cavity() const {
  return std::any_of(ops.begin(), ops.end(), [](const Pulse& op) { return op.uses_cavity(); });
}

double Slot::duration() const {
  double t = 0;
  for (const Lane& lane : lanes) t = std::max(t, lane.duration());
  return t;
}

void Schedule::validate(const BasisSpec& spec) const {
  int last_step = 0;
  for (const Slot& slot : slots) {
    const std::string where = "schedule slot '" + slot.label + "'";
    if (slot.step < last_step) throw DomainError(where + ": step numbers must be nondecreasing");
    last_step = slot.step;
    if (slot.lanes.empty()) throw DomainError(where + ": no lanes");
    std::vector<bool> busy(static_cast<std::size_t>(spec.num_squids), false);
    int cavity_users = 0;
    for (const Lane& lane : slot.lanes) {
      if (lane.squid < 0 || lane.squid >= spec.num_squids)
        throw DomainError(where + ": lane targets SQUID index " + std::to_string(lane.squid) + " outside the register");
      if (busy[static_cast<std::size_t>(lane.squid)])
        throw DomainError(where + ": two lanes act on SQUID " + std::to_string(lane.squid + 1));
      busy[static_cast<std::size_t>(lane.squid)] = true;
      for (const Pulse& op : lane.ops) {
        op.validate();
        if (op.target != lane.squid)
          throw DomainError(where + ": pulse targets SQUID " + std::to_string(op.target + 1) + " inside lane for SQUID " +
                            std::to_string(lane.squid + 1));
      }
      if (lane.uses_cavity()) ++cavity_users;
    }
    if (cavity_users > 1) throw DomainError(where + ": more than one lane couples to the cavity");
  }
}

int Schedule::step_count() const {
  int count = 0, last = -1;
  for (const Slot& slot : slots)
    if (slot.step != last) {
      ++count;
      last = slot.step;
    }
  return count;
}

double total_duration(const Schedule& schedule) {
  return std::accumulate(schedule.slots.begin(), schedule.slots.end(), 0.0,
                         [](double acc, const Slot& s) { return acc + s.duration(); });
}

}  // namespace uqcm
