#ifndef CQZE_TIMING_HPP
#define CQZE_TIMING_HPP

#include <stdexcept>

namespace cqze {

/// Vacuum speed of light, m/s.
inline constexpr double kLightSpeed = 299792458.0;

/// Upper bound on the switchable-mirror control time for a sender-receiver
/// separation of L meters: the mirrors must toggle faster than one channel
/// round trip, 2L/c0. Documentation helper only; nothing in the simulator
/// models mirror timing.
inline double switch_time_bound(double distance_m) {
  if (!(distance_m > 0.0)) {
    throw std::invalid_argument("switch_time_bound: distance must be positive");
  }
  return 2.0 * distance_m / kLightSpeed;
}

}  // namespace cqze

#endif  // CQZE_TIMING_HPP
