#ifndef CQZE_DISTRIBUTION_HPP
#define CQZE_DISTRIBUTION_HPP

#include <cmath>
#include <stdexcept>

namespace cqze {

/// Terminal probabilities of one photon sent through the protocol.
/// The five sinks are exhaustive: the photon either clicks D1 or D2 at the
/// sender, clicks one of the D3 channel monitors, is absorbed at the
/// receiver's blocking device, or is absorbed by a channel obstruction that
/// is not the receiver's.
struct OutcomeDistribution {
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
  double bob = 0.0;
  double noise = 0.0;

  double total() const { return d1 + d2 + d3 + bob + noise; }

  /// Throws std::logic_error unless every field is in [0, 1] (within
  /// `tolerance`, since squared amplitudes can land an ulp above 1) and the
  /// total is 1 within `tolerance`.
  void validate(double tolerance = 1e-10) const {
    for (double p : {d1, d2, d3, bob, noise}) {
      if (!(p >= -tolerance && p <= 1.0 + tolerance)) {
        throw std::logic_error("OutcomeDistribution: field outside [0, 1]");
      }
    }
    if (std::fabs(total() - 1.0) > tolerance) {
      throw std::logic_error("OutcomeDistribution: total deviates from 1 by " +
                             std::to_string(total() - 1.0));
    }
  }
};

}  // namespace cqze

#endif  // CQZE_DISTRIBUTION_HPP
