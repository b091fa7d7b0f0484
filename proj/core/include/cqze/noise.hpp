#ifndef CQZE_NOISE_HPP
#define CQZE_NOISE_HPP

#include <cstdint>

#include "cqze/distribution.hpp"
#include "cqze/params.hpp"
#include "cqze/rng.hpp"
#include "cqze/schedule.hpp"

namespace cqze {

/// Monte Carlo channel-noise model: every inner pass of the transmission
/// channel is independently obstructed with probability block_rate.
struct NoiseModel {
  double block_rate = 0.0;  // B in [0, 1]
  std::uint64_t seed = 0;
  int trials = 10000;

  void validate() const;
};

struct MonteCarloResult {
  OutcomeDistribution mean;
  OutcomeDistribution std_error;  // per-field standard error of the mean
  int trials = 0;
  std::uint64_t seed = 0;
};

/// Draws one blocking schedule: exactly M x N uniform draws in fixed
/// (big cycle, inner cycle) order, one per channel pass; a pass is
/// obstructed when its draw falls below block_rate. The sender-side bit is
/// applied on top: where Bob blocks and no obstruction hit, the pass is
/// blocked by Bob. An obstruction sits ahead of Bob's device, so it keeps
/// the pass when both would block.
BlockingSchedule sample_schedule(const ProtocolParams& params, const NoiseModel& model,
                                 UniformStream& stream, int bob_bit);

/// Averages the exact lattice simulation over `model.trials` independently
/// sampled schedules. Trial t consumes its own substream derived from
/// (seed, t), and the reduction runs in fixed trial order, so the result is
/// a pure function of (params, bob_bit, model) regardless of execution
/// order. Standard errors come from the per-trial sample variance.
MonteCarloResult monte_carlo(const ProtocolParams& params, int bob_bit,
                             const NoiseModel& model);

}  // namespace cqze

#endif  // CQZE_NOISE_HPP
