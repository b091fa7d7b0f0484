#include "cqze/noise.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cqze/kahan.hpp"
#include "cqze/lattice.hpp"

namespace cqze {

namespace {

std::array<double, 5> as_array(const OutcomeDistribution& d) {
  return {d.d1, d.d2, d.d3, d.bob, d.noise};
}

OutcomeDistribution from_array(const std::array<double, 5>& a) {
  return {a[0], a[1], a[2], a[3], a[4]};
}

}  // namespace

void NoiseModel::validate() const {
  if (!(block_rate >= 0.0 && block_rate <= 1.0)) {
    throw std::invalid_argument("NoiseModel: block rate must be in [0, 1], got " +
                                std::to_string(block_rate));
  }
  if (trials < 1) {
    throw std::invalid_argument("NoiseModel: trial count must be >= 1, got " +
                                std::to_string(trials));
  }
}

BlockingSchedule sample_schedule(const ProtocolParams& params, const NoiseModel& model,
                                 UniformStream& stream, int bob_bit) {
  params.validate();
  model.validate();
  if (bob_bit != 0 && bob_bit != 1) {
    throw std::invalid_argument("sample_schedule: bob_bit must be 0 or 1");
  }
  const ChannelState bob_state =
      bob_bit == 1 ? ChannelState::kBlockedByBob : ChannelState::kTransparent;
  BlockingSchedule schedule(params.outer_cycles, params.inner_cycles, bob_state);
  for (int m = 0; m < params.outer_cycles; ++m) {
    for (int n = 0; n < params.inner_cycles; ++n) {
      // One draw per pass, unconditionally, so the stream layout does not
      // depend on B or on the bit.
      const bool obstructed = stream.next_unit() < model.block_rate;
      if (obstructed) schedule.set(m, n, ChannelState::kBlockedByNoise);
    }
  }
  return schedule;
}

MonteCarloResult monte_carlo(const ProtocolParams& params, int bob_bit,
                             const NoiseModel& model) {
  params.validate();
  model.validate();

  // Means and variances are accumulated relative to the first trial's
  // values. On a degenerate run (B = 0, or Bob blocking everything) all
  // trials are identical and the shifted sums are exactly zero, so the mean
  // reproduces the single-trial result bit for bit and the errors are 0.
  std::array<double, 5> reference{};
  std::array<KahanSum<double>, 5> delta_sum;
  std::array<KahanSum<double>, 5> delta_sq_sum;

  for (int t = 0; t < model.trials; ++t) {
    UniformStream stream(substream_seed(model.seed, StreamDomain::kNoiseTrial,
                                        static_cast<std::uint64_t>(t)));
    const BlockingSchedule schedule = sample_schedule(params, model, stream, bob_bit);
    const std::array<double, 5> sample = as_array(simulate_exact(params, schedule));
    if (t == 0) reference = sample;
    for (std::size_t f = 0; f < 5; ++f) {
      const double d = sample[f] - reference[f];
      delta_sum[f].add(d);
      delta_sq_sum[f].add(d * d);
    }
  }

  const double n = static_cast<double>(model.trials);
  std::array<double, 5> mean{};
  std::array<double, 5> std_error{};
  for (std::size_t f = 0; f < 5; ++f) {
    const double s1 = delta_sum[f].value();
    const double s2 = delta_sq_sum[f].value();
    mean[f] = reference[f] + s1 / n;
    if (model.trials > 1) {
      const double variance = (s2 - s1 * s1 / n) / (n - 1.0);
      std_error[f] = std::sqrt(std::max(0.0, variance) / n);
    }
  }

  MonteCarloResult result;
  result.mean = from_array(mean);
  result.std_error = from_array(std_error);
  result.trials = model.trials;
  result.seed = model.seed;
  return result;
}

}  // namespace cqze
