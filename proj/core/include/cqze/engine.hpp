#ifndef CQZE_ENGINE_HPP
#define CQZE_ENGINE_HPP

#include <span>
#include <utility>

#include "cqze/distribution.hpp"
#include "cqze/params.hpp"
#include "cqze/schedule.hpp"

namespace cqze {

/// Real amplitudes of the photon over the three live arms: the outer-chain
/// left arm, the inner-chain left arm, and the transmission channel. All
/// rotations in the setup are real, so no phases are tracked. The squared
/// norm only ever decreases (mass leaks to sinks, never back).
struct TripartiteAmplitude {
  double outer_arm = 0.0;
  double inner_arm = 0.0;
  double channel = 0.0;

  double norm2() const {
    return outer_arm * outer_arm + inner_arm * inner_arm + channel * channel;
  }
};

/// One beam-splitter transform on a pair of arm amplitudes:
/// (a, b) -> (a cos t - b sin t, a sin t + b cos t).
/// Norm-preserving; the splitter reflectivity is cos^2 t.
std::pair<double, double> rotate_pair(double a, double b, double theta);

/// The single-stage chain: N identical splitters with theta = pi/(2N).
/// Unblocked, the amplitude rotates coherently into the channel arm and D2
/// fires. Blocked, the channel component is absorbed after every splitter
/// (including the last, so a blocked run can never reach D2) and the photon
/// is most likely reflected back to D1.
OutcomeDistribution simple_chain(int cycles, bool blocked);

struct InnerChainResult {
  double inner_arm = 0.0;      // amplitude remaining in the inner left arm
  double channel = 0.0;        // amplitude left in the channel at chain end
  double absorbed_bob = 0.0;   // mass absorbed at the receiver's device
  double absorbed_noise = 0.0; // mass absorbed by channel obstructions
};

/// Runs one big cycle's inner chain of N splitter passes on an inner-arm
/// amplitude, starting with an empty channel. Each pass rotates
/// (inner, channel) by the effective inner angle; a blocked pass then
/// absorbs the squared channel amplitude into the matching sink.
/// y_in^2 == inner_arm^2 + channel^2 + absorbed mass on return.
/// Throws std::invalid_argument when the schedule row length is not N.
InnerChainResult inner_chain(double inner_in, const ProtocolParams& params,
                             std::span<const ChannelState> channel_states);

/// Full chained run for one protocol bit. bob_bit 0 leaves the channel
/// transparent on every pass, bob_bit 1 blocks every pass. M outer splitter
/// applications are interleaved with M-1 inner chains (one more when
/// params.final_inner_chain is set); channel amplitude surviving an inner
/// chain is collected by the D3 monitors, and the final outer splitter
/// output feeds D1/D2 directly.
OutcomeDistribution run_protocol(const ProtocolParams& params, int bob_bit);

/// Closed-form probability of a D1 click when the channel is never blocked:
/// cos^(2M)(pi/(2M)), independent of the inner cycle count.
double p1_closed_form(int outer_cycles);

}  // namespace cqze

#endif  // CQZE_ENGINE_HPP
