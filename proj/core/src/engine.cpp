#include "cqze/engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "cqze/kahan.hpp"

namespace cqze {

namespace {

struct Rotation {
  double c;
  double s;
  explicit Rotation(double theta) : c(std::cos(theta)), s(std::sin(theta)) {}
};

inline void apply(const Rotation& r, double& a, double& b) {
  const double na = r.c * a - r.s * b;
  const double nb = r.s * a + r.c * b;
  a = na;
  b = nb;
}

void check_bit(int bob_bit) {
  if (bob_bit != 0 && bob_bit != 1) {
    throw std::invalid_argument("bob_bit must be 0 or 1, got " + std::to_string(bob_bit));
  }
}

// Shared body for inner_chain so run_protocol can reuse preallocated
// rotation constants and accumulate into caller-owned sums.
InnerChainResult run_inner(double inner_in, const Rotation& rot,
                           std::span<const ChannelState> states) {
  double y = inner_in;
  double z = 0.0;
  KahanSum<double> bob;
  KahanSum<double> noise;
  for (ChannelState state : states) {
    apply(rot, y, z);
    if (state == ChannelState::kBlockedByBob) {
      bob.add(z * z);
      z = 0.0;
    } else if (state == ChannelState::kBlockedByNoise) {
      noise.add(z * z);
      z = 0.0;
    }
  }
  return {y, z, bob.value(), noise.value()};
}

}  // namespace

std::pair<double, double> rotate_pair(double a, double b, double theta) {
  const Rotation r(theta);
  return {r.c * a - r.s * b, r.s * a + r.c * b};
}

OutcomeDistribution simple_chain(int cycles, bool blocked) {
  if (cycles < 1) {
    throw std::invalid_argument("simple_chain: cycle count must be >= 1");
  }
  const Rotation rot(M_PI / (2.0 * cycles));
  double reflected = 1.0;  // arm feeding D1 at exit
  double channel = 0.0;    // arm feeding D2 at exit
  KahanSum<double> absorbed;
  for (int n = 0; n < cycles; ++n) {
    apply(rot, reflected, channel);
    if (blocked) {
      absorbed.add(channel * channel);
      channel = 0.0;
    }
  }
  OutcomeDistribution out;
  out.d1 = reflected * reflected;
  out.d2 = channel * channel;
  out.bob = absorbed.value();
  return out;
}

InnerChainResult inner_chain(double inner_in, const ProtocolParams& params,
                             std::span<const ChannelState> channel_states) {
  params.validate();
  if (channel_states.size() != static_cast<std::size_t>(params.inner_cycles)) {
    throw std::invalid_argument("inner_chain: schedule row has " +
                                std::to_string(channel_states.size()) + " entries, expected " +
                                std::to_string(params.inner_cycles));
  }
  return run_inner(inner_in, Rotation(params.effective_inner_angle()), channel_states);
}

OutcomeDistribution run_protocol(const ProtocolParams& params, int bob_bit) {
  params.validate();
  check_bit(bob_bit);

  const Rotation outer(params.effective_outer_angle());
  const Rotation inner(params.effective_inner_angle());
  const ChannelState channel_state =
      bob_bit == 1 ? ChannelState::kBlockedByBob : ChannelState::kTransparent;
  const std::vector<ChannelState> row(static_cast<std::size_t>(params.inner_cycles),
                                      channel_state);

  double x = 1.0;
  double y = 0.0;
  apply(outer, x, y);  // first outer splitter

  KahanSum<double> d3;
  KahanSum<double> bob;
  const int chains = params.outer_cycles - 1;
  for (int m = 0; m < chains; ++m) {
    const InnerChainResult r = run_inner(y, inner, row);
    d3.add(r.channel * r.channel);  // surviving channel amplitude hits D3
    bob.add(r.absorbed_bob);
    y = r.inner_arm;
    apply(outer, x, y);
  }
  if (params.final_inner_chain) {
    const InnerChainResult r = run_inner(y, inner, row);
    d3.add(r.channel * r.channel);
    bob.add(r.absorbed_bob);
    y = r.inner_arm;
  }

  OutcomeDistribution out;
  out.d1 = x * x;
  out.d2 = y * y;
  out.d3 = d3.value();
  out.bob = bob.value();
  return out;
}

double p1_closed_form(int outer_cycles) {
  if (outer_cycles < 1) {
    throw std::invalid_argument("p1_closed_form: cycle count must be >= 1");
  }
  const double c = std::cos(M_PI / (2.0 * outer_cycles));
  return std::pow(c, 2.0 * outer_cycles);
}

}  // namespace cqze
