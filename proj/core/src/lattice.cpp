#include "cqze/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cqze {

namespace {

constexpr double kStepTolerance = 1e-12;

void check_dimensions(const ProtocolParams& params, const BlockingSchedule& schedule) {
  if (schedule.outer_cycles() != params.outer_cycles ||
      schedule.inner_cycles() != params.inner_cycles) {
    throw std::invalid_argument(
        "schedule is " + std::to_string(schedule.outer_cycles()) + "x" +
        std::to_string(schedule.inner_cycles()) + ", params want " +
        std::to_string(params.outer_cycles) + "x" + std::to_string(params.inner_cycles));
  }
}

// Drives `lattice` through the whole cycle structure, invoking `per_pass`
// after every inner pass. Shared by simulate_exact and leak_trace so the
// two walk bit-identical paths.
template <typename PerPass>
void walk(ModeLattice& lattice, const ProtocolParams& params,
          const BlockingSchedule& schedule, PerPass&& per_pass) {
  lattice.outer_splitter();
  const int chains = params.outer_cycles - (params.final_inner_chain ? 0 : 1);
  for (int m = 0; m < chains; ++m) {
    for (int n = 0; n < params.inner_cycles; ++n) {
      lattice.inner_splitter();
      lattice.channel_action(schedule.at(m, n), m, n);
      per_pass(lattice);
    }
    lattice.collect_d3(m);
    if (m + 1 < params.outer_cycles) lattice.outer_splitter();
  }
  lattice.terminate();
}

}  // namespace

ModeLattice::ModeLattice(const ProtocolParams& params) {
  params.validate();
  const long double outer = params.effective_outer_angle();
  const long double inner = params.effective_inner_angle();
  cos_outer_ = std::cos(outer);
  sin_outer_ = std::sin(outer);
  cos_inner_ = std::cos(inner);
  sin_inner_ = std::sin(inner);
  sinks_.reserve(static_cast<std::size_t>(params.outer_cycles) * params.inner_cycles +
                 params.outer_cycles);
  check();
}

void ModeLattice::outer_splitter() {
  const long double a = cos_outer_ * outer_arm_ - sin_outer_ * inner_arm_;
  const long double b = sin_outer_ * outer_arm_ + cos_outer_ * inner_arm_;
  outer_arm_ = a;
  inner_arm_ = b;
  check();
}

void ModeLattice::inner_splitter() {
  const long double a = cos_inner_ * inner_arm_ - sin_inner_ * channel_;
  const long double b = sin_inner_ * inner_arm_ + cos_inner_ * channel_;
  inner_arm_ = a;
  channel_ = b;
  check();
}

void ModeLattice::channel_action(ChannelState state, int big_cycle, int inner_cycle) {
  if (state == ChannelState::kTransparent) return;
  const long double mass = channel_ * channel_;
  channel_ = 0.0L;
  record(state == ChannelState::kBlockedByBob ? SinkKind::kBobAbsorber
                                              : SinkKind::kNoiseAbsorber,
         big_cycle, inner_cycle, mass);
  check();
}

void ModeLattice::collect_d3(int big_cycle) {
  const long double mass = channel_ * channel_;
  channel_ = 0.0L;
  if (mass != 0.0L) record(SinkKind::kD3, big_cycle, -1, mass);
  check();
}

void ModeLattice::terminate() {
  d1_ = outer_arm_ * outer_arm_;
  d2_ = inner_arm_ * inner_arm_;
  outer_arm_ = 0.0L;
  inner_arm_ = 0.0L;
  terminated_ = true;
  check();
}

TripartiteAmplitude ModeLattice::active() const {
  return {static_cast<double>(outer_arm_), static_cast<double>(inner_arm_),
          static_cast<double>(channel_)};
}

double ModeLattice::channel_occupation() const {
  return static_cast<double>(channel_ * channel_);
}

double ModeLattice::accounted_total() const {
  const long double live =
      outer_arm_ * outer_arm_ + inner_arm_ * inner_arm_ + channel_ * channel_;
  return static_cast<double>(live + sink_total_.value() + d1_ + d2_);
}

OutcomeDistribution ModeLattice::distribution() const {
  if (!terminated_) {
    throw std::logic_error("ModeLattice: distribution requested before terminate()");
  }
  OutcomeDistribution out;
  out.d1 = static_cast<double>(d1_);
  out.d2 = static_cast<double>(d2_);
  out.d3 = static_cast<double>(d3_total_.value());
  out.bob = static_cast<double>(bob_total_.value());
  out.noise = static_cast<double>(noise_total_.value());
  return out;
}

void ModeLattice::record(SinkKind kind, int big_cycle, int inner_cycle, long double mass) {
  if (mass < 0.0L) throw std::logic_error("ModeLattice: negative sink mass");
  sinks_.push_back({kind, big_cycle, inner_cycle, static_cast<double>(mass)});
  sink_total_.add(mass);
  switch (kind) {
    case SinkKind::kD3: d3_total_.add(mass); break;
    case SinkKind::kBobAbsorber: bob_total_.add(mass); break;
    case SinkKind::kNoiseAbsorber: noise_total_.add(mass); break;
  }
}

void ModeLattice::check() const {
  const double total = accounted_total();
  if (std::fabs(total - 1.0) > kStepTolerance) {
    throw std::logic_error("ModeLattice: conservation violated, accounted total " +
                           std::to_string(total));
  }
}

OutcomeDistribution simulate_exact(const ProtocolParams& params,
                                   const BlockingSchedule& schedule) {
  check_dimensions(params, schedule);
  ModeLattice lattice(params);
  walk(lattice, params, schedule, [](ModeLattice&) {});
  return lattice.distribution();
}

std::vector<double> leak_trace(const ProtocolParams& params,
                               const BlockingSchedule& schedule) {
  check_dimensions(params, schedule);
  std::vector<double> trace;
  const int chains = params.outer_cycles - (params.final_inner_chain ? 0 : 1);
  trace.reserve(static_cast<std::size_t>(chains) * params.inner_cycles);
  ModeLattice lattice(params);
  walk(lattice, params, schedule,
       [&trace](ModeLattice& l) { trace.push_back(l.channel_occupation()); });
  return trace;
}

}  // namespace cqze
