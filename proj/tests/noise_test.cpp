#include "doctest.h"

#include <cmath>
#include <string>

#include "cqze/lattice.hpp"
#include "cqze/noise.hpp"

using namespace cqze;

namespace {

std::string fingerprint(const BlockingSchedule& s) {
  std::string out;
  for (int m = 0; m < s.outer_cycles(); ++m) {
    for (int n = 0; n < s.inner_cycles(); ++n) {
      out += is_blocked(s.at(m, n)) ? '1' : '0';
    }
  }
  return out;
}

}  // namespace

TEST_CASE("sample_schedule degenerate rates") {
  const auto params = ProtocolParams::nominal(3, 5);

  SUBCASE("zero rate never obstructs") {
    const NoiseModel model{0.0, 11, 1};
    UniformStream stream(substream_seed(11, StreamDomain::kNoiseTrial, 0));
    const auto schedule = sample_schedule(params, model, stream, 0);
    CHECK(schedule.blocked_count() == 0);
  }
  SUBCASE("unit rate obstructs every pass, even against Bob's block") {
    const NoiseModel model{1.0, 11, 1};
    UniformStream stream(substream_seed(11, StreamDomain::kNoiseTrial, 0));
    const auto schedule = sample_schedule(params, model, stream, 1);
    for (int m = 0; m < 3; ++m) {
      for (int n = 0; n < 5; ++n) {
        CHECK(schedule.at(m, n) == ChannelState::kBlockedByNoise);
      }
    }
  }
}

TEST_CASE("sample_schedule is reproducible and layered under Bob's bit") {
  const auto params = ProtocolParams::nominal(4, 8);
  const NoiseModel model{0.5, 7, 1};

  UniformStream s1(substream_seed(7, StreamDomain::kNoiseTrial, 0));
  UniformStream s2(substream_seed(7, StreamDomain::kNoiseTrial, 0));
  const auto pass_schedule = sample_schedule(params, model, s1, 0);
  const auto again = sample_schedule(params, model, s2, 0);
  CHECK(fingerprint(pass_schedule) == fingerprint(again));

  // Regression pin for the exact draw sequence of this seed.
  CHECK(fingerprint(pass_schedule) == "00110000011100000010100010011111");
  CHECK(pass_schedule.blocked_count() == 13);

  // Same draws with Bob blocking: obstructed passes stay obstructed, the
  // rest become Bob's blocks.
  UniformStream s3(substream_seed(7, StreamDomain::kNoiseTrial, 0));
  const auto block_schedule = sample_schedule(params, model, s3, 1);
  for (int m = 0; m < 4; ++m) {
    for (int n = 0; n < 8; ++n) {
      if (pass_schedule.at(m, n) == ChannelState::kBlockedByNoise) {
        CHECK(block_schedule.at(m, n) == ChannelState::kBlockedByNoise);
      } else {
        CHECK(block_schedule.at(m, n) == ChannelState::kBlockedByBob);
      }
    }
  }
}

TEST_CASE("monte_carlo with zero noise collapses to the single exact run") {
  const auto params = ProtocolParams::nominal(6, 10);
  const NoiseModel model{0.0, 99, 64};
  const auto mc = monte_carlo(params, 0, model);
  const auto exact =
      simulate_exact(params, BlockingSchedule(6, 10, ChannelState::kTransparent));
  CHECK(mc.mean.d1 == exact.d1);
  CHECK(mc.mean.d2 == exact.d2);
  CHECK(mc.mean.d3 == exact.d3);
  CHECK(mc.mean.bob == exact.bob);
  CHECK(mc.mean.noise == exact.noise);
  CHECK(mc.std_error.d1 == 0.0);
  CHECK(mc.std_error.d2 == 0.0);
  CHECK(mc.std_error.d3 == 0.0);
  CHECK(mc.trials == 64);
  CHECK(mc.seed == 99);
}

TEST_CASE("monte_carlo is bit-deterministic in its seed") {
  const auto params = ProtocolParams::nominal(5, 12);
  const NoiseModel model{0.05, 2024, 200};
  const auto a = monte_carlo(params, 0, model);
  const auto b = monte_carlo(params, 0, model);
  CHECK(a.mean.d1 == b.mean.d1);
  CHECK(a.mean.d3 == b.mean.d3);
  CHECK(a.std_error.d1 == b.std_error.d1);
  CHECK(a.std_error.noise == b.std_error.noise);

  const NoiseModel other{0.05, 2025, 200};
  const auto c = monte_carlo(params, 0, other);
  CHECK(a.mean.d1 != c.mean.d1);  // different seed, different draws
}

TEST_CASE("blocking an already-blocked channel changes nothing at Alice's end") {
  const auto params = ProtocolParams::nominal(8, 16);
  const auto reference =
      simulate_exact(params, BlockingSchedule(8, 16, ChannelState::kBlockedByBob));
  for (double rate : {0.05, 0.3, 1.0}) {
    const NoiseModel model{rate, 5, 50};
    const auto mc = monte_carlo(params, 1, model);
    // The amplitude path is identical for every trial; only sink labels move.
    CHECK(mc.mean.d1 == reference.d1);
    CHECK(mc.mean.d2 == reference.d2);
    CHECK(mc.mean.d3 == reference.d3);
    CHECK(mc.std_error.d1 == 0.0);
    CHECK(mc.std_error.d2 == 0.0);
    CHECK(mc.mean.bob + mc.mean.noise ==
          doctest::Approx(reference.bob + reference.noise).epsilon(1e-13));
    CHECK(mc.mean.bob <= reference.bob + 1e-15);
  }
}

TEST_CASE("mean outcome remains a distribution under noise") {
  const auto params = ProtocolParams::nominal(10, 24);
  const NoiseModel model{0.02, 31, 300};
  const auto mc = monte_carlo(params, 0, model);
  mc.mean.validate();
  CHECK(mc.mean.noise > 0.0);
  CHECK(mc.std_error.d1 >= 0.0);
  CHECK(mc.mean.d1 < run_protocol(params, 0).d1);
}

TEST_CASE("noise degrades the pass-case D1 rate monotonically") {
  const auto params = ProtocolParams::nominal(25, 320);
  const double clean = run_protocol(params, 0).d1;
  double previous_mean = 1.0;
  double previous_se = 0.0;
  double last = 1.0;
  for (double rate : {0.0, 0.001, 0.005, 0.02}) {
    const NoiseModel model{rate, 123, 250};
    const auto mc = monte_carlo(params, 0, model);
    const double slack =
        3.0 * std::sqrt(previous_se * previous_se + mc.std_error.d1 * mc.std_error.d1);
    CHECK(mc.mean.d1 <= previous_mean + slack);
    previous_mean = mc.mean.d1;
    previous_se = mc.std_error.d1;
    last = mc.mean.d1;
  }
  CHECK(last < clean - 0.1);  // heavy blocking visibly degrades the link
}

TEST_CASE("golden regression: reference point under light noise") {
  // (M=25, N=320), Bob passing, B = 0.002, 10000 trials, seed 424242.
  // Values frozen from the first computation of this configuration.
  const auto params = ProtocolParams::nominal(25, 320);
  const NoiseModel model{0.002, 424242, 10000};
  const auto mc = monte_carlo(params, 0, model);
  CHECK(mc.mean.d1 == doctest::Approx(0.87039786395619967).epsilon(1e-12));
  CHECK(mc.std_error.d1 == doctest::Approx(1.0951025541431815e-4).epsilon(1e-9));
  CHECK(mc.mean.bob == 0.0);
  CHECK(mc.mean.d1 > 0.5);  // the link still works at this rate
}

TEST_CASE("noise model validation") {
  CHECK_THROWS_AS((NoiseModel{-0.1, 0, 10}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((NoiseModel{1.5, 0, 10}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((NoiseModel{0.5, 0, 0}.validate()), std::invalid_argument);
  const auto params = ProtocolParams::nominal(2, 2);
  const NoiseModel model{0.5, 1, 1};
  UniformStream stream(1);
  CHECK_THROWS_AS(sample_schedule(params, model, stream, 2), std::invalid_argument);
}
