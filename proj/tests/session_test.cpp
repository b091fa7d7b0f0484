#include "doctest.h"

#include <cmath>
#include <vector>

#include "cqze/rng.hpp"
#include "cqze/session.hpp"

using namespace cqze;

namespace {

SessionConfig base_config(int outer, int inner, std::uint64_t seed) {
  SessionConfig config;
  config.params = ProtocolParams::nominal(outer, inner);
  config.noise = {0.0, seed, 1};
  config.seed = seed;
  return config;
}

std::vector<std::uint8_t> random_bits(std::size_t count, std::uint64_t seed) {
  UniformStream stream(substream_seed(seed, StreamDomain::kBitstream, 0));
  std::vector<std::uint8_t> bits;
  bits.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    bits.push_back(stream.next_unit() < 0.5 ? 0 : 1);
  }
  return bits;
}

}  // namespace

TEST_CASE("blind detectors erase every bit") {
  auto config = base_config(4, 8, 3);
  config.bits = {1, 0, 1};
  config.eta = 0.0;
  config.max_retries = 4;
  const SessionResult r = transmit(config);
  for (BitOutcome o : r.decoded) CHECK(o == BitOutcome::kErased);
  for (int attempts : r.attempts) CHECK(attempts == 5);
  CHECK(r.erasure_rate == 1.0);
  CHECK(r.throughput == 0.0);
  CHECK(r.ber == 0.0);
  CHECK(r.mutual_information == 0.0);
}

TEST_CASE("transmission is deterministic in the seed") {
  auto config = base_config(12, 40, 901);
  config.bits = random_bits(64, 901);
  config.noise.block_rate = 0.01;
  config.eta = 0.8;
  const SessionResult a = transmit(config);
  const SessionResult b = transmit(config);
  CHECK(a.decoded == b.decoded);
  CHECK(a.attempts == b.attempts);
  CHECK(a.ber == b.ber);
  CHECK(a.throughput == b.throughput);
  CHECK(a.mutual_information == b.mutual_information);

  config.seed = 902;
  const SessionResult c = transmit(config);
  CHECK((a.decoded != c.decoded || a.attempts != c.attempts));
}

TEST_CASE("single attempts at a mid-strength point succeed at the expected rate") {
  // All-zero message, one attempt per bit: each bit decodes correctly with
  // probability p_d1 = 0.906. 5000 bits put the expected count well inside
  // a +-3 sigma band of about 0.0041.
  auto config = base_config(25, 320, 11);
  config.bits.assign(5000, 0);
  config.max_retries = 0;
  const SessionResult r = transmit(config);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < r.decoded.size(); ++i) {
    if (r.decoded[i] == BitOutcome::kZero) ++correct;
  }
  const double fraction = static_cast<double>(correct) / 5000.0;
  CHECK(std::fabs(fraction - 0.906) < 0.0135);
  for (int attempts : r.attempts) CHECK(attempts == 1);
}

TEST_CASE("strong operating point delivers the message") {
  auto config = base_config(150, 10000, 77);
  config.bits = random_bits(64, 77);
  const SessionResult r = transmit(config);
  CHECK(r.ber <= 0.02);
  CHECK(r.erasure_rate <= 0.05);
  CHECK(r.throughput > 0.9);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < config.bits.size(); ++i) {
    if (r.decoded[i] != static_cast<BitOutcome>(config.bits[i])) ++mismatches;
  }
  CHECK(mismatches <= 1);
}

TEST_CASE("throughput scales linearly with detector sensitivity") {
  const double reference = [&] {
    auto config = base_config(150, 10000, 500);
    config.bits = random_bits(1500, 500);
    config.eta = 1.0;
    return transmit(config).throughput;
  }();
  for (double eta : {0.25, 0.5}) {
    auto config = base_config(150, 10000, 500);
    config.bits = random_bits(1500, 500);
    config.eta = eta;
    const double throughput = transmit(config).throughput;
    CHECK(std::fabs(throughput - eta * reference) <= 0.10 * eta * reference);
  }
}

TEST_CASE("result bookkeeping invariants") {
  auto config = base_config(8, 24, 4);
  config.bits = random_bits(200, 4);
  config.noise.block_rate = 0.02;
  config.max_retries = 3;
  const SessionResult r = transmit(config);
  CHECK(r.decoded.size() == config.bits.size());
  CHECK(r.attempts.size() == config.bits.size());
  std::uint64_t attempts = 0;
  for (int a : r.attempts) {
    CHECK(a >= 1);
    CHECK(a <= config.max_retries + 1);
    attempts += static_cast<std::uint64_t>(a);
  }
  CHECK(attempts == r.total_attempts);
  CHECK(r.throughput <= 1.0);
  CHECK(r.ber >= 0.0);
  CHECK(r.ber <= 1.0);
  CHECK(r.erasure_rate >= 0.0);
  CHECK(r.erasure_rate <= 1.0);
  CHECK(r.mutual_information >= 0.0);
}

TEST_CASE("golden regression: thousand random bits at the mid operating point") {
  // (M=50, N=1250), seed 7, noiseless, ideal detectors. Frozen from the
  // first computation of this configuration.
  auto config = base_config(50, 1250, 7);
  config.bits = random_bits(1000, 7);
  const SessionResult r = transmit(config);
  CHECK(r.ber == 0.0);
  CHECK(r.erasure_rate == 0.0);
  CHECK(r.total_attempts == 1053);
  CHECK(r.throughput == doctest::Approx(0.94966761633428298).epsilon(1e-12));
  CHECK(r.mutual_information == 0.0);
}

TEST_CASE("config validation") {
  auto config = base_config(2, 2, 0);
  CHECK_THROWS_AS(transmit(config), std::invalid_argument);  // empty bitstream
  config.bits = {0, 2};
  CHECK_THROWS_AS(transmit(config), std::invalid_argument);
  config.bits = {0, 1};
  config.eta = 1.0001;
  CHECK_THROWS_AS(transmit(config), std::invalid_argument);
  config.eta = 1.0;
  config.max_retries = -1;
  CHECK_THROWS_AS(transmit(config), std::invalid_argument);
  config.max_retries = 0;
  transmit(config);  // now valid
}
