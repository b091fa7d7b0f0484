#include "cqze/session.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "cqze/lattice.hpp"
#include "cqze/metrics.hpp"
#include "cqze/rng.hpp"

namespace cqze {

namespace {

Click sample_category(const OutcomeDistribution& dist, double u) {
  const std::array<std::pair<Click, double>, 5> order{{{Click::kD1, dist.d1},
                                                       {Click::kD2, dist.d2},
                                                       {Click::kD3, dist.d3},
                                                       {Click::kAbsorbed, dist.bob},
                                                       {Click::kAbsorbed, dist.noise}}};
  for (const auto& [category, p] : order) {
    if (u < p) return category;
    u -= p;
  }
  // Unreachable up to the ~1e-15 gap between the distribution total and 1.
  return Click::kAbsorbed;
}

}  // namespace

void SessionConfig::validate() const {
  if (bits.empty()) {
    throw std::invalid_argument("SessionConfig: bitstream must be non-empty");
  }
  for (std::uint8_t b : bits) {
    if (b != 0 && b != 1) {
      throw std::invalid_argument("SessionConfig: bits must be 0 or 1");
    }
  }
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("SessionConfig: eta must be in [0, 1]");
  }
  if (max_retries < 0 || max_retries > 1000) {
    throw std::invalid_argument("SessionConfig: max_retries must be in [0, 1000]");
  }
  params.validate();
  noise.validate();
}

SessionResult transmit(const SessionConfig& config) {
  config.validate();
  const bool noisy = config.noise.block_rate > 0.0;

  // Noiseless per-bit distributions are attempt-invariant; compute on demand.
  std::array<std::optional<OutcomeDistribution>, 2> noiseless;
  const auto constant_distribution = [&](int bit) -> const OutcomeDistribution& {
    auto& slot = noiseless[static_cast<std::size_t>(bit)];
    if (!slot) {
      const auto fill = bit == 1 ? ChannelState::kBlockedByBob : ChannelState::kTransparent;
      slot = simulate_exact(config.params,
                            BlockingSchedule(config.params.outer_cycles,
                                             config.params.inner_cycles, fill));
    }
    return *slot;
  };

  SessionResult result;
  result.decoded.resize(config.bits.size(), BitOutcome::kErased);
  result.attempts.resize(config.bits.size(), 0);

  // counts[bit][category] over every attempt, conclusive or not; the
  // session's empirical click statistics are derived from these.
  std::array<std::array<std::uint64_t, kClickCategories>, 2> counts{};

  for (std::size_t i = 0; i < config.bits.size(); ++i) {
    const int bit = config.bits[i];
    UniformStream stream(substream_seed(config.seed, StreamDomain::kSessionBit, i));

    for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
      ++result.attempts[i];
      ++result.total_attempts;

      Click outcome;
      if (noisy) {
        const BlockingSchedule schedule =
            sample_schedule(config.params, config.noise, stream, bit);
        outcome = sample_category(simulate_exact(config.params, schedule),
                                  stream.next_unit());
      } else {
        outcome = sample_category(constant_distribution(bit), stream.next_unit());
      }
      if (outcome == Click::kD1 || outcome == Click::kD2) {
        const bool registered = stream.next_unit() < config.eta;
        if (!registered) outcome = Click::kInconclusive;
      }
      ++counts[static_cast<std::size_t>(bit)][static_cast<std::size_t>(outcome)];

      if (outcome == Click::kD1) {
        result.decoded[i] = BitOutcome::kZero;
        break;
      }
      if (outcome == Click::kD2) {
        result.decoded[i] = BitOutcome::kOne;
        break;
      }
      // D3 click, channel absorption, or a missed detection: retransmit.
    }
  }

  std::size_t erased = 0;
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < config.bits.size(); ++i) {
    if (result.decoded[i] == BitOutcome::kErased) {
      ++erased;
    } else if (static_cast<int>(result.decoded[i]) != config.bits[i]) {
      ++wrong;
    }
  }
  const std::size_t conclusive = config.bits.size() - erased;
  result.erasure_rate = static_cast<double>(erased) / config.bits.size();
  result.ber = conclusive == 0 ? 0.0 : static_cast<double>(wrong) / conclusive;
  result.throughput = static_cast<double>(conclusive) / result.total_attempts;

  // Empirical joint statistics over all attempts. Bit priors here are the
  // realized attempt frequencies, not the idealized one-half split, which
  // keeps the table an honest summary of what this session actually sent.
  ClickStatistics stats;
  for (std::size_t b = 0; b < 2; ++b) {
    for (std::size_t c = 0; c < kClickCategories; ++c) {
      stats.joint[b][c] =
          static_cast<double>(counts[b][c]) / static_cast<double>(result.total_attempts);
    }
  }
  result.mutual_information = mutual_information(stats);

  return result;
}

}  // namespace cqze
