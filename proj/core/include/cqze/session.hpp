#ifndef CQZE_SESSION_HPP
#define CQZE_SESSION_HPP

#include <cstdint>
#include <vector>

#include "cqze/noise.hpp"
#include "cqze/params.hpp"

namespace cqze {

/// One message transmission: Bob encodes each bit as pass (0) or block (1),
/// Alice decodes D1 as 0 and D2 as 1 and retransmits on anything
/// inconclusive.
struct SessionConfig {
  std::vector<std::uint8_t> bits;  // values 0/1
  ProtocolParams params;
  NoiseModel noise;      // only block_rate is consulted; sampling is driven
                         // by the session seed below
  double eta = 1.0;      // D1/D2 detector sensitivity
  int max_retries = 10;  // extra attempts per bit before declaring erasure
  std::uint64_t seed = 0;

  void validate() const;
};

enum class BitOutcome : std::uint8_t { kZero = 0, kOne = 1, kErased = 2 };

struct SessionResult {
  std::vector<BitOutcome> decoded;  // one entry per input bit
  std::vector<int> attempts;        // photons spent per bit
  std::uint64_t total_attempts = 0;
  double ber = 0.0;                 // error rate over non-erased bits
  double erasure_rate = 0.0;
  double throughput = 0.0;          // conclusive bits per attempted photon
  double mutual_information = 0.0;  // wrong-click measure over the session's
                                    // empirical per-bit click statistics
};

/// Runs the whole session. Each bit consumes its own random substream
/// derived from (seed, bit index), so results are independent of processing
/// order and bit-identical for a fixed config. Per attempt, one outcome is
/// drawn categorically from the exact distribution of that attempt's
/// channel (a freshly sampled schedule when the noise rate is positive),
/// then detector sensitivity is applied to D1/D2 arrivals.
SessionResult transmit(const SessionConfig& config);

}  // namespace cqze

#endif  // CQZE_SESSION_HPP
