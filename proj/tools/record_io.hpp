#ifndef CQZE_TOOLS_RECORD_IO_HPP
#define CQZE_TOOLS_RECORD_IO_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cqze/distribution.hpp"

#include "json.hpp"

namespace cqze::tools {

/// One output row of the run/sweep commands. Standard-error fields are zero
/// for deterministic (noise-free) runs.
struct RunRecord {
  int outer_cycles = 0;
  int inner_cycles = 0;
  double imperfection = 0.0;  // s
  double noise_rate = 0.0;    // B
  double eta = 1.0;
  int bob_bit = 0;
  OutcomeDistribution dist;
  OutcomeDistribution std_error;
  double mutual_information = 0.0;
  std::uint64_t seed = 0;
};

/// 12-significant-digit rendering used for every floating-point value we
/// emit; CSV and JSON both go through it, so the two formats parse back to
/// identical doubles and repeated runs are byte-stable.
std::string format_value(double v);

/// Column names, in emission order.
const std::vector<std::string>& record_columns();

std::string to_csv(std::span<const RunRecord> records);

nlohmann::ordered_json record_json(const RunRecord& record);

/// Single object for one record, array of objects otherwise.
std::string to_json(std::span<const RunRecord> records);

}  // namespace cqze::tools

#endif  // CQZE_TOOLS_RECORD_IO_HPP
