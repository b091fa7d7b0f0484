#include "cqze/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cqze {

namespace {

constexpr std::size_t idx(Click c) { return static_cast<std::size_t>(c); }

std::array<double, kClickCategories> thin(const OutcomeDistribution& d, double eta) {
  std::array<double, kClickCategories> row{};
  row[idx(Click::kD1)] = eta * d.d1;
  row[idx(Click::kD2)] = eta * d.d2;
  row[idx(Click::kD3)] = d.d3;
  row[idx(Click::kAbsorbed)] = d.bob + d.noise;
  row[idx(Click::kInconclusive)] = (1.0 - eta) * (d.d1 + d.d2);
  return row;
}

}  // namespace

double ClickStatistics::wrong_click(Click detector) const {
  if (detector == Click::kD1) return joint[1][idx(Click::kD1)];
  if (detector == Click::kD2) return joint[0][idx(Click::kD2)];
  throw std::invalid_argument("wrong_click is defined for D1/D2 only");
}

double ClickStatistics::total() const {
  double t = 0.0;
  for (const auto& row : joint)
    for (double p : row) t += p;
  return t;
}

void ClickStatistics::validate() const {
  for (const auto& row : joint) {
    for (double p : row) {
      if (!(p >= 0.0)) throw std::logic_error("ClickStatistics: negative joint entry");
    }
  }
  if (std::fabs(total() - 1.0) > 1e-10) {
    throw std::logic_error("ClickStatistics: total deviates from 1 by " +
                           std::to_string(total() - 1.0));
  }
}

ClickStatistics build_statistics(const OutcomeDistribution& pass_dist,
                                 const OutcomeDistribution& block_dist, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("build_statistics: eta must be in [0, 1], got " +
                                std::to_string(eta));
  }
  ClickStatistics stats;
  const auto pass_row = thin(pass_dist, eta);
  const auto block_row = thin(block_dist, eta);
  for (std::size_t c = 0; c < kClickCategories; ++c) {
    stats.joint[0][c] = 0.5 * pass_row[c];
    stats.joint[1][c] = 0.5 * block_row[c];
  }
  return stats;
}

double mutual_information(const ClickStatistics& stats) {
  double info = 0.0;
  for (Click detector : {Click::kD1, Click::kD2}) {
    const double wrong = stats.wrong_click(detector);
    if (wrong == 0.0) continue;  // empty event contributes nothing
    const double marginal = stats.category_marginal(detector);
    if (marginal <= 0.0) {
      throw std::domain_error(
          "mutual_information: wrong-click probability without click mass");
    }
    info -= wrong * std::log2(marginal);
  }
  return info;
}

ErrorRates error_rates(const ClickStatistics& stats) {
  ErrorRates rates;
  rates.wrong_click_rate =
      stats.wrong_click(Click::kD1) + stats.wrong_click(Click::kD2);
  rates.inconclusive_rate = stats.category_marginal(Click::kInconclusive);
  const double conclusive =
      stats.category_marginal(Click::kD1) + stats.category_marginal(Click::kD2);
  if (conclusive <= 0.0) {
    throw std::domain_error("error_rates: no conclusive click mass, accuracy undefined");
  }
  const double correct = stats.joint[0][static_cast<std::size_t>(Click::kD1)] +
                         stats.joint[1][static_cast<std::size_t>(Click::kD2)];
  rates.conclusive_accuracy = correct / conclusive;
  return rates;
}

}  // namespace cqze
