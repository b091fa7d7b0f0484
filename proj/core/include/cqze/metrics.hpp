#ifndef CQZE_METRICS_HPP
#define CQZE_METRICS_HPP

#include <array>
#include <cstddef>

#include "cqze/distribution.hpp"

namespace cqze {

/// Where one transmitted photon ended up, as seen by the sender.
/// kAbsorbed covers everything swallowed in the channel or at the receiver
/// (no sender-side click); kInconclusive is a D1/D2 arrival the detector
/// failed to register.
enum class Click : std::size_t {
  kD1 = 0,
  kD2 = 1,
  kD3 = 2,
  kAbsorbed = 3,
  kInconclusive = 4,
};

constexpr std::size_t kClickCategories = 5;

/// Joint probabilities P(bit sent, click category) under equiprobable bits.
struct ClickStatistics {
  // joint[b][c]: bit b in {0, 1}, category c per Click.
  std::array<std::array<double, kClickCategories>, 2> joint{};

  double category_marginal(Click c) const {
    return joint[0][static_cast<std::size_t>(c)] + joint[1][static_cast<std::size_t>(c)];
  }

  /// P(y = D_i): probability that detector i fires for the wrong bit
  /// (D1 while 1 was sent, D2 while 0 was sent).
  double wrong_click(Click detector) const;

  double total() const;

  /// Throws std::logic_error on negative entries or a total off 1 by more
  /// than 1e-10.
  void validate() const;
};

/// Joins the per-bit outcome distributions into click statistics with
/// equal bit priors, applying detector sensitivity eta to the D1/D2 masses
/// only: a fraction (1 - eta) of each becomes inconclusive, while channel
/// monitors and absorbers are treated as ideal.
ClickStatistics build_statistics(const OutcomeDistribution& pass_dist,
                                 const OutcomeDistribution& block_dist, double eta);

/// Wrong-click information measure, in bits:
///   I = -sum_{i=1,2} P(y = D_i) * log2 P(x = D_i)
/// where P(x = D_i) is the detector's click marginal. Zero when no wrong
/// clicks occur; throws std::domain_error if a wrong-click event has
/// positive probability while its detector marginal is zero.
double mutual_information(const ClickStatistics& stats);

struct ErrorRates {
  double wrong_click_rate = 0.0;    // P(y=D1) + P(y=D2)
  double inconclusive_rate = 0.0;   // total inconclusive mass
  double conclusive_accuracy = 0.0; // correct clicks / all D1-or-D2 clicks
};

/// Summary rates; throws std::domain_error when no D1/D2 click mass exists
/// (accuracy undefined).
ErrorRates error_rates(const ClickStatistics& stats);

}  // namespace cqze

#endif  // CQZE_METRICS_HPP
