#ifndef CQZE_PARAMS_HPP
#define CQZE_PARAMS_HPP

namespace cqze {

/// Configuration of one chained-interferometer run: M big (outer) cycles,
/// each containing N small (inner) cycles that touch the transmission
/// channel once per cycle.
///
/// Nominal rotation angles are pi/(2M) and pi/(2N). Rotator imperfections
/// are modelled as a per-cycle excess angle theta_K * s_K / K, so that after
/// K cycles the accumulated excess is s_K * theta_K.
struct ProtocolParams {
  int outer_cycles = 1;       // M >= 1
  int inner_cycles = 1;       // N >= 1
  double outer_angle = 0.0;   // radians per outer cycle, nominal pi/(2M)
  double inner_angle = 0.0;   // radians per inner cycle, nominal pi/(2N)
  double outer_error = 0.0;   // s_M, dimensionless imperfection factor
  double inner_error = 0.0;   // s_N
  // When true an inner chain also runs after the last outer splitter, so the
  // D2 port sees the chain-processed amplitude instead of the splitter
  // output. Off by default; the published operating points use the default.
  bool final_inner_chain = false;

  /// Params with exact nominal angles for (M, N) and a common imperfection
  /// factor s applied to both rotators.
  static ProtocolParams nominal(int outer_cycles, int inner_cycles, double s = 0.0);

  double effective_outer_angle() const {
    return outer_angle + outer_error * (outer_angle / outer_cycles);
  }
  double effective_inner_angle() const {
    return inner_angle + inner_error * (inner_angle / inner_cycles);
  }

  /// Throws std::invalid_argument on nonpositive cycle counts or
  /// non-finite angles/factors.
  void validate() const;
};

}  // namespace cqze

#endif  // CQZE_PARAMS_HPP
