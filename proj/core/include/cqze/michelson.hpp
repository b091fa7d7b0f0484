#ifndef CQZE_MICHELSON_HPP
#define CQZE_MICHELSON_HPP

#include "cqze/distribution.hpp"
#include "cqze/params.hpp"

namespace cqze {

/// Real H/V polarization amplitudes of a single photon.
struct PolarizationAmplitude {
  double h = 0.0;
  double v = 0.0;

  double norm2() const { return h * h + v * v; }
};

/// One pass through a switchable polarization rotator:
/// |H> -> cos b |H> + sin b |V>,  |V> -> cos b |V> - sin b |H>.
PolarizationAmplitude spr_rotate(PolarizationAmplitude state, double beta);

/// Tandem-Michelson realization of the protocol, simulated at the level of
/// per-cycle polarization rotations and beam routing (optical path lengths
/// and delays are taken as ideal and are not modelled).
///
/// Per outer cycle the photon traverses the outer rotator twice, for a net
/// rotation of the effective outer angle; the V component produced by the
/// cycle is diverted by the polarizing splitter into the inner
/// interferometer, where it makes N double-pass cycles of its own. Inside
/// the inner interferometer the component rotated toward Bob's side is
/// either reflected back (bob_bit 0) or converted and captured at his
/// blocking detector (bob_bit 1); whatever is left on Bob's side when the
/// inner mirror switches off exits to a D3 monitor. After M outer cycles
/// the outer mirror switches off and the H and V components exit to D1 and
/// D2. Rotator imperfections enter as half the per-cycle excess angle on
/// each pass. Field-by-field this reproduces run_protocol.
OutcomeDistribution run_michelson(const ProtocolParams& params, int bob_bit);

}  // namespace cqze

#endif  // CQZE_MICHELSON_HPP
