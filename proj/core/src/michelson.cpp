#include "cqze/michelson.hpp"

#include <cmath>
#include <stdexcept>

#include "cqze/kahan.hpp"

namespace cqze {

namespace {

struct SprPass {
  double c;
  double s;
  explicit SprPass(double beta) : c(std::cos(beta)), s(std::sin(beta)) {}

  void apply(double& h, double& v) const {
    const double nh = c * h - s * v;
    const double nv = s * h + c * v;
    h = nh;
    v = nv;
  }
};

}  // namespace

PolarizationAmplitude spr_rotate(PolarizationAmplitude state, double beta) {
  const SprPass pass(beta);
  pass.apply(state.h, state.v);
  return state;
}

OutcomeDistribution run_michelson(const ProtocolParams& params, int bob_bit) {
  params.validate();
  if (bob_bit != 0 && bob_bit != 1) {
    throw std::invalid_argument("run_michelson: bob_bit must be 0 or 1");
  }

  // Two rotator passes per cycle: half the effective per-cycle angle each.
  const SprPass outer(params.effective_outer_angle() * 0.5);
  const SprPass inner(params.effective_inner_angle() * 0.5);
  const bool bob_blocks = bob_bit == 1;

  double h1 = 1.0;  // outer H component, exits to D1
  double v1 = 0.0;  // outer V component, exits to D2
  KahanSum<double> d3;
  KahanSum<double> bob;

  const int total_chains = params.outer_cycles - (params.final_inner_chain ? 0 : 1);
  for (int m = 0; m < params.outer_cycles; ++m) {
    outer.apply(h1, v1);
    outer.apply(h1, v1);
    if (m >= total_chains) continue;  // last cycle exits straight to D1/D2

    // The V component is reflected into the inner interferometer and makes
    // N cycles there; its Bob-side component is fed to the channel once per
    // cycle.
    double h2 = 0.0;
    double v2 = v1;
    for (int n = 0; n < params.inner_cycles; ++n) {
      inner.apply(h2, v2);
      inner.apply(h2, v2);
      if (bob_blocks) {
        bob.add(h2 * h2);
        h2 = 0.0;
      }
    }
    d3.add(h2 * h2);  // Bob-side remainder exits to a D3 monitor
    v1 = v2;
  }

  OutcomeDistribution out;
  out.d1 = h1 * h1;
  out.d2 = v1 * v1;
  out.d3 = d3.value();
  out.bob = bob.value();
  return out;
}

}  // namespace cqze
