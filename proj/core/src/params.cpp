#include "cqze/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cqze {

ProtocolParams ProtocolParams::nominal(int outer_cycles, int inner_cycles, double s) {
  ProtocolParams p;
  p.outer_cycles = outer_cycles;
  p.inner_cycles = inner_cycles;
  if (outer_cycles >= 1) p.outer_angle = M_PI / (2.0 * outer_cycles);
  if (inner_cycles >= 1) p.inner_angle = M_PI / (2.0 * inner_cycles);
  p.outer_error = s;
  p.inner_error = s;
  p.validate();
  return p;
}

void ProtocolParams::validate() const {
  if (outer_cycles < 1) {
    throw std::invalid_argument("ProtocolParams: outer cycle count must be >= 1, got " +
                                std::to_string(outer_cycles));
  }
  if (inner_cycles < 1) {
    throw std::invalid_argument("ProtocolParams: inner cycle count must be >= 1, got " +
                                std::to_string(inner_cycles));
  }
  if (!std::isfinite(outer_angle) || !std::isfinite(inner_angle)) {
    throw std::invalid_argument("ProtocolParams: rotation angles must be finite");
  }
  if (!std::isfinite(outer_error) || !std::isfinite(inner_error)) {
    throw std::invalid_argument("ProtocolParams: imperfection factors must be finite");
  }
}

}  // namespace cqze
