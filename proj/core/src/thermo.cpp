#include "cmhd/thermo.hpp"

#include <cmath>

namespace cmhd {

double density(double p, double S, const ThermoParams& tp) {
  if (p <= 0) throw ValidationError("density: pressure must be positive");
  return tp.A * std::pow(p, 1.0 / tp.gamma) * std::exp(-S / tp.gamma);
}

}  // namespace cmhd
