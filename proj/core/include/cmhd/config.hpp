#pragma once

#include <cstdint>
#include <string>

#include "cmhd/grid.hpp"
#include "cmhd/thermo.hpp"

namespace cmhd {

/// Run configuration shared by the CLI subcommands. Serializes to an
/// ordered key=value text format with an explicit schema version; the
/// canonical form round-trips byte-identically.
struct RunConfig {
  static constexpr const char* kSchema = "cmhd-config-v1";

  ThermoParams thermo;
  Grid grid;

  double kappa = 0.1;
  double eps = 0.1;

  // scheme parameters
  double theta0 = 8.0;
  double delta = 0.1;
  int alpha = 7;
  int steps = 5;
  double T = 0.1;

  // scenario inputs
  std::string scenario = "default";
  double phi0_amplitude = 0.0;
  int phi0_mode = 1;
  double perturb_amplitude = 0.01;

  std::string output_dir = "out";
  std::uint64_t seed = 1;

  void validate() const;
  std::string serialize() const;
  static RunConfig parse(const std::string& text);
  static RunConfig load(const std::string& path);
  void save(const std::string& path) const;
};

}  // namespace cmhd
