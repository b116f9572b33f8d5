#pragma once

#include <stdexcept>
#include <string>

#include "l2uwe/dehaze.hpp"

namespace l2uwe {

enum class LightingMode { local_cg, global };

std::string to_string(LightingMode mode);
LightingMode lighting_mode_from_string(const std::string &name);

/// Invalid configuration value; `field` names the offending entry.
struct ConfigError : std::invalid_argument {
  std::string field;
  ConfigError(std::string field_name, const std::string &message)
      : std::invalid_argument(field_name + ": " + message), field(std::move(field_name)) {}
};

struct EnhanceConfig {
  int m_detail = 5;
  int m_bright = 30;
  double tolerance = 0.005;
  double omega = 0.95;
  double t0 = 0.1;
  int levels = 5;
  LightingMode lighting_mode = LightingMode::local_cg;
  double atmosphere_fraction = 0.002;
  int guided_radius = 16;
  double guided_eps = 1e-3;
  int guided_subsample = 4;
  bool dump_intermediates = false;
  bool metrics = false;

  void validate() const;  // throws ConfigError
  DehazeParams dehaze_params() const;
};

}  // namespace l2uwe
